#include "abelian/realizations.hpp"

#include <algorithm>
#include <string>

#include "abelian/errors.hpp"

namespace abelian {

namespace {

LambdaPrime make_lambda_prime(u64 q) {
  LambdaPrime lp{q, {}};
  if (q > 2) {
    for (const auto& pp : factor(q - 1)) lp.factors.push_back(pp.prime);
  }
  return lp;
}

bool in_lambda(u64 q) { return is_prime(q) && (q == 2 || is_squarefree(q - 1)); }

std::vector<SplittingData> tabulate(const AbelianField& field, std::vector<u64> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<SplittingData> table;
  for (u64 p : primes) table.push_back(splitting_data(field, p));
  return table;
}

}  // namespace

std::vector<LambdaPrime> lambda_primes(std::size_t count) {
  std::vector<LambdaPrime> out;
  for (u64 q = 2; out.size() < count; q = next_prime(q)) {
    if (in_lambda(q)) out.push_back(make_lambda_prime(q));
  }
  return out;
}

std::vector<LambdaPrime> nontrivial_lambda_primes(std::size_t count) {
  std::vector<LambdaPrime> out;
  for (u64 q = 3; out.size() < count; q = next_prime(q)) {
    if (in_lambda(q)) out.push_back(make_lambda_prime(q));
  }
  return out;
}

bool RealizationReport::all_verdicts_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds; });
}

std::optional<u64> RealizationReport::local_degree_at(u64 prime) const {
  for (const auto& s : local_degree_table) {
    if (s.prime == prime) return s.local_degree;
  }
  return std::nullopt;
}

RealizationReport unbounded_realization(unsigned depth, std::span<const u64> probe_primes, const Config& config) {
  for (u64 p : probe_primes) {
    if (!is_prime(p)) throw ValidationError("probe " + std::to_string(p) + " is not prime");
  }
  RealizationReport report{RealizationKind::unbounded, depth, {}, {}, {}, rationals(config), {}, {}, 2, {}};
  u64 expected_degree = 1;
  unsigned level = 1;
  for (const auto& lp : nontrivial_lambda_primes(depth)) {
    report.lambda_primes.push_back(lp.q);
    AbelianField component = cyclotomic_field(lp.q, config);
    report.compositum = compositum(report.compositum, component);
    report.components.push_back({level++, 1, lp.q, lp.q - 1, std::move(component), std::nullopt});
    expected_degree *= lp.q - 1;
  }
  report.local_degree_table = tabulate(report.compositum, {probe_primes.begin(), probe_primes.end()});
  report.roots_of_unity = roots_of_unity(report.compositum);
  report.verdicts.push_back({"compositum_degree", report.compositum.degree() == expected_degree});
  if (depth > 0) {
    report.verdicts.push_back({"roots_of_unity_at_least_2q_k", report.roots_of_unity >= 2 * report.lambda_primes.back()});
  }
  return report;
}

RealizationReport bounded_realization(unsigned depth, std::span<const u64> targets, std::span<const u64> probe_primes,
                                      const Config& config) {
  if (targets.size() < depth) {
    throw ValidationError("bounded realization of depth " + std::to_string(depth) + " needs " +
                          std::to_string(depth) + " target primes");
  }
  for (u64 p : targets) {
    if (!is_prime(p)) throw ValidationError("target " + std::to_string(p) + " is not prime");
  }
  for (u64 p : probe_primes) {
    if (!is_prime(p)) throw ValidationError("probe " + std::to_string(p) + " is not prime");
  }
  RealizationReport report{RealizationKind::bounded, depth, {}, {}, {}, rationals(config), {}, {}, 2, {}};
  report.target_primes.assign(targets.begin(), targets.begin() + depth);

  bool degrees_ok = true;
  bool splitting_ok = true;
  u64 expected_degree = 1;
  unsigned level = 1;
  for (const auto& lp : nontrivial_lambda_primes(depth)) {
    report.lambda_primes.push_back(lp.q);
    const std::vector<u64> split(report.target_primes.begin(), report.target_primes.begin() + level);
    unsigned index = 1;
    for (u64 gamma : lp.factors) {
      ConstructionTrace trace = construct_cyclic({gamma, split, report.compositum, std::nullopt});
      AbelianField field = trace.result;
      degrees_ok = degrees_ok && field.degree() == gamma;
      for (u64 p : split) splitting_ok = splitting_ok && totally_split(field, p);
      report.compositum = compositum(report.compositum, field);
      report.components.push_back({level, index++, lp.q, gamma, std::move(field), std::move(trace)});
    }
    expected_degree *= lp.q - 1;
    ++level;
  }

  bool disjoint = true;
  for (std::size_t a = 0; a < report.components.size(); ++a) {
    for (std::size_t b = a + 1; b < report.components.size(); ++b) {
      disjoint = disjoint && linearly_disjoint(report.components[a].field, report.components[b].field);
    }
  }

  std::vector<u64> primes(report.target_primes);
  primes.insert(primes.end(), probe_primes.begin(), probe_primes.end());
  report.local_degree_table = tabulate(report.compositum, primes);

  u64 bound = 1;
  for (unsigned n = 0; n < depth; ++n) {
    bound *= report.lambda_primes[n] - 1;
    const u64 p = report.target_primes[n];
    const u64 computed = *report.local_degree_at(p);
    report.claimed_bounds.push_back({p, bound, computed, computed <= bound});
  }
  report.roots_of_unity = roots_of_unity(report.compositum);

  const bool bounds_ok = std::all_of(report.claimed_bounds.begin(), report.claimed_bounds.end(),
                                     [](const BoundClaim& c) { return c.holds; });
  report.verdicts = {
      {"component_degrees", degrees_ok},
      {"components_split_targets", splitting_ok},
      {"pairwise_disjoint", disjoint},
      {"compositum_degree", report.compositum.degree() == expected_degree},
      {"local_degree_bounds", bounds_ok},
  };
  if (depth > 0) {
    report.verdicts.push_back({"first_target_totally_split", *report.local_degree_at(report.target_primes[0]) == 1});
  }
  return report;
}

u64 staged_local_degree_bound(unsigned i, std::span<const u64> orders) {
  if (i == 0) throw ValidationError("stage index starts at 1");
  if (orders.size() + 1 < i) throw ValidationError("need the orders of the first i - 1 stages");
  u64 bound = 1;
  for (unsigned j = 0; j + 1 < i; ++j) {
    const u128 next = static_cast<u128>(bound) * orders[j];
    if (next >= kModulusLimit) throw CapExceeded("bound exceeds 2^62");
    bound = static_cast<u64>(next);
  }
  return bound;
}

}  // namespace abelian
