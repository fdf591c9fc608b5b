// Acceptance suite: one PASS/FAIL line per criterion, with wall-clock limits.
// Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "abelian/abelian_fields.hpp"
#include "abelian/dedekind.hpp"
#include "abelian/errors.hpp"
#include "abelian/grunwald.hpp"
#include "abelian/realizations.hpp"
#include "abelian/serialize.hpp"

using namespace abelian;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = elapsed < limit_seconds;
  const bool pass = out.ok && in_time;
  if (!pass) ++failures;
  std::printf("[%s] %2d %-44s %8.3fs (limit %gs)  %s%s\n", pass ? "PASS" : "FAIL", id, title, elapsed, limit_seconds,
              out.detail.c_str(), in_time ? "" : " [over time]");
  std::fflush(stdout);
}

bool brute_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool brute_squarefree(u64 n) {
  for (u64 d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

u64 brute_order(u64 x, u64 m) {
  u64 k = 1;
  for (u64 y = x % m; y != 1; y = y * x % m) ++k;
  return k;
}

std::string join(const std::vector<u64>& v) {
  std::string s;
  for (u64 x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

const std::vector<u64> kTargets{2, 3, 5};

std::vector<std::pair<u64, std::vector<u64>>> grunwald_cases() {
  std::vector<std::pair<u64, std::vector<u64>>> cases;
  const std::vector<u64> pool{2, 3, 5, 7, 11};
  std::vector<std::vector<u64>> subsets{{}};
  for (std::size_t i = 0; i < pool.size(); ++i) {
    subsets.push_back({pool[i]});
    for (std::size_t j = i + 1; j < pool.size(); ++j) subsets.push_back({pool[i], pool[j]});
  }
  for (u64 q : {2u, 3u, 5u, 7u})
    for (const auto& t : subsets) cases.emplace_back(q, t);
  return cases;
}

}  // namespace

int main() {
  criterion(1, "Lambda prefix of length 10", 1.0, [] {
    const json doc = to_json(lambda_primes(10));
    std::vector<u64> got, oracle;
    for (const auto& item : doc) got.push_back(item["q"].get<u64>());
    for (u64 q = 2; oracle.size() < 10; ++q)
      if (brute_prime(q) && brute_squarefree(q - 1)) oracle.push_back(q);
    const std::vector<u64> expected{2, 3, 7, 11, 23, 31, 43, 47, 59, 67};
    return Outcome{got == expected && oracle == expected, "got {" + join(got) + "}"};
  });

  criterion(2, "Eisenstein cubic discriminants p^2(32p-27)", 1.0, [] {
    bool ok = true;
    std::string detail;
    for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u}) {
      const mpz_class mp(static_cast<unsigned long>(p));
      const mpz_class d = discriminant(eisenstein_cubic(p));
      ok = ok && d == mp * mp * (32 * mp - 27) && is_eisenstein(eisenstein_cubic(p), p);
      detail += (detail.empty() ? "" : " ") + std::to_string(p) + ":" + d.get_str();
    }
    return Outcome{ok, detail};
  });

  criterion(3, "Unbounded truncations grow at p = 2", 30.0, [] {
    const std::vector<u64> probes{2, 3, 5, 7, 11, 13};
    std::vector<u64> at_two;
    std::map<u64, u64> previous;
    bool monotone = true;
    for (unsigned k = 1; k <= 4; ++k) {
      const auto r = unbounded_realization(k, probes);
      monotone = monotone && r.all_verdicts_hold();
      for (u64 p : probes) {
        const u64 d = *r.local_degree_at(p);
        monotone = monotone && d >= previous[p];
        previous[p] = d;
      }
      at_two.push_back(*r.local_degree_at(2));
    }
    // Frobenius-order lcm oracle
    std::vector<u64> oracle;
    u64 l = 1;
    for (u64 q : {3u, 7u, 11u, 23u}) oracle.push_back(l = std::lcm(l, brute_order(2, q)));
    const bool strict = at_two[0] < at_two[1] && at_two[1] < at_two[2] && at_two[2] < at_two[3];
    return Outcome{at_two == std::vector<u64>{2, 6, 30, 330} && at_two == oracle && strict && monotone,
                   "local degrees at 2: " + join(at_two) + (monotone ? ", monotone at p <= 13" : ", NOT monotone")};
  });

  criterion(4, "Bounded realization k = 3, S = (2,3,5)", 120.0, [] {
    const auto r = bounded_realization(3, kTargets);
    bool disjoint = true;
    for (std::size_t a = 0; a < r.components.size(); ++a)
      for (std::size_t b = a + 1; b < r.components.size(); ++b)
        disjoint = disjoint && intersection(r.components[a].field, r.components[b].field).is_rational();
    bool bounds = true;
    u64 product = 1;
    std::string detail = "degree " + std::to_string(r.compositum.degree()) + ", local/bound";
    for (unsigned n = 0; n < 3; ++n) {
      product *= r.lambda_primes[n] - 1;
      const u64 d = local_degree(r.compositum, kTargets[n]);
      bounds = bounds && d <= product;
      detail += " " + std::to_string(d) + "/" + std::to_string(product);
    }
    const bool ok = r.compositum.degree() == 120 && disjoint && bounds && local_degree(r.compositum, 2) == 1 &&
                    r.all_verdicts_hold();
    return Outcome{ok, detail};
  });

  criterion(5, "Roots of unity: bounded vs unbounded, k = 3", 10.0, [] {
    const u64 bounded = bounded_realization(3, kTargets).roots_of_unity;
    const u64 unbounded = unbounded_realization(3, {}).roots_of_unity;
    return Outcome{bounded <= 2 && unbounded >= 22,
                   "bounded " + std::to_string(bounded) + ", unbounded " + std::to_string(unbounded)};
  });

  criterion(6, "Dedekind splitting of Phi_m = group splitting", 60.0, [] {
    std::size_t agree = 0, total = 0;
    for (u64 m = 1; m <= 100; ++m) {
      const auto phi = cyclotomic_polynomial(m);
      const auto field = cyclotomic_field(m);
      for (u64 p = 2; p <= 50; ++p) {
        if (!brute_prime(p) || m % p == 0) continue;
        ++total;
        const auto r = dedekind_index_test(phi, p);
        if (r.index_divisible) continue;
        const auto s = splitting_data(field, p);
        std::multiset<std::pair<u64, u64>> got, want;
        for (auto [e, f] : *r.splitting) got.insert({e, f});
        for (u64 i = 0; i < s.g; ++i) want.insert({s.e, s.f});
        agree += got == want;
      }
    }
    return Outcome{agree == total, std::to_string(agree) + "/" + std::to_string(total) + " pairs agree"};
  });

  criterion(7, "Index divisibility of classical examples", 1.0, [] {
    const auto cubic = dedekind_index_test(IntPolynomial{-8, -2, -1, 1}, 2);
    const auto gauss = dedekind_index_test(IntPolynomial{1, 0, 1}, 2);
    const bool ok = cubic.index_divisible && !gauss.index_divisible && gauss.splitting &&
                    *gauss.splitting == std::vector<RamificationPair>{{2, 1}};
    return Outcome{ok, std::string("x^3-x^2-2x-8: ") + (cubic.index_divisible ? "2 | index" : "2 !| index") +
                           ", x^2+1: " + (gauss.index_divisible ? "2 | index" : "(e,f)=(2,1)")};
  });

  criterion(8, "Monogenic degree bound and component scan", 60.0, [] {
    const bool values = monogenic_degree_bound(2, 1) == 4 && monogenic_degree_bound(2, 3) == 9216 &&
                        monogenic_degree_bound(3, 2) == 972;
    const auto r = bounded_realization(3, kTargets);
    std::vector<std::pair<std::string, IntPolynomial>> family;
    for (const auto& c : r.components) {
      family.emplace_back("L_" + std::to_string(c.level) + "," + std::to_string(c.index),
                          period_minimal_polynomial(c.field));
    }
    const u64 b = r.claimed_bounds.front().bound;
    const auto scan = monogenic_scan(family, kTargets.front(), b);
    return Outcome{values && scan.refutation_count() == 0 && scan.entries.size() == r.components.size(),
                   std::to_string(scan.entries.size()) + " periods scanned at p=2, B=" + std::to_string(b) + ", " +
                       std::to_string(scan.refutation_count()) + " refutations"};
  });

  criterion(9, "Cyclic constructor contract, F = Q(zeta_105)", 120.0, [] {
    const AbelianField avoid = cyclotomic_field(105);
    std::size_t good = 0, total = 0;
    for (const auto& [q, t] : grunwald_cases()) {
      ++total;
      const auto trace = construct_cyclic({q, t, avoid, std::nullopt});
      bool ok = trace.result.degree() == q && intersection(trace.result, avoid).is_rational();
      for (u64 p : t) ok = ok && totally_split(trace.result, p);
      good += ok;
    }
    return Outcome{good == total, std::to_string(good) + "/" + std::to_string(total) + " cases"};
  });

  criterion(10, "Determinism of criteria 1, 3, 4, 9", 300.0, [] {
    auto render = [] {
      std::string out = to_json(lambda_primes(10)).dump();
      const std::vector<u64> probes{2, 3, 5, 7, 11, 13};
      for (unsigned k = 1; k <= 4; ++k) out += to_json(unbounded_realization(k, probes)).dump();
      out += to_json(bounded_realization(3, kTargets)).dump();
      const AbelianField avoid = cyclotomic_field(105);
      for (const auto& [q, t] : grunwald_cases()) {
        out += to_json(construct_cyclic({q, t, avoid, std::nullopt})).dump();
      }
      return out;
    };
    const std::string first = render(), second = render();
    return Outcome{first == second, std::to_string(first.size()) + " bytes compared"};
  });

  std::printf("%d criteria failed\n", failures);
  return failures;
}
