#include "abelian/dedekind.hpp"

#include <algorithm>
#include <string>

#include "abelian/arith.hpp"
#include "abelian/errors.hpp"

namespace abelian {

namespace {

constexpr std::size_t kMaxRootCandidates = 200'000;
constexpr unsigned kPatternProbes = 40;

std::vector<u64> divisors_of(u64 n) {
  std::vector<u64> divs{1};
  for (const auto& [p, a] : factor(n)) {
    const std::size_t base = divs.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= a; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
      if (divs.size() > kMaxRootCandidates) return {};
    }
  }
  return divs;
}

// Throws for an integer root; otherwise reports how strongly irreducibility
// is established.
IrreducibilityEvidence irreducibility_precheck(const IntPolynomial& f) {
  const int n = f.degree();
  if (n == 1) return IrreducibilityEvidence::proven;
  const mpz_class& c0 = f.coefficient(0);
  if (c0 == 0) throw ValidationError("polynomial is reducible: x divides it");

  bool roots_excluded = false;
  const mpz_class mag = abs(c0);
  if (mag < mpz_class(static_cast<unsigned long>(kModulusLimit))) {
    const auto divs = divisors_of(mag.get_ui());
    if (!divs.empty()) {
      for (u64 d : divs) {
        const mpz_class r(static_cast<unsigned long>(d));
        if (f.evaluate(r) == 0 || f.evaluate(-r) == 0) {
          throw ValidationError("polynomial is reducible: it has the integer root +-" + std::to_string(d));
        }
      }
      roots_excluded = true;
    }
  }
  // A monic cubic or quadratic without rational roots is irreducible.
  if (n <= 3 && roots_excluded) return IrreducibilityEvidence::proven;

  // Degrees a rational factor could have, intersected over squarefree
  // reductions modulo small primes.
  std::vector<bool> possible(static_cast<std::size_t>(n) + 1, true);
  u64 q = 2;
  for (unsigned probes = 0; probes < kPatternProbes; q = next_prime(q)) {
    const FpPolynomial fq = FpPolynomial::reduce(f, q);
    if (gcd(fq, fq.derivative()).degree() > 0) continue;
    ++probes;
    std::vector<bool> sums(static_cast<std::size_t>(n) + 1, false);
    sums[0] = true;
    for (const unsigned d : squarefree_degree_pattern(fq)) {
      for (std::size_t s = sums.size(); s-- > d;) {
        if (sums[s - d]) sums[s] = true;
      }
    }
    bool only_trivial = true;
    for (std::size_t s = 0; s < possible.size(); ++s) {
      possible[s] = possible[s] && sums[s];
      if (possible[s] && s != 0 && s != possible.size() - 1) only_trivial = false;
    }
    if (only_trivial) return IrreducibilityEvidence::proven;
  }
  return IrreducibilityEvidence::probed;
}

}  // namespace

DedekindReport dedekind_index_test(const IntPolynomial& f, u64 p, std::uint64_t seed) {
  if (f.degree() < 1) throw ValidationError("polynomial must have positive degree");
  if (!f.is_monic()) throw ValidationError("polynomial must be monic");
  if (!is_prime(p) || p >= kModulusLimit) throw ValidationError(std::to_string(p) + " is not a usable prime");

  const IrreducibilityEvidence evidence = irreducibility_precheck(f);

  const FpPolynomial fbar = FpPolynomial::reduce(f, p);
  std::vector<FpFactor> factors = fp_factor(fbar, seed);

  IntPolynomial g{1};
  FpPolynomial gbar = FpPolynomial::constant(p, 1);
  for (const auto& fac : factors) {
    g = g * fac.factor.lift();
    gbar = gbar * fac.factor;
  }
  const FpPolynomial hbar = fbar / gbar;
  const IntPolynomial h = hbar.lift();
  const IntPolynomial big_f = (g * h - f).divide_exact(mpz_class(static_cast<unsigned long>(p)));
  const FpPolynomial common = gcd(gcd(FpPolynomial::reduce(big_f, p), gbar), hbar);
  const bool divisible = common.degree() > 0;

  std::optional<std::vector<RamificationPair>> splitting;
  if (!divisible) {
    splitting.emplace();
    for (const auto& fac : factors) {
      splitting->push_back({fac.multiplicity, static_cast<u64>(fac.factor.degree())});
    }
  }
  return {f, p, std::move(factors), divisible, std::move(splitting), evidence};
}

mpz_class monogenic_degree_bound(u64 p, u64 b) {
  if (b == 0) throw ValidationError("local degree bound must be positive");
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (b > 4096) throw CapExceeded("local degree bound too large to expand");
  const unsigned long square = static_cast<unsigned long>(b * b);
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(p), square + 1);
  return result * square;
}

bool is_eisenstein(const IntPolynomial& f, u64 p) {
  if (f.is_zero()) throw ValidationError("zero polynomial");
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (!f.is_monic() || f.degree() < 1) return false;
  const mpz_class mp(static_cast<unsigned long>(p));
  for (int i = 0; i < f.degree(); ++i) {
    if (!mpz_divisible_p(f.coefficient(static_cast<std::size_t>(i)).get_mpz_t(), mp.get_mpz_t())) return false;
  }
  const mpz_class p2 = mp * mp;
  return !mpz_divisible_p(f.coefficient(0).get_mpz_t(), p2.get_mpz_t());
}

mpz_class discriminant(const IntPolynomial& f) {
  const int d = f.degree();
  if (d < 1) throw ValidationError("discriminant needs degree >= 1");
  mpz_class res = resultant(f, f.derivative());
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
  if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) out = -out;
  return out;
}

IntPolynomial eisenstein_cubic(u64 p) {
  const mpz_class mp(static_cast<unsigned long>(p));
  return IntPolynomial(std::vector<mpz_class>{mp, -2 * mp, 0, 1});
}

std::vector<std::string> MonogenicScan::index_free_labels() const {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    if (!e.report.index_divisible) out.push_back(e.label);
  }
  return out;
}

std::size_t MonogenicScan::refutation_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const ScanEntry& e) { return e.refutes; }));
}

MonogenicScan monogenic_scan(std::span<const std::pair<std::string, IntPolynomial>> family, u64 p, u64 b,
                             std::uint64_t seed) {
  MonogenicScan scan{p, b, monogenic_degree_bound(p, b), {}};
  for (const auto& [label, poly] : family) {
    DedekindReport report = dedekind_index_test(poly, p, seed);
    const bool refutes = !report.index_divisible && mpz_class(poly.degree()) > scan.degree_bound;
    scan.entries.push_back({label, std::move(report), refutes});
  }
  return scan;
}

}  // namespace abelian
