#pragma once

// Dedekind's index criterion and related exact polynomial tools.
//
// For monic irreducible f in Z[x] with root alpha and f = prod g_i^{e_i}
// (mod p), set g = prod g_i, h = f / g (mod p) and F = (g h - f) / p. Then
// p divides [O_K : Z[alpha]] iff gcd(F, g, h) != 1 over GF(p). When it does
// not, p O_K = prod (p, g_i(alpha))^{e_i} with inertia degrees deg g_i.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "abelian/fp_poly.hpp"
#include "abelian/int_poly.hpp"

namespace abelian {

enum class IrreducibilityEvidence {
  proven,  // a degree-pattern or rational-root argument rules out factors
  probed,  // no factor was detected, but none was ruled out either
};

struct RamificationPair {
  u64 e;
  u64 f;
  friend bool operator==(const RamificationPair&, const RamificationPair&) = default;
  friend auto operator<=>(const RamificationPair&, const RamificationPair&) = default;
};

struct DedekindReport {
  IntPolynomial polynomial;
  u64 prime;
  std::vector<FpFactor> factors;
  bool index_divisible;
  std::optional<std::vector<RamificationPair>> splitting;  // iff !index_divisible
  IrreducibilityEvidence irreducibility;
};

/// Throws ValidationError if f is not monic, has degree < 1, p is not prime,
/// or f has an integer root (and so is reducible, unless f = x - r).
DedekindReport dedekind_index_test(const IntPolynomial& f, u64 p, std::uint64_t seed = 0);

/// p^(B^2 + 1) * B^2.
mpz_class monogenic_degree_bound(u64 p, u64 b);

/// Monic, p divides every lower coefficient, p^2 does not divide the constant.
bool is_eisenstein(const IntPolynomial& f, u64 p);

/// (-1)^(d(d-1)/2) Res(f, f') / lc(f). Throws ValidationError for deg f < 1.
mpz_class discriminant(const IntPolynomial& f);

/// x^3 - 2p x + p.
IntPolynomial eisenstein_cubic(u64 p);

struct ScanEntry {
  std::string label;
  DedekindReport report;
  bool refutes;  // p does not divide the index, yet the degree exceeds the bound
};

struct MonogenicScan {
  u64 prime;
  u64 local_degree_bound;  // B
  mpz_class degree_bound;  // p^(B^2 + 1) B^2
  std::vector<ScanEntry> entries;

  std::vector<std::string> index_free_labels() const;
  std::size_t refutation_count() const;
};

/// Runs the index test on each member of a family of monic polynomials and
/// flags any whose degree exceeds monogenic_degree_bound(p, B) although p
/// does not divide its index.
MonogenicScan monogenic_scan(std::span<const std::pair<std::string, IntPolynomial>> family, u64 p, u64 b,
                             std::uint64_t seed = 0);

}  // namespace abelian
