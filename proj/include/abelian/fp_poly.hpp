#pragma once

// Polynomials over the prime field GF(p) and their factorization
// (squarefree decomposition, distinct-degree, Cantor-Zassenhaus).

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "abelian/arith.hpp"
#include "abelian/int_poly.hpp"

namespace abelian {

class FpPolynomial {
 public:
  /// Coefficients are reduced modulo p; p must be prime and below 2^62.
  FpPolynomial(u64 p, std::vector<u64> ascending);
  static FpPolynomial reduce(const IntPolynomial& f, u64 p);
  static FpPolynomial constant(u64 p, u64 c) { return FpPolynomial(p, {c}); }
  static FpPolynomial x(u64 p) { return FpPolynomial(p, {0, 1}); }

  u64 prime() const { return p_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  u64 leading() const { return coeffs_.back(); }
  const std::vector<u64>& coefficients() const { return coeffs_; }

  FpPolynomial monic() const;
  FpPolynomial derivative() const;

  /// Lift with coefficients in {0, ..., p-1}.
  IntPolynomial lift() const;

  friend FpPolynomial operator+(const FpPolynomial& a, const FpPolynomial& b);
  friend FpPolynomial operator-(const FpPolynomial& a, const FpPolynomial& b);
  friend FpPolynomial operator*(const FpPolynomial& a, const FpPolynomial& b);
  friend FpPolynomial operator/(const FpPolynomial& a, const FpPolynomial& b);
  friend FpPolynomial operator%(const FpPolynomial& a, const FpPolynomial& b);
  friend bool operator==(const FpPolynomial&, const FpPolynomial&) = default;

  /// Quotient and remainder; b must be nonzero.
  static std::pair<FpPolynomial, FpPolynomial> divmod(const FpPolynomial& a, const FpPolynomial& b);

 private:
  void trim();
  u64 p_;
  std::vector<u64> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
FpPolynomial gcd(const FpPolynomial& a, const FpPolynomial& b);

/// base^exponent mod modulus.
FpPolynomial pow_mod(const FpPolynomial& base, const mpz_class& exponent, const FpPolynomial& modulus);

struct FpFactor {
  FpPolynomial factor;  // monic irreducible
  unsigned multiplicity;
  friend bool operator==(const FpFactor&, const FpFactor&) = default;
};

/// Degrees of the irreducible factors of a squarefree f, ascending, from
/// distinct-degree factorization alone.
std::vector<unsigned> squarefree_degree_pattern(const FpPolynomial& f);

/// Complete factorization into monic irreducibles. The seed drives the
/// equal-degree splitting; the returned list is sorted by degree, then by
/// ascending coefficient vector, so it does not depend on the seed. The
/// leading coefficient of f is dropped. Throws ValidationError on zero.
std::vector<FpFactor> fp_factor(const FpPolynomial& f, std::uint64_t seed);

}  // namespace abelian
