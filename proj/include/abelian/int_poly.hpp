#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace abelian {

/// Dense polynomial with exact integer coefficients in ascending order. The
/// coefficient vector never has trailing zeros; the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  /// Parses "c0,c1,...,cn" (ascending, whitespace tolerated).
  static IntPolynomial parse(std::string_view text);

  /// x^n + c x^? style rendering, e.g. "x^3 - x^2 - 2*x - 8".
  std::string to_string() const;

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const mpz_class& leading() const { return coeffs_.back(); }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  mpz_class coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

  IntPolynomial derivative() const;
  mpz_class evaluate(const mpz_class& x) const;

  /// Divides every coefficient by d; throws ValidationError if not exact.
  IntPolynomial divide_exact(const mpz_class& d) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Quotient of a by a monic b; throws ValidationError if the remainder is
/// nonzero.
IntPolynomial divide_by_monic(const IntPolynomial& a, const IntPolynomial& b);

/// The n-th cyclotomic polynomial.
IntPolynomial cyclotomic_polynomial(std::uint64_t n);

/// Determinant of the Sylvester matrix (fraction-free Bareiss elimination).
mpz_class resultant(const IntPolynomial& f, const IntPolynomial& g);

}  // namespace abelian
