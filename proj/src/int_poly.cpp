#include "abelian/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "abelian/arith.hpp"
#include "abelian/errors.hpp"

namespace abelian {

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::vector<mpz_class> coeffs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string token(text.substr(start, end - start));
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (!token.empty() && token.front() == '+') token.erase(token.begin());
    mpz_class value;
    if (token.empty() || value.set_str(token, 10) != 0) {
      throw ValidationError("invalid polynomial coefficient '" + token + "'");
    }
    coeffs.push_back(value);
    start = end + 1;
  }
  return IntPolynomial(std::move(coeffs));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'x';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<mpz_class> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return IntPolynomial(std::move(d));
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::divide_exact(const mpz_class& d) const {
  if (d == 0) throw ValidationError("division by zero");
  std::vector<mpz_class> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), d.get_mpz_t())) {
      throw ValidationError("inexact coefficient division");
    }
    mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), d.get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) - b.coefficient(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial divide_by_monic(const IntPolynomial& a, const IntPolynomial& b) {
  if (!b.is_monic()) throw ValidationError("divisor must be monic");
  if (a.degree() < b.degree()) {
    if (!a.is_zero()) throw ValidationError("inexact polynomial division");
    return {};
  }
  std::vector<mpz_class> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<mpz_class> quot(rem.size() - db);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const mpz_class q = rem[i + db];
    quot[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * bc[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (rem[i] != 0) throw ValidationError("inexact polynomial division");
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial cyclotomic_polynomial(std::uint64_t n) {
  if (n == 0) throw ValidationError("cyclotomic index must be positive");
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, built from the divisors up.
  const Factorization f = factor(n);
  std::vector<std::uint64_t> divisors{1};
  for (const auto& [p, a] : f) {
    const std::size_t base = divisors.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= a; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * pk);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  std::vector<IntPolynomial> phis;
  for (std::uint64_t d : divisors) {
    std::vector<mpz_class> xd(d + 1);
    xd[0] = -1;
    xd[d] = 1;
    IntPolynomial acc(std::move(xd));
    for (std::size_t i = 0; i < phis.size(); ++i) {
      if (d % divisors[i] == 0) acc = divide_by_monic(acc, phis[i]);
    }
    phis.push_back(std::move(acc));
  }
  return phis.back();
}

mpz_class resultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  const std::size_t m = static_cast<std::size_t>(f.degree());
  const std::size_t n = static_cast<std::size_t>(g.degree());
  const std::size_t size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<mpz_class>> mat(size, std::vector<mpz_class>(size, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= m; ++i) mat[r][r + i] = f.coefficient(m - i);
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i <= n; ++i) mat[n + r][r + i] = g.coefficient(n - i);
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (mat[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && mat[swap_row][k] == 0) ++swap_row;
      if (swap_row == size) return 0;
      std::swap(mat[k], mat[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        mpz_class v = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
        mpz_divexact(mat[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      mat[i][k] = 0;
    }
    prev = mat[k][k];
  }
  mpz_class det = mat[size - 1][size - 1];
  return sign < 0 ? mpz_class(-det) : det;
}

}  // namespace abelian
