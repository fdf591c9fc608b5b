#include "abelian/fp_poly.hpp"

#include <algorithm>
#include <random>

#include "abelian/errors.hpp"

namespace abelian {

FpPolynomial::FpPolynomial(u64 p, std::vector<u64> ascending) : p_(p), coeffs_(std::move(ascending)) {
  if (p < 2 || p >= kModulusLimit) throw ValidationError("field characteristic out of range");
  for (auto& c : coeffs_) c %= p_;
  trim();
}

FpPolynomial FpPolynomial::reduce(const IntPolynomial& f, u64 p) {
  std::vector<u64> out;
  out.reserve(f.coefficients().size());
  const mpz_class mp(static_cast<unsigned long>(p));
  for (const auto& c : f.coefficients()) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), mp.get_mpz_t());
    out.push_back(r.get_ui());
  }
  return FpPolynomial(p, std::move(out));
}

void FpPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpPolynomial FpPolynomial::monic() const {
  if (is_zero()) return *this;
  const u64 inv = inverse_mod(leading(), p_);
  std::vector<u64> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = mul_mod(coeffs_[i], inv, p_);
  return FpPolynomial(p_, std::move(out));
}

FpPolynomial FpPolynomial::derivative() const {
  std::vector<u64> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(mul_mod(coeffs_[i], i % p_, p_));
  return FpPolynomial(p_, std::move(out));
}

IntPolynomial FpPolynomial::lift() const {
  std::vector<mpz_class> out;
  out.reserve(coeffs_.size());
  for (u64 c : coeffs_) out.emplace_back(static_cast<unsigned long>(c));
  return IntPolynomial(std::move(out));
}

namespace {

constexpr u64 kSmallPrime = u64{1} << 32;

void require_same_field(const FpPolynomial& a, const FpPolynomial& b) {
  if (a.prime() != b.prime()) throw ValidationError("polynomials over different prime fields");
}

}  // namespace

FpPolynomial operator+(const FpPolynomial& a, const FpPolynomial& b) {
  require_same_field(a, b);
  std::vector<u64> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const u64 x = i < a.coeffs_.size() ? a.coeffs_[i] : 0;
    const u64 y = i < b.coeffs_.size() ? b.coeffs_[i] : 0;
    out[i] = (x + y) % a.p_;
  }
  return FpPolynomial(a.p_, std::move(out));
}

FpPolynomial operator-(const FpPolynomial& a, const FpPolynomial& b) {
  require_same_field(a, b);
  std::vector<u64> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const u64 x = i < a.coeffs_.size() ? a.coeffs_[i] : 0;
    const u64 y = i < b.coeffs_.size() ? b.coeffs_[i] : 0;
    out[i] = (x + a.p_ - y) % a.p_;
  }
  return FpPolynomial(a.p_, std::move(out));
}

FpPolynomial operator*(const FpPolynomial& a, const FpPolynomial& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return FpPolynomial(a.p_, {});
  const u64 p = a.p_;
  std::vector<u64> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  if (p < kSmallPrime) {
    // products fit in 64 bits; delay the reduction while the sum cannot wrap
    const u64 limit = ~u64{0} - (p - 1) * (p - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      const u64 ai = a.coeffs_[i];
      if (ai == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        u64& slot = out[i + j];
        if (slot > limit) slot %= p;
        slot += ai * b.coeffs_[j];
      }
    }
    for (auto& c : out) c %= p;
  } else {
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] = static_cast<u64>((static_cast<u128>(out[i + j]) + static_cast<u128>(a.coeffs_[i]) * b.coeffs_[j]) % p);
      }
    }
  }
  return FpPolynomial(p, std::move(out));
}

std::pair<FpPolynomial, FpPolynomial> FpPolynomial::divmod(const FpPolynomial& a, const FpPolynomial& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw ValidationError("polynomial division by zero");
  const u64 p = a.p_;
  if (a.degree() < b.degree()) return {FpPolynomial(p, {}), a};
  std::vector<u64> rem = a.coeffs_;
  const std::size_t db = b.coeffs_.size() - 1;
  const u64 inv = inverse_mod(b.leading(), p);
  std::vector<u64> quot(rem.size() - db, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const u64 q = mul_mod(rem[i + db], inv, p);
    quot[i] = q;
    if (q == 0) continue;
    const u64 neg = p - q;
    if (p < kSmallPrime) {
      for (std::size_t j = 0; j <= db; ++j) rem[i + j] = (rem[i + j] + neg * b.coeffs_[j]) % p;
    } else {
      for (std::size_t j = 0; j <= db; ++j) rem[i + j] = (rem[i + j] + mul_mod(neg, b.coeffs_[j], p)) % p;
    }
  }
  rem.resize(db);
  return {FpPolynomial(p, std::move(quot)), FpPolynomial(p, std::move(rem))};
}

FpPolynomial operator/(const FpPolynomial& a, const FpPolynomial& b) { return FpPolynomial::divmod(a, b).first; }
FpPolynomial operator%(const FpPolynomial& a, const FpPolynomial& b) { return FpPolynomial::divmod(a, b).second; }

FpPolynomial gcd(const FpPolynomial& a, const FpPolynomial& b) {
  FpPolynomial x = a, y = b;
  while (!y.is_zero()) {
    FpPolynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FpPolynomial pow_mod(const FpPolynomial& base, const mpz_class& exponent, const FpPolynomial& modulus) {
  const u64 p = base.prime();
  FpPolynomial result = FpPolynomial::constant(p, 1) % modulus;
  FpPolynomial b = base % modulus;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % modulus;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = (result * b) % modulus;
  }
  return result;
}

namespace {

struct Part {
  FpPolynomial poly;
  unsigned multiplicity;
};

// f(x) = g(x^p) over GF(p) implies f = g^p since the Frobenius fixes GF(p).
FpPolynomial pth_root(const FpPolynomial& f) {
  const u64 p = f.prime();
  std::vector<u64> out;
  const auto& c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); i += p) out.push_back(c[i]);
  return FpPolynomial(p, std::move(out));
}

void squarefree_decomposition(const FpPolynomial& f, unsigned scale, std::vector<Part>& out) {
  const u64 p = f.prime();
  const FpPolynomial d = f.derivative();
  if (d.is_zero()) {
    squarefree_decomposition(pth_root(f), scale * static_cast<unsigned>(p), out);
    return;
  }
  FpPolynomial c = gcd(f, d);
  FpPolynomial w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    FpPolynomial y = gcd(w, c);
    FpPolynomial fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * scale});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree_decomposition(pth_root(c.monic()), scale * static_cast<unsigned>(p), out);
}

// Products of all irreducible factors of each degree of a squarefree monic f.
std::vector<std::pair<FpPolynomial, unsigned>> distinct_degree(FpPolynomial f) {
  const u64 p = f.prime();
  const mpz_class mp(static_cast<unsigned long>(p));
  std::vector<std::pair<FpPolynomial, unsigned>> out;
  const FpPolynomial x = FpPolynomial::x(p);
  FpPolynomial h = x % f;
  for (unsigned i = 1; f.degree() >= 2 * static_cast<int>(i); ++i) {
    h = pow_mod(h, mp, f);
    FpPolynomial g = gcd(f, h - x);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<unsigned>(f.degree()));
  return out;
}

void equal_degree(const FpPolynomial& f, unsigned d, std::mt19937_64& rng, std::vector<FpPolynomial>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f.monic());
    return;
  }
  const u64 p = f.prime();
  mpz_class half;
  if (p != 2) {
    mpz_ui_pow_ui(half.get_mpz_t(), static_cast<unsigned long>(p), d);
    half = (half - 1) / 2;
  }
  while (true) {
    std::vector<u64> coeffs(static_cast<std::size_t>(f.degree()));
    for (auto& c : coeffs) c = rng() % p;
    FpPolynomial a(p, std::move(coeffs));
    if (a.degree() < 1) continue;
    FpPolynomial b(p, {});
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)) onto GF(2).
      FpPolynomial term = a % f;
      b = term;
      for (unsigned i = 1; i < d; ++i) {
        term = (term * term) % f;
        b = b + term;
      }
    } else {
      b = pow_mod(a, half, f) - FpPolynomial::constant(p, 1);
    }
    FpPolynomial g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<unsigned> squarefree_degree_pattern(const FpPolynomial& f) {
  if (f.is_zero()) throw ValidationError("cannot factor the zero polynomial");
  std::vector<unsigned> degrees;
  if (f.degree() == 0) return degrees;
  for (const auto& [product, degree] : distinct_degree(f.monic())) {
    for (int k = product.degree() / static_cast<int>(degree); k > 0; --k) degrees.push_back(degree);
  }
  return degrees;
}

std::vector<FpFactor> fp_factor(const FpPolynomial& f, std::uint64_t seed) {
  if (f.is_zero()) throw ValidationError("cannot factor the zero polynomial");
  std::vector<FpFactor> result;
  if (f.degree() == 0) return result;
  std::mt19937_64 rng(seed);
  std::vector<Part> parts;
  squarefree_decomposition(f.monic(), 1, parts);
  for (const auto& part : parts) {
    for (const auto& [product, degree] : distinct_degree(part.poly)) {
      std::vector<FpPolynomial> irreducibles;
      equal_degree(product, degree, rng, irreducibles);
      for (auto& g : irreducibles) result.push_back({std::move(g), part.multiplicity});
    }
  }
  std::sort(result.begin(), result.end(), [](const FpFactor& a, const FpFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    if (a.factor.coefficients() != b.factor.coefficients()) {
      return a.factor.coefficients() < b.factor.coefficients();
    }
    return a.multiplicity < b.multiplicity;
  });
  return result;
}

}  // namespace abelian
