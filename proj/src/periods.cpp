// Gaussian periods through Gauss sums.
//
// For H <= G = (Z/m)* of index d, the indicator of H is (1/d) sum of the
// characters psi in H^perp, so the period at the coset uH is
//
//   eta_u = sum_{h in H} zeta_m^{uh} = (1/d) sum_{psi in H^perp} conj(psi(u)) tau(psi),
//   tau(psi) = sum_{x in G} psi(x) zeta_m^x.
//
// tau factors over the prime powers P || m because zeta_m^x is a product of
// zeta_P^{w_P x} with w_P = (m/P)^{-1} mod P. Each factor only depends on
// psi through the components over P, and psi restricted to a cyclic
// component of order n only sees k mod gcd(n, d). One pass over (Z/P)*
// therefore yields bucket sums that serve every character, and the cost is
// about sum_P phi(P) instead of |H| * d exponentials.

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "abelian/abelian_fields.hpp"
#include "abelian/errors.hpp"

namespace abelian {

namespace {

class Real {
 public:
  explicit Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  Real(Real&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }
  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

struct Complex {
  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
  Real re, im;
};

// Scratch-carrying complex arithmetic.
class ComplexOps {
 public:
  explicit ComplexOps(mpfr_prec_t prec) : t1_(prec), t2_(prec), t3_(prec) {}

  // acc += a * b
  void add_mul(Complex& acc, const Complex& a, const Complex& b) {
    mpfr_mul(t1_.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2_.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(t1_.get(), t1_.get(), t2_.get(), MPFR_RNDN);
    mpfr_add(acc.re.get(), acc.re.get(), t1_.get(), MPFR_RNDN);
    mpfr_mul(t1_.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t2_.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(t1_.get(), t1_.get(), t2_.get(), MPFR_RNDN);
    mpfr_add(acc.im.get(), acc.im.get(), t1_.get(), MPFR_RNDN);
  }

  // out = a * b (out may alias a or b)
  void mul(Complex& out, const Complex& a, const Complex& b) {
    mpfr_mul(t1_.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2_.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t3_.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(t1_.get(), t1_.get(), t2_.get(), MPFR_RNDN);
    mpfr_mul(t2_.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(out.im.get(), t3_.get(), t2_.get(), MPFR_RNDN);
    mpfr_set(out.re.get(), t1_.get(), MPFR_RNDN);
  }

  void add(Complex& acc, const Complex& a) {
    mpfr_add(acc.re.get(), acc.re.get(), a.re.get(), MPFR_RNDN);
    mpfr_add(acc.im.get(), acc.im.get(), a.im.get(), MPFR_RNDN);
  }

 private:
  Real t1_, t2_, t3_;
};

Complex root_of_unity(u64 num, u64 den, mpfr_prec_t prec) {
  Complex z(prec);
  Real angle(prec + 16);
  mpfr_const_pi(angle.get(), MPFR_RNDN);
  mpfr_mul_ui(angle.get(), angle.get(), 2, MPFR_RNDN);
  mpfr_mul_ui(angle.get(), angle.get(), static_cast<unsigned long>(num % den), MPFR_RNDN);
  mpfr_div_ui(angle.get(), angle.get(), static_cast<unsigned long>(den), MPFR_RNDN);
  mpfr_sin_cos(z.im.get(), z.re.get(), angle.get(), MPFR_RNDN);
  return z;
}

// zeta_n^j from two tables of size ~sqrt(n).
class RootTable {
 public:
  RootTable(u64 n, mpfr_prec_t prec) : n_(n), step_(static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(n))))) {
    if (step_ == 0) step_ = 1;
    for (u64 j = 0; j < step_; ++j) low_.push_back(root_of_unity(j, n_, prec));
    for (u64 i = 0; i * step_ < n_; ++i) high_.push_back(root_of_unity(i * step_, n_, prec));
  }
  void add_power(ComplexOps& ops, Complex& acc, u64 j) const {
    j %= n_;
    ops.add_mul(acc, high_[j / step_], low_[j % step_]);
  }

 private:
  u64 n_;
  u64 step_;
  std::vector<Complex> low_, high_;
};

using Character = std::vector<u64>;  // psi(k) = zeta_d^{sum_c t_c k_c}

std::vector<Character> annihilator(const Subgroup& h, u64 d) {
  const auto& rows = h.lattice().rows();
  const auto& moduli = h.lattice().moduli();
  const std::size_t r = rows.size();
  // Columns of B^{-1} span the dual lattice {y : B y in Z^r}.
  std::vector<Character> gens;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<mpq_class> y(r);
    for (std::size_t i = r; i-- > 0;) {
      mpq_class acc = (i == j) ? 1 : 0;
      for (std::size_t k = i + 1; k < r; ++k) acc -= mpq_class(mpz_class(static_cast<long>(rows[i][k]))) * y[k];
      y[i] = acc / mpq_class(mpz_class(static_cast<long>(rows[i][i])));
      y[i].canonicalize();
    }
    Character t(r);
    for (std::size_t c = 0; c < r; ++c) {
      mpq_class scaled = y[c] * mpq_class(mpz_class(static_cast<unsigned long>(d)));
      scaled.canonicalize();
      if (scaled.get_den() != 1) throw InternalError("character order does not divide the degree");
      mpz_class v = scaled.get_num() % static_cast<unsigned long>(d);
      if (v < 0) v += static_cast<unsigned long>(d);
      t[c] = v.get_ui();
      (void)moduli;
    }
    gens.push_back(std::move(t));
  }
  std::vector<Character> group{Character(r, 0)};
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (const auto& g : gens) {
      Character next(r);
      for (std::size_t c = 0; c < r; ++c) next[c] = (group[i][c] + g[c]) % d;
      if (std::find(group.begin(), group.end(), next) == group.end()) group.push_back(std::move(next));
    }
  }
  if (group.size() != d) throw InternalError("annihilator has the wrong order");
  return group;
}

struct PrimePowerSums {
  std::vector<std::size_t> comps;    // component indices over this prime
  std::vector<u64> class_moduli;     // gcd(n_c, d) per component
  std::vector<Complex> buckets;      // mixed radix over class_moduli
};

PrimePowerSums bucket_sums(const UnitGroup& g, const PrimePower& pp, u64 d, mpfr_prec_t prec, ComplexOps& ops) {
  PrimePowerSums out;
  const u64 m = g.modulus();
  const u64 big_p = ipow(pp.prime, pp.exponent);
  const u64 w = inverse_mod((m / big_p) % big_p, big_p);
  out.comps = g.components_over(pp.prime);
  std::size_t buckets = 1;
  for (auto c : out.comps) {
    out.class_moduli.push_back(std::gcd(g.components()[c].order, d));
    buckets *= out.class_moduli.back();
  }
  for (std::size_t i = 0; i < buckets; ++i) out.buckets.emplace_back(prec);
  const RootTable table(big_p, prec);

  if (out.comps.empty()) {  // P = 2: the only unit is 1
    table.add_power(ops, out.buckets[0], w);
    return out;
  }
  const auto& comps = g.components();
  if (comps[out.comps[0]].role == ComponentRole::odd_cyclic) {
    const auto& c = comps[out.comps[0]];
    const u64 o = out.class_moduli[0];
    u64 x = 1;
    for (u64 k = 0; k < c.order; ++k) {
      table.add_power(ops, out.buckets[k % o], mul_mod(w, x, big_p));
      x = mul_mod(x, c.generator, big_p);
    }
    return out;
  }
  // 2-part: x = (-1)^s 5^t.
  const u64 o_sign = out.class_moduli[0];
  const u64 five_order = out.comps.size() > 1 ? comps[out.comps[1]].order : 1;
  const u64 o_five = out.comps.size() > 1 ? out.class_moduli[1] : 1;
  for (u64 s = 0; s < 2; ++s) {
    u64 x = s == 0 ? 1 : big_p - 1;
    for (u64 t = 0; t < five_order; ++t) {
      table.add_power(ops, out.buckets[(s % o_sign) * o_five + (t % o_five)], mul_mod(w, x, big_p));
      x = mul_mod(x, 5, big_p);
    }
  }
  return out;
}

struct Attempt {
  bool ok;
  IntPolynomial poly;
};

Attempt evaluate(const AbelianField& field, mpfr_prec_t prec) {
  const Subgroup& h = field.fixing_subgroup();
  const UnitGroup& g = h.parent();
  const u64 d = field.degree();
  const std::size_t r = g.rank();
  ComplexOps ops(prec);

  const std::vector<Character> chars = annihilator(h, d);
  std::vector<Complex> zeta_d;
  for (u64 j = 0; j < d; ++j) zeta_d.push_back(root_of_unity(j, d, prec));

  std::vector<Complex> tau;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    Complex one(prec);
    mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
    tau.push_back(std::move(one));
  }
  for (const auto& pp : g.prime_power_factors()) {
    const PrimePowerSums sums = bucket_sums(g, pp, d, prec, ops);
    for (std::size_t i = 0; i < chars.size(); ++i) {
      Complex factor(prec);
      for (std::size_t b = 0; b < sums.buckets.size(); ++b) {
        // decode mixed radix b into classes per component
        u64 rem = b;
        u64 expo = 0;
        for (std::size_t k = sums.comps.size(); k-- > 0;) {
          const u64 cls = rem % sums.class_moduli[k];
          rem /= sums.class_moduli[k];
          expo = (expo + chars[i][sums.comps[k]] * cls) % d;
        }
        ops.add_mul(factor, zeta_d[expo], sums.buckets[b]);
      }
      ops.mul(tau[i], tau[i], factor);
    }
  }

  // Coset representatives: the box 0 <= k_j < pivot_j of the Hermite basis.
  std::vector<Complex> periods;
  std::vector<u64> k(r, 0);
  for (u64 idx = 0; idx < d; ++idx) {
    u64 rem = idx;
    for (std::size_t j = r; j-- > 0;) {
      const u64 pj = h.lattice().pivot(j);
      k[j] = rem % pj;
      rem /= pj;
    }
    Complex eta(prec);
    for (std::size_t i = 0; i < chars.size(); ++i) {
      u64 expo = 0;
      for (std::size_t c = 0; c < r; ++c) expo = (expo + chars[i][c] * (k[c] % d)) % d;
      ops.add_mul(eta, zeta_d[(d - expo) % d], tau[i]);
    }
    mpfr_div_ui(eta.re.get(), eta.re.get(), static_cast<unsigned long>(d), MPFR_RNDN);
    mpfr_div_ui(eta.im.get(), eta.im.get(), static_cast<unsigned long>(d), MPFR_RNDN);
    periods.push_back(std::move(eta));
  }

  // Distinct cosets must give distinct periods.
  Real diff(prec), tol(prec), tmp(prec);
  mpfr_set_ui_2exp(tol.get(), 1, -static_cast<mpfr_exp_t>(prec / 2), MPFR_RNDN);
  for (std::size_t a = 0; a < periods.size(); ++a) {
    for (std::size_t b = a + 1; b < periods.size(); ++b) {
      mpfr_sub(diff.get(), periods[a].re.get(), periods[b].re.get(), MPFR_RNDN);
      mpfr_sub(tmp.get(), periods[a].im.get(), periods[b].im.get(), MPFR_RNDN);
      mpfr_hypot(diff.get(), diff.get(), tmp.get(), MPFR_RNDN);
      if (mpfr_cmp(diff.get(), tol.get()) < 0) {
        throw ValidationError("Gaussian period is not primitive for conductor " + std::to_string(g.modulus()));
      }
    }
  }

  // prod (x - eta_u), coefficients ascending.
  std::vector<Complex> poly;
  {
    Complex one(prec);
    mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
    poly.push_back(std::move(one));
  }
  Complex neg(prec);
  for (const auto& eta : periods) {
    mpfr_neg(neg.re.get(), eta.re.get(), MPFR_RNDN);
    mpfr_neg(neg.im.get(), eta.im.get(), MPFR_RNDN);
    std::vector<Complex> next;
    for (std::size_t i = 0; i <= poly.size(); ++i) next.emplace_back(prec);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      ops.add(next[i + 1], poly[i]);
      ops.add_mul(next[i], poly[i], neg);
    }
    poly = std::move(next);
  }

  std::vector<mpz_class> coeffs;
  Real rounded(prec), quarter(prec);
  mpfr_set_d(quarter.get(), 0.25, MPFR_RNDN);
  for (const auto& c : poly) {
    mpfr_rint(rounded.get(), c.re.get(), MPFR_RNDN);
    mpfr_sub(tmp.get(), c.re.get(), rounded.get(), MPFR_RNDN);
    mpfr_abs(tmp.get(), tmp.get(), MPFR_RNDN);
    if (mpfr_cmp(tmp.get(), quarter.get()) > 0) return {false, {}};
    mpfr_abs(tmp.get(), c.im.get(), MPFR_RNDN);
    if (mpfr_cmp(tmp.get(), quarter.get()) > 0) return {false, {}};
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), rounded.get(), MPFR_RNDN);
    coeffs.push_back(z);
  }
  IntPolynomial result(std::move(coeffs));
  if (result.degree() != static_cast<int>(d) || !result.is_monic()) return {false, {}};
  return {true, std::move(result)};
}

}  // namespace

IntPolynomial period_minimal_polynomial(const AbelianField& field) {
  const Config& config = field.fixing_subgroup().parent().config();
  const u64 d = field.degree();
  if (d > config.period_degree_cap) {
    throw CapExceeded("field degree " + std::to_string(d) + " exceeds period degree cap " +
                      std::to_string(config.period_degree_cap));
  }
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max<u64>(64 * d, 128));
  for (int attempt = 0; attempt <= 3; ++attempt, prec *= 2) {
    Attempt a = evaluate(field, prec);
    if (a.ok) return std::move(a.poly);
  }
  throw PrecisionInsufficient("period polynomial coefficients did not round after 3 precision doublings");
}

}  // namespace abelian
