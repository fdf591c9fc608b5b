#include <gtest/gtest.h>

#include <random>

#include "abelian/abelian_fields.hpp"
#include "abelian/dedekind.hpp"
#include "abelian/errors.hpp"
#include "oracles.hpp"

using namespace abelian;

namespace {

using Matrix = std::vector<std::vector<mpq_class>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Characteristic polynomial (ascending, monic) by Faddeev-LeVerrier.
std::vector<mpq_class> characteristic_polynomial(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<mpq_class> c(n + 1, 0);
  c[n] = 1;
  Matrix m(n, std::vector<mpq_class>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix am = multiply(a, m);
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = am;
    Matrix t = multiply(a, m);
    mpq_class trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += t[i][i];
    c[n - k] = -trace / static_cast<long>(k);
  }
  return c;
}

Matrix companion(const IntPolynomial& f) {
  const std::size_t n = f.degree();
  Matrix c(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 1; i < n; ++i) c[i][i - 1] = 1;
  for (std::size_t i = 0; i < n; ++i) c[i][n - 1] = -mpq_class(f.coefficient(i));
  return c;
}

std::multiset<std::pair<u64, u64>> as_multiset(const std::vector<RamificationPair>& v) {
  std::multiset<std::pair<u64, u64>> out;
  for (auto [e, f] : v) out.insert({e, f});
  return out;
}

}  // namespace

TEST(Dedekind, GaussianIntegersAtTwo) {
  auto r = dedekind_index_test(IntPolynomial{1, 0, 1}, 2);
  EXPECT_FALSE(r.index_divisible);
  ASSERT_TRUE(r.splitting.has_value());
  EXPECT_EQ(*r.splitting, (std::vector<RamificationPair>{{2, 1}}));
  EXPECT_EQ(r.irreducibility, IrreducibilityEvidence::proven);
}

TEST(Dedekind, EssentialDiscriminantDivisorCubic) {
  IntPolynomial f{-8, -2, -1, 1};
  auto r = dedekind_index_test(f, 2);
  EXPECT_TRUE(r.index_divisible);
  EXPECT_FALSE(r.splitting.has_value());

  // beta = (alpha^2 + alpha) / 2 is an algebraic integer outside Z[alpha]:
  // its characteristic polynomial has integer coefficients.
  Matrix c = companion(f);
  Matrix beta = multiply(c, c);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) beta[i][j] = (beta[i][j] + c[i][j]) / 2;
  for (const auto& coeff : characteristic_polynomial(beta)) EXPECT_EQ(coeff.get_den(), 1) << coeff;
}

TEST(Dedekind, LinearPolynomial) {
  auto r = dedekind_index_test(IntPolynomial{-1, 1}, 5);
  ASSERT_TRUE(r.splitting.has_value());
  EXPECT_EQ(*r.splitting, (std::vector<RamificationPair>{{1, 1}}));
}

TEST(Dedekind, Errors) {
  EXPECT_THROW(dedekind_index_test(IntPolynomial{1, 0, 2}, 2), ValidationError);  // not monic
  EXPECT_THROW(dedekind_index_test(IntPolynomial{1, 0, 1}, 4), ValidationError);  // not prime
  EXPECT_THROW(dedekind_index_test(IntPolynomial{-1, 0, 1}, 3), ValidationError); // root 1
  EXPECT_THROW(dedekind_index_test(IntPolynomial{7}, 3), ValidationError);
}

TEST(Dedekind, QuarticWithoutRationalRootIsOnlyProbed) {
  // x^4 + 1 is irreducible but splits modulo every prime
  auto r = dedekind_index_test(IntPolynomial{1, 0, 0, 0, 1}, 3);
  EXPECT_EQ(r.irreducibility, IrreducibilityEvidence::probed);
  // x^4 - x - 1 is irreducible mod 2 ... but modulo the tested primes the
  // degree patterns prove it
  auto s = dedekind_index_test(IntPolynomial{-1, -1, 0, 0, 1}, 3);
  EXPECT_EQ(s.irreducibility, IrreducibilityEvidence::proven);
}

TEST(Dedekind, CyclotomicBridge) {
  for (u64 m = 1; m <= 100; ++m) {
    auto phi = cyclotomic_polynomial(m);
    auto z = cyclotomic_field(m);
    for (u64 p : oracle::primes_up_to(50)) {
      if (m % p == 0) continue;
      auto r = dedekind_index_test(phi, p);
      ASSERT_FALSE(r.index_divisible) << m << " " << p;
      auto s = splitting_data(z, p);
      std::vector<RamificationPair> expected(s.g, RamificationPair{s.e, s.f});
      EXPECT_EQ(as_multiset(*r.splitting), as_multiset(expected)) << m << " " << p;
      for (auto [e, f] : *r.splitting) {
        EXPECT_EQ(e, 1u);
        EXPECT_EQ(f, oracle::order(p, m));
      }
    }
  }
}

TEST(Dedekind, SplittingSumsToDegreeAndDiscriminantDetectsRepeats) {
  std::mt19937_64 rng(77);
  int done = 0;
  while (done < 300) {
    const int n = 2 + rng() % 5;
    std::vector<mpz_class> c(n + 1);
    for (int i = 0; i < n; ++i) c[i] = static_cast<long>(rng() % 41) - 20;
    c[n] = 1;
    IntPolynomial f(c);
    if (f.coefficient(0) == 0) continue;
    const u64 p = oracle::primes_up_to(13)[rng() % 6];
    DedekindReport r;
    try {
      r = dedekind_index_test(f, p, rng());
    } catch (const ValidationError&) {
      continue;  // integer root
    }
    const mpz_class d = discriminant(f);
    bool repeated = false;
    int total = 0;
    for (const auto& [g, e] : r.factors) {
      repeated = repeated || e > 1;
      total += g.degree() * e;
    }
    EXPECT_EQ(total, n);
    if (repeated) {
      EXPECT_EQ(d % p, 0);
    }
    if (!r.index_divisible) {
      u64 sum = 0;
      for (auto [e, fdeg] : *r.splitting) sum += e * fdeg;
      EXPECT_EQ(sum, static_cast<u64>(n));
      if (d % p == 0 && d != 0) {
        EXPECT_TRUE(repeated);
      }
    } else {
      EXPECT_TRUE(repeated);
      EXPECT_EQ(d % (mpz_class(p) * p), 0);
    }
    ++done;
  }
}

TEST(MonogenicBound, Values) {
  EXPECT_EQ(monogenic_degree_bound(2, 1), 4);
  EXPECT_EQ(monogenic_degree_bound(2, 3), 9216);
  EXPECT_EQ(monogenic_degree_bound(3, 2), 972);
  for (u64 p : {2u, 3u, 5u, 7u})
    for (u64 b = 1; b <= 6; ++b) {
      EXPECT_LT(monogenic_degree_bound(p, b), monogenic_degree_bound(p, b + 1));
      EXPECT_LT(monogenic_degree_bound(p, b), monogenic_degree_bound(next_prime(p), b));
    }
}

TEST(Eisenstein, Detection) {
  EXPECT_TRUE(is_eisenstein(eisenstein_cubic(5), 5));
  EXPECT_FALSE(is_eisenstein(IntPolynomial{1, 0, 1}, 2));
  EXPECT_TRUE(is_eisenstein(IntPolynomial{-7, 1}, 7));
  EXPECT_FALSE(is_eisenstein(IntPolynomial{-49, 1}, 7));
  EXPECT_FALSE(is_eisenstein(IntPolynomial{7, 0, 2}, 7));
}

TEST(Discriminant, Values) {
  EXPECT_EQ(discriminant(eisenstein_cubic(5)), 3325);
  EXPECT_EQ(discriminant(eisenstein_cubic(2)), 148);
  EXPECT_EQ(discriminant(eisenstein_cubic(3)), 621);
  EXPECT_EQ(discriminant(IntPolynomial{-1, 0, 1}), 4);
  EXPECT_EQ(discriminant(IntPolynomial{-8, -2, -1, 1}), -2012);
  // quadratic formula b^2 - 4ac and the cubic -4p^3 - 27q^2
  EXPECT_EQ(discriminant(IntPolynomial{3, 5, 2}), 25 - 24);
  EXPECT_EQ(discriminant(IntPolynomial{1, -1, 0, 1}), -4 * -1 * -1 * -1 - 27);
  EXPECT_THROW(discriminant(IntPolynomial{4}), ValidationError);
  for (u64 p : oracle::primes_up_to(60)) {
    const mpz_class mp(static_cast<unsigned long>(p));
    EXPECT_EQ(discriminant(eisenstein_cubic(p)), mp * mp * (32 * mp - 27));
  }
}

TEST(MonogenicScan, CyclotomicTwoPowerFamily) {
  std::vector<std::pair<std::string, IntPolynomial>> family;
  for (int n = 2; n <= 8; ++n) family.emplace_back("Phi_" + std::to_string(1 << n), cyclotomic_polynomial(1u << n));
  auto scan = monogenic_scan(family, 2, 1);
  ASSERT_EQ(scan.entries.size(), 7u);
  EXPECT_EQ(scan.index_free_labels().size(), 7u);
  // degrees 8..128 exceed 4, yet the family lives in a field of unbounded
  // local degree at 2, so these are not counterexamples to anything; the scan
  // flags them because B = 1 is the wrong bound for this family.
  EXPECT_EQ(scan.refutation_count(), 5u);
  auto honest = monogenic_scan(family, 2, 3);
  EXPECT_EQ(honest.refutation_count(), 0u);
}

TEST(MonogenicScan, Empty) {
  auto scan = monogenic_scan({}, 3, 2);
  EXPECT_TRUE(scan.entries.empty());
  EXPECT_EQ(scan.degree_bound, 972);
}
