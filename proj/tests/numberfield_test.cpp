#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "polymap/cyclo.hpp"
#include "polymap/errors.hpp"
#include "support.hpp"

using namespace polymap;
using polymap::testing::small_rational;

namespace {

std::vector<mpz_class> mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  std::vector<mpz_class> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

CycloNumber random_cyclo(std::mt19937_64& rng, unsigned n) {
  std::vector<Rational> c(euler_phi(n));
  for (auto& v : c) v = small_rational(rng, 7);
  return CycloNumber::from_coords(n, c);
}

}  // namespace

TEST(Cyclotomic, SmallPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<mpz_class>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<mpz_class>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(24), (std::vector<mpz_class>{1, 0, 0, 0, -1, 0, 0, 0, 1}));
}

TEST(Cyclotomic, ProductOverDivisorsIsXnMinusOne) {
  for (unsigned n = 1; n <= 120; ++n) {
    std::vector<mpz_class> prod{1};
    for (unsigned d = 1; d <= n; ++d) {
      if (n % d == 0) prod = mul(prod, cyclotomic_polynomial(d));
    }
    std::vector<mpz_class> expect(n + 1, 0);
    expect[0] = -1;
    expect[n] = 1;
    ASSERT_EQ(prod, expect) << "n = " << n;
    EXPECT_EQ(cyclotomic_polynomial(n).size() - 1, euler_phi(n));
  }
}

TEST(Cyclotomic, Products) {
  EXPECT_EQ(CycloNumber::zeta(4) * CycloNumber::zeta(4), CycloNumber(Rational(-1), 4));
  CycloNumber r2 = CycloNumber::zeta(8) - CycloNumber::zeta(8, 3);
  EXPECT_EQ(r2 * r2, CycloNumber(Rational(2), 8));
  CycloNumber a = CycloNumber::zeta(12, 5) + CycloNumber(Rational(3, 7), 12);
  EXPECT_EQ(CycloNumber::one(12) * a, a);
}

TEST(Cyclotomic, Inverses) {
  EXPECT_TRUE(CycloNumber::one(5).inverse().is_one());
  EXPECT_EQ(CycloNumber::zeta(4).inverse(), -CycloNumber::zeta(4));
  CycloNumber h = (CycloNumber::zeta(8) - CycloNumber::zeta(8, 3)).inverse();
  EXPECT_EQ(h * h, CycloNumber(Rational(1, 2), 8));
  EXPECT_THROW(CycloNumber::zero(7).inverse(), DivisionByZero);
}

TEST(Cyclotomic, Embeddings) {
  EXPECT_EQ(CycloNumber::zeta(3).embed(24), CycloNumber::zeta(24, 8));
  EXPECT_EQ(CycloNumber::zeta(8).embed(24), CycloNumber::zeta(24, 3));
  CycloNumber a = CycloNumber::zeta(5, 2) - CycloNumber(Rational(1, 3), 5);
  EXPECT_EQ(a.embed(5), a);
  EXPECT_THROW(CycloNumber::zeta(8).embed(12), ConductorMismatch);
  EXPECT_THROW(CycloNumber::zeta(3) + CycloNumber::zeta(4), ConductorMismatch);
}

TEST(Cyclotomic, Approximation) {
  EXPECT_NEAR(std::abs(CycloNumber::one(1).approx() - std::complex<double>(1, 0)), 0, 1e-12);
  EXPECT_NEAR(std::abs(CycloNumber::zeta(4).approx() - std::complex<double>(0, 1)), 0, 1e-12);
  EXPECT_NEAR(std::abs((CycloNumber::zeta(8) - CycloNumber::zeta(8, 3)).approx() - std::sqrt(2.0)), 0, 1e-12);
}

TEST(CyclotomicProperty, FieldAxioms) {
  std::mt19937_64 rng(11);
  for (unsigned n : {3u, 5u, 8u, 12u, 24u, 60u}) {
    for (int trial = 0; trial < 20; ++trial) {
      CycloNumber a = random_cyclo(rng, n), b = random_cyclo(rng, n), c = random_cyclo(rng, n);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inverse()).is_one());
      }
      EXPECT_LT(std::abs((a * b).approx() - a.approx() * b.approx()), 1e-9 * (1 + std::abs(a.approx() * b.approx())));
    }
  }
}

TEST(CyclotomicProperty, EmbeddingIsHomomorphism) {
  std::mt19937_64 rng(12);
  const std::pair<unsigned, unsigned> pairs[] = {{3, 24}, {8, 24}, {5, 60}, {4, 12}, {6, 30}, {1, 7}};
  for (auto [n, m] : pairs) {
    for (int trial = 0; trial < 20; ++trial) {
      CycloNumber a = random_cyclo(rng, n), b = random_cyclo(rng, n);
      EXPECT_EQ((a * b).embed(m), a.embed(m) * b.embed(m));
      EXPECT_EQ((a + b).embed(m), a.embed(m) + b.embed(m));
      EXPECT_LT(std::abs(a.embed(m).approx() - a.approx()), 1e-9 * (1 + std::abs(a.approx())));
    }
  }
}

TEST(Rationals, Parse) {
  EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
}
