#include <gtest/gtest.h>

#include <random>

#include "polymap/errors.hpp"
#include "polymap/groebner.hpp"
#include "polymap/polyalg.hpp"
#include "support.hpp"

using namespace polymap;
using polymap::testing::P;
using polymap::testing::random_poly;
using polymap::testing::xy;

namespace {

MultiPoly spoly(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order) {
  const auto& lf = f.leading_term(order);
  const auto& lg = g.leading_term(order);
  Monomial l = Monomial::lcm(lf.mono, lg.mono);
  return f.shifted(Monomial::quotient(l, lf.mono), lf.coeff.inverse()) -
         g.shifted(Monomial::quotient(l, lg.mono), lg.coeff.inverse());
}

// Monomials x^i y^j with i, j < bound not divisible by any generator.
std::size_t brute_staircase(const std::vector<Monomial>& gens, unsigned bound) {
  std::size_t count = 0;
  for (unsigned i = 0; i < bound; ++i) {
    for (unsigned j = 0; j < bound; ++j) {
      Monomial m;
      m.e[0] = static_cast<std::uint16_t>(i);
      m.e[1] = static_cast<std::uint16_t>(j);
      bool divisible = false;
      for (const auto& g : gens) divisible = divisible || g.divides(m);
      if (!divisible) ++count;
    }
  }
  return count;
}

}  // namespace

TEST(Buchberger, Examples) {
  IdealBasis b = buchberger({P("x"), P("y")}, MonomialOrder::lex(2));
  ASSERT_EQ(b.basis().size(), 2u);
  EXPECT_EQ(b.basis()[0] * b.basis()[1], P("x*y"));

  RingRef yx = Ring::make({"y", "x"});
  IdealBasis c = buchberger({parse_poly("y^2-x^3", yx), parse_poly("y", yx)}, MonomialOrder::lex(2));
  bool has_x3 = false;
  for (const auto& g : c.basis()) has_x3 = has_x3 || g == parse_poly("x^3", yx);
  EXPECT_TRUE(has_x3);
  EXPECT_TRUE(normal_form(parse_poly("x^3", yx), c).is_zero());
  EXPECT_TRUE(normal_form(parse_poly("y^2-x^3", yx), c).is_zero());
  EXPECT_EQ(normal_form(parse_poly("1", yx), c), parse_poly("1", yx));
  EXPECT_THROW(buchberger({P("x")}, MonomialOrder::local(2)), DomainError);
}

TEST(Elimination, Examples) {
  RingRef r = Ring::make({"x", "y", "s", "t"});
  std::vector<MultiPoly> whitney{parse_poly("3*y^2+x", r), parse_poly("s-x", r), parse_poly("t-y^3-x*y", r)};
  auto e = elimination_ideal(whitney, {"x", "y"});
  ASSERT_EQ(e.size(), 1u);
  EXPECT_TRUE(associates(e[0], parse_poly("4*s^3+27*t^2", r)));

  RingRef xs = Ring::make({"x", "s"});
  EXPECT_TRUE(elimination_ideal({parse_poly("x-s", xs)}, {"s"}).empty());
}

TEST(QuotientDimension, Examples) {
  EXPECT_EQ(quotient_dimension(buchberger({P("x"), P("y")}, MonomialOrder::degrevlex(2))), Dimension(1));
  for (int d = 2; d <= 5; ++d) {
    for (int n = 2; n <= 5; ++n) {
      auto b = buchberger({P("x^" + std::to_string(n - 1)), P("y^" + std::to_string(d - 1))}, MonomialOrder::degrevlex(2));
      EXPECT_EQ(quotient_dimension(b), Dimension((d - 1) * (n - 1)));
    }
  }
  EXPECT_EQ(quotient_dimension(buchberger({P("x")}, MonomialOrder::degrevlex(2))), std::nullopt);
  EXPECT_EQ(format_dimension(std::nullopt), "infinite");
}

TEST(Mora, Examples) {
  EXPECT_EQ(local_quotient_dimension(mora_standard_basis({P("y"), P("x")})), Dimension(1));
  EXPECT_EQ(local_quotient_dimension(mora_standard_basis({P("-3*x^2"), P("2*y")})), Dimension(2));
  EXPECT_EQ(local_quotient_dimension(mora_standard_basis({P("y+3*x^2"), P("x+3*y^2")})), Dimension(1));
  // a unit generates the whole local ring
  EXPECT_EQ(local_quotient_dimension(mora_standard_basis({P("1+x"), P("y")})), Dimension(0));
  EXPECT_EQ(local_quotient_dimension(mora_standard_basis({P("x*y")})), std::nullopt);
}

TEST(Mora, NodeOracleFromResultant) {
  // The four common zeros of y+3x^2, x+3y^2 are simple: the resultant in y
  // is squarefree of degree 4 and vanishes at 0, so the origin counts once.
  MultiPoly a = P("y+3*x^2"), b = P("x+3*y^2");
  MultiPoly res = resultant(a, b, "y");
  EXPECT_EQ(res.total_degree(), 4u);
  EXPECT_TRUE(gcd_poly(res, res.derivative(0)).is_constant());
  EXPECT_EQ(quotient_dimension(buchberger({a, b}, MonomialOrder::degrevlex(2))), Dimension(4));
  EXPECT_EQ(local_quotient_dimension(mora_standard_basis({a, b})), Dimension(1));
}

TEST(Budgets, ExhaustionIsReported) {
  Budget tiny;
  tiny.max_work = 10;
  RingRef r = Ring::make({"x", "y", "s", "t"});
  std::vector<MultiPoly> gens{parse_poly("3*y^2+x", r), parse_poly("s-x", r), parse_poly("t-y^3-x*y", r)};
  EXPECT_THROW(elimination_ideal(gens, {"x", "y"}, {}, tiny), ResourceExceeded);
  EXPECT_GT(Budget::scaled(2).max_work, Budget::scaled(1).max_work);
}

TEST(BuchbergerProperty, SPolynomialsReduceToZero) {
  std::mt19937_64 rng(31);
  RingRef r = xy();
  for (const auto& order : {MonomialOrder::degrevlex(2), MonomialOrder::lex(2)}) {
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<MultiPoly> gens{random_poly(rng, r, 3), random_poly(rng, r, 3)};
      if (gens[0].is_zero() || gens[1].is_zero()) continue;
      IdealBasis b = buchberger(gens, order);
      const auto& g = b.basis();
      for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) EXPECT_TRUE(normal_form(spoly(g[i], g[j], order), b).is_zero());
      }
      for (const auto& gen : gens) EXPECT_TRUE(normal_form(gen, b).is_zero());
      MultiPoly p = random_poly(rng, r, 4);
      MultiPoly nf = normal_form(p, b);
      EXPECT_EQ(normal_form(nf, b), nf);
    }
  }
}

TEST(GroebnerProperty, EliminationAgreesWithResultant) {
  std::mt19937_64 rng(32);
  RingRef r = xy();
  for (int trial = 0; trial < 20; ++trial) {
    // monic in y, so the projection is closed and only radicals can differ
    MultiPoly a = random_poly(rng, r, 2) + P("y^3");
    MultiPoly b = trial % 2 == 0 ? random_poly(rng, r, 1) + P("y^2") : random_poly(rng, r, 2) + P("y^3");
    MultiPoly res = resultant(a, b, "y");
    auto e = elimination_ideal({a, b}, {"y"});
    if (res.is_zero()) {
      EXPECT_TRUE(e.empty());
      continue;
    }
    ASSERT_EQ(e.size(), 1u);
    EXPECT_TRUE(exact_div(res, e[0]).has_value());
    EXPECT_EQ(squarefree_part(res), squarefree_part(e[0]));
  }
}

TEST(MoraProperty, MonomialIdealsMatchStaircase) {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<int> ex(0, 5), extra(0, 3);
  RingRef r = xy();
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Monomial> mons{Monomial::var(0, 1 + ex(rng)), Monomial::var(1, 1 + ex(rng))};
    for (int k = extra(rng); k > 0; --k) {
      Monomial m;
      m.e[0] = static_cast<std::uint16_t>(ex(rng));
      m.e[1] = static_cast<std::uint16_t>(ex(rng));
      if (!m.is_one()) mons.push_back(m);
    }
    std::vector<MultiPoly> gens;
    for (const auto& m : mons) gens.push_back(MultiPoly::monomial(r, m, CycloNumber::one(1)));
    EXPECT_EQ(local_quotient_dimension(mora_standard_basis(gens)), Dimension(brute_staircase(mons, 8)));
    EXPECT_EQ(staircase_count(mons, 2), Dimension(brute_staircase(mons, 8)));
  }
}

TEST(MoraProperty, TerminatesWithinCeiling) {
  Budget ceiling;
  ceiling.max_work = 5'000'000;
  for (int d = 2; d <= 5; ++d) {
    for (int n = 2; n <= 5; ++n) {
      MultiPoly f = P("y^" + std::to_string(d) + " - x^" + std::to_string(n) + " + x^2*y^2");
      IdealBasis b = mora_standard_basis({f.derivative(0), f.derivative(1)}, ceiling);
      EXPECT_LT(b.stats().work, ceiling.max_work);
    }
  }
}
