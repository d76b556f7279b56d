#include <gtest/gtest.h>

#include <random>

#include "polymap/errors.hpp"
#include "polymap/refgroups.hpp"
#include "support.hpp"

using namespace polymap;
using polymap::testing::P;

namespace {

std::size_t involutions(const GroupSpec& s) {
  GroupRecord g = build_group(s);
  return fingerprint(g, enumerate(g)).order_histogram[2];
}

}  // namespace

TEST(Groups, Construction) {
  GroupRecord d8 = build_group(GroupSpec::imprimitive(4, 4));
  EXPECT_EQ(d8.expected_order, 8u);
  EXPECT_EQ(enumerate(d8).size(), 8u);

  GroupRecord g4 = build_group(GroupSpec::exceptional(4));
  ASSERT_TRUE(g4.lambda && g4.mu);
  EXPECT_EQ(*g4.lambda, CycloNumber(Rational(-1), g4.lambda->conductor()));
  EXPECT_EQ(*g4.mu, -CycloNumber::zeta(3).embed(g4.mu->conductor()));
  EXPECT_EQ(g4.k, 2);
  EXPECT_EQ(g4.conductor, 24u);

  GroupRecord c5 = build_group(GroupSpec::cyclic(5));
  ASSERT_EQ(c5.generators.size(), 1u);
  EXPECT_EQ(c5.generators[0], Matrix2::of(CycloNumber::one(5), CycloNumber::zero(5), CycloNumber::zero(5),
                                          CycloNumber::zeta(5)));
  EXPECT_THROW(build_group(GroupSpec::imprimitive(4, 3)), DomainError);
  EXPECT_THROW(build_group(GroupSpec::exceptional(23)), DomainError);
}

TEST(Groups, SpecNames) {
  for (const char* s : {"cyclic(5)", "product(2,3)", "G(4,2,2)", "G4", "G22"}) {
    EXPECT_EQ(GroupSpec::parse(s).name(), s);
  }
  EXPECT_EQ(GroupSpec::parse("imprimitive(6,3)"), GroupSpec::imprimitive(6, 3));
  EXPECT_EQ(GroupSpec::parse("exceptional(12)"), GroupSpec::exceptional(12));
  EXPECT_THROW(GroupSpec::parse("G(4)"), DomainError);
}

TEST(Groups, EnumerationOrders) {
  EXPECT_EQ(enumerate(build_group(GroupSpec::exceptional(4))).size(), 24u);
  EXPECT_EQ(enumerate(build_group(GroupSpec::imprimitive(6, 2))).size(), 36u);
  for (int m = 2; m <= 6; ++m) {
    for (int p = 1; p <= m; ++p) {
      if (m % p != 0 || (m == 2 && p == 2)) continue;
      GroupRecord g = build_group(GroupSpec::imprimitive(m, p));
      GroupElements els = enumerate(g);
      EXPECT_EQ(els.size(), std::size_t(2 * m * m / p)) << g.spec.name();
      EXPECT_EQ(std::size_t(g.degrees[0]) * g.degrees[1], els.size());
    }
  }
  for (int m = 2; m <= 4; ++m) {
    for (int n = m; n <= 4; ++n) EXPECT_EQ(enumerate(build_group(GroupSpec::product(m, n))).size(), std::size_t(m * n));
  }
}

TEST(Groups, ClosureHoldsOnSmallGroups) {
  for (int no : {4, 5, 8, 12}) {
    GroupElements els = enumerate(build_group(GroupSpec::exceptional(no)));
    ASSERT_TRUE(els.elements[0].is_identity());
    for (std::size_t i = 0; i < els.size(); i += 7) {
      for (std::size_t j = 0; j < els.size(); j += 5) EXPECT_TRUE(els.contains(els.elements[i] * els.elements[j]));
    }
  }
}

TEST(Groups, Fingerprints) {
  EXPECT_EQ(involutions(GroupSpec::imprimitive(4, 1)), 7u);
  EXPECT_EQ(involutions(GroupSpec::imprimitive(8, 4)), 11u);
  GroupRecord g4 = build_group(GroupSpec::exceptional(4));
  EXPECT_EQ(fingerprint(g4, enumerate(g4)).center_order, 2u);
}

TEST(Groups, Presentations) {
  EXPECT_TRUE(verify_presentation(build_group(GroupSpec::exceptional(4))));
  EXPECT_TRUE(verify_presentation(build_group(GroupSpec::exceptional(16))));
  GroupRecord bad = build_group(GroupSpec::exceptional(4));
  bad.k1 += 1;
  EXPECT_FALSE(verify_presentation(bad));
}

TEST(Invariants, PrintedForms) {
  GroupRecord g4 = build_group(GroupSpec::exceptional(4));
  EXPECT_TRUE(is_invariant(g4, klein_invariant("a4")));
  EXPECT_TRUE(is_invariant(build_group(GroupSpec::exceptional(12)), klein_invariant("b6")));
  EXPECT_FALSE(is_invariant(g4, P("x")));
  for (const auto& c : invariant_constructions()) EXPECT_TRUE(c.holds) << c.identity;
  EXPECT_THROW(klein_invariant("z9"), DomainError);
}

TEST(Invariants, Reynolds) {
  GroupRecord g4 = build_group(GroupSpec::exceptional(4));
  GroupElements els = enumerate(g4);
  MultiPoly a4 = klein_invariant("a4");
  MultiPoly r = reynolds(els, P("x^4"));
  EXPECT_TRUE(associates(r, a4.in_ring(r.ring_ptr())));
  EXPECT_TRUE(reynolds(els, P("x")).is_zero());
  MultiPoly a4g = a4.in_ring(Ring::make({"x", "y"}, g4.conductor));
  EXPECT_EQ(reynolds(els, a4g), a4g);
}

TEST(Invariants, BasicSets) {
  auto [a, b] = basic_invariants(build_group(GroupSpec::exceptional(4)));
  EXPECT_EQ(a.total_degree() * b.total_degree(), 24u);
  EXPECT_TRUE(associates(a, klein_invariant("a4").in_ring(a.ring_ptr())));
  auto [e, f] = basic_invariants(build_group(GroupSpec::exceptional(22)));
  EXPECT_EQ(e.total_degree(), 12u);
  EXPECT_EQ(f.total_degree(), 20u);
  for (int m = 2; m <= 5; ++m) {
    EXPECT_EQ(quotient_map(build_group(GroupSpec::cyclic(m))), parse_map("(x, y^" + std::to_string(m) + ")"));
  }
  for (auto [m, p] : {std::pair{4, 2}, std::pair{3, 1}, std::pair{6, 3}}) {
    PolyMap q = quotient_map(build_group(GroupSpec::imprimitive(m, p)));
    std::string k = std::to_string(m / p), mm = std::to_string(m);
    EXPECT_EQ(q, parse_map("(x^" + k + "*y^" + k + ", x^" + mm + "+y^" + mm + ")", q.ring()->conductor()));
  }
}

TEST(Invariants, QuotientDegreesMatchOrders) {
  for (auto s : {GroupSpec::cyclic(4), GroupSpec::product(2, 3), GroupSpec::imprimitive(4, 2), GroupSpec::exceptional(4)}) {
    GroupRecord g = build_group(s);
    EXPECT_EQ(topological_degree(quotient_map(g)), g.expected_order) << s.name();
  }
}

TEST(Invariants, Transitions) {
  MultiPoly a4 = klein_invariant("a4"), b6 = klein_invariant("b6");
  PlaneAutomorphism t = basic_set_transition({a4 * Rational(3), b6 * Rational(5)}, {a4, b6});
  EXPECT_EQ(t.forward(), parse_map("(3*x, 5*y)", t.forward().ring()->conductor()));
  PlaneAutomorphism u = basic_set_transition({P("x^2+y^2"), P("(x^2+y^2)^2 - 4*x^2*y^2")}, {P("x^2+y^2"), P("x^2*y^2")});
  EXPECT_EQ(u.forward(), parse_map("(x, x^2 - 4*y)"));
  PlaneAutomorphism id = basic_set_transition({a4, b6}, {a4, b6});
  EXPECT_EQ(id.forward(), PlaneAutomorphism::identity(id.forward().ring()).forward());
  EXPECT_THROW(basic_set_transition({P("x^2+y^2"), P("x*y")}, {P("x^2+y^2"), P("x^2*y^2")}), DomainError);
}

TEST(Invariants, TransitionReproducesPhi) {
  std::mt19937_64 rng(61);
  MultiPoly s = P("x^2+y^2"), q = P("x^2*y^2");
  for (int trial = 0; trial < 10; ++trial) {
    Rational a = polymap::testing::small_rational(rng, 4, true), b = polymap::testing::small_rational(rng, 4, true);
    Rational c = polymap::testing::small_rational(rng, 4);
    std::pair<MultiPoly, MultiPoly> phi{s * a, q * b + s * s * c};
    PlaneAutomorphism t = basic_set_transition(phi, {s, q});
    std::vector<MultiPoly> psi{s, q};
    EXPECT_EQ(substitute(t.forward().f1(), psi), phi.first);
    EXPECT_EQ(substitute(t.forward().f2(), psi), phi.second);
  }
}

TEST(Invariants, ReynoldsOutputIsInvariant) {
  std::mt19937_64 rng(62);
  for (auto s : {GroupSpec::imprimitive(4, 2), GroupSpec::product(2, 3), GroupSpec::exceptional(5)}) {
    GroupRecord g = build_group(s);
    GroupElements els = enumerate(g);
    RingRef r = Ring::make({"x", "y"}, g.conductor);
    for (int trial = 0; trial < 3; ++trial) {
      MultiPoly p = polymap::testing::random_poly(rng, r, 6);
      EXPECT_TRUE(is_invariant(g, reynolds(els, p))) << s.name();
    }
  }
}

TEST(Invariants, ConjugateGroupsShareFingerprints) {
  GroupRecord a = build_group(GroupSpec::imprimitive(2, 1)), b = build_group(GroupSpec::imprimitive(4, 4));
  EXPECT_EQ(fingerprint(a, enumerate(a)), fingerprint(b, enumerate(b)));
}

TEST(Classes, Degrees) {
  EXPECT_EQ(classes_of_degree(2), std::vector<GroupSpec>{GroupSpec::cyclic(2)});
  EXPECT_EQ(classes_of_degree(7), std::vector<GroupSpec>{GroupSpec::cyclic(7)});
  auto c24 = classes_of_degree(24);
  auto has = [&](const GroupSpec& s) { return std::find(c24.begin(), c24.end(), s) != c24.end(); };
  EXPECT_TRUE(has(GroupSpec::cyclic(24)));
  EXPECT_TRUE(has(GroupSpec::product(2, 12)));
  EXPECT_TRUE(has(GroupSpec::product(3, 8)));
  EXPECT_TRUE(has(GroupSpec::product(4, 6)));
  EXPECT_TRUE(has(GroupSpec::imprimitive(6, 3)));
  EXPECT_TRUE(has(GroupSpec::imprimitive(12, 12)));
  EXPECT_TRUE(has(GroupSpec::exceptional(4)));
  EXPECT_EQ(c24.size(), 7u);
  for (const auto& s : c24) EXPECT_EQ(enumerate(build_group(s)).size(), 24u) << s.name();
}

TEST(Kernels, ElementOrdersAgree) {
  for (int no : {4, 6, 8, 13}) {
    GroupRecord g = build_group(GroupSpec::exceptional(no));
    GroupElements els = enumerate(g);
    EXPECT_EQ(element_orders_serial(els), element_orders_parallel(els)) << no;
  }
}

TEST(Kernels, ReynoldsAgree) {
  GroupRecord g = build_group(GroupSpec::exceptional(8));
  GroupElements els = enumerate(g);
  MultiPoly p = P("x^8 + 3*x^3*y^5 - y^8 + x^4*y^4");
  EXPECT_EQ(reynolds_serial(els, p), reynolds_parallel(els, p));
}

TEST(Table4, CatalogShape) {
  auto rows = table4_catalog();
  std::size_t exceptional = 0;
  for (const auto& r : rows) {
    GroupRecord g = build_group(r.group);
    EXPECT_EQ(std::size_t(r.map.f1().total_degree()) * r.map.f2().total_degree(), g.expected_order) << r.id;
    if (r.group.kind == GroupSpec::Kind::Exceptional) ++exceptional;
  }
  EXPECT_EQ(exceptional, 19u);
}
