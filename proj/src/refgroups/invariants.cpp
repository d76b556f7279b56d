#include <omp.h>

#include <numeric>
#include <unordered_map>

#include "polymap/errors.hpp"
#include "polymap/parser.hpp"
#include "polymap/refgroups.hpp"

namespace polymap {

namespace {

RingRef xy_ring(unsigned conductor) { return Ring::make({"x", "y"}, conductor); }

MultiPoly lift(const MultiPoly& p, unsigned conductor) {
  unsigned n = std::lcm(p.ring().conductor(), conductor);
  return p.in_ring(p.ring().with_conductor(n));
}

}  // namespace

MultiPoly act(const Matrix2& m, const MultiPoly& p) {
  if (p.ring().nvars() != 2) throw DomainError("group action needs a polynomial in two variables");
  unsigned n = std::lcm(p.ring().conductor(), m.conductor());
  RingRef ring = p.ring().with_conductor(n);
  Matrix2 me = m.embed(n);
  MultiPoly x = MultiPoly::variable(ring, 0), y = MultiPoly::variable(ring, 1);
  std::vector<MultiPoly> images{x * me.a[0] + y * me.a[1], x * me.a[2] + y * me.a[3]};
  return substitute(p.in_ring(ring), images);
}

bool is_invariant(const std::vector<Matrix2>& generators, const MultiPoly& p) {
  for (const auto& g : generators) {
    MultiPoly q = lift(p, g.conductor());
    if (act(g, q) != q) return false;
  }
  return true;
}

bool is_invariant(const GroupRecord& g, const MultiPoly& p) { return is_invariant(g.generators, p); }

namespace {

MultiPoly average(const MultiPoly& sum, std::size_t count) {
  return sum * CycloNumber(Rational(mpq_class(1, static_cast<unsigned long>(count))), sum.ring().conductor());
}

RingRef action_ring(const GroupElements& els, const MultiPoly& p) {
  if (els.elements.empty()) throw DomainError("empty element list");
  return p.ring().with_conductor(std::lcm(p.ring().conductor(), els.elements[0].conductor()));
}

}  // namespace

MultiPoly reynolds_serial(const GroupElements& els, const MultiPoly& p) {
  RingRef ring = action_ring(els, p);
  MultiPoly q = p.in_ring(ring), sum = MultiPoly(ring);
  for (const auto& g : els.elements) sum += act(g, q);
  return average(sum, els.size());
}

MultiPoly reynolds_parallel(const GroupElements& els, const MultiPoly& p) {
  RingRef ring = action_ring(els, p);
  MultiPoly q = p.in_ring(ring);
  const int threads = omp_get_max_threads();
  std::vector<MultiPoly> partial(static_cast<std::size_t>(threads), MultiPoly(ring));
  const auto n = static_cast<std::ptrdiff_t>(els.size());
#pragma omp parallel num_threads(threads)
  {
    MultiPoly& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) mine += act(els.elements[static_cast<std::size_t>(i)], q);
  }
  MultiPoly sum(ring);
  for (const auto& s : partial) sum += s;
  return average(sum, els.size());
}

MultiPoly reynolds(const GroupElements& els, const MultiPoly& p) {
  return els.size() >= 64 ? reynolds_parallel(els, p) : reynolds_serial(els, p);
}

MultiPoly klein_invariant(const std::string& name) {
  static const std::map<std::string, std::string> forms = {
      {"a4", "x^4 + (4*zeta(6)-2)*x^2*y^2 + y^4"},
      {"b6", "x^5*y - x*y^5"},
      {"c8", "x^8 + 14*x^4*y^4 + y^8"},
      {"d12", "x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12"},
      {"e12", "x^11*y + 11*x^6*y^6 - x*y^11"},
      {"f20", "x^20 - 228*x^15*y^5 + 494*x^10*y^10 + 228*x^5*y^15 + y^20"},
      {"g30", "x^30 + 522*x^25*y^5 - 10005*x^20*y^10 - 10005*x^10*y^20 - 522*x^5*y^25 + y^30"},
  };
  auto it = forms.find(name);
  if (it == forms.end()) throw DomainError("unknown invariant '" + name + "'");
  return parse_poly(it->second, {"x", "y"});
}

std::vector<ConstructionCheck> invariant_constructions() {
  auto k = [](const char* n) { return klein_invariant(n); };
  auto same = [](const MultiPoly& a, const MultiPoly& b) {
    unsigned n = std::lcm(a.ring().conductor(), b.ring().conductor());
    return associates(lift(a, n), lift(b, n));
  };
  return {
      {"Hessian(b6) ~ c8", same(hessian_det(k("b6")), k("c8"))},
      {"Jacobian(b6, c8) ~ d12", same(jacobian_det(k("b6"), k("c8")), k("d12"))},
      {"Jacobian(a4, Hessian(a4)) ~ b6", same(jacobian_det(k("a4"), hessian_det(k("a4"))), k("b6"))},
      {"Hessian(e12) ~ f20", same(hessian_det(k("e12")), k("f20"))},
      {"Jacobian(e12, f20) ~ g30", same(jacobian_det(k("e12"), k("f20")), k("g30"))},
  };
}

namespace {

// Table 4 pairs for the exceptional groups: (name, power) for phi1 and phi2.
struct ExceptionalPair {
  const char* a;
  unsigned pa;
  const char* b;
  unsigned pb;
};

ExceptionalPair exceptional_pair(int no) {
  switch (no) {
    case 4: return {"a4", 1, "b6", 1};
    case 5: return {"b6", 1, "a4", 3};
    case 6: return {"a4", 1, "b6", 2};
    case 7: return {"b6", 2, "a4", 3};
    case 8: return {"c8", 1, "d12", 1};
    case 9: return {"c8", 1, "d12", 2};
    case 10: return {"d12", 1, "c8", 3};
    case 11: return {"d12", 2, "c8", 3};
    case 12: return {"b6", 1, "c8", 1};
    case 13: return {"c8", 1, "b6", 2};
    case 14: return {"b6", 1, "d12", 2};
    case 15: return {"b6", 2, "d12", 2};
    case 16: return {"f20", 1, "g30", 1};
    case 17: return {"f20", 1, "g30", 2};
    case 18: return {"g30", 1, "f20", 3};
    case 19: return {"g30", 2, "f20", 3};
    case 20: return {"e12", 1, "g30", 1};
    case 21: return {"e12", 1, "g30", 2};
    case 22: return {"e12", 1, "f20", 1};
  }
  throw DomainError("exceptional group number must be in 4..22");
}

}  // namespace

std::pair<MultiPoly, MultiPoly> basic_invariants(const GroupRecord& g) {
  // kept in the smallest field holding the coefficients, not the group's
  RingRef ring = xy_ring(1);
  MultiPoly x = MultiPoly::variable(ring, 0), y = MultiPoly::variable(ring, 1);
  MultiPoly p1(ring), p2(ring);
  const auto& s = g.spec;
  switch (s.kind) {
    case GroupSpec::Kind::Cyclic:
      p1 = x;
      p2 = y.pow(static_cast<unsigned>(s.m));
      break;
    case GroupSpec::Kind::Product:
      p1 = x.pow(static_cast<unsigned>(s.m));
      p2 = y.pow(static_cast<unsigned>(s.n));
      break;
    case GroupSpec::Kind::Imprimitive: {
      unsigned e = static_cast<unsigned>(s.m / s.p);
      p1 = (x * y).pow(e);
      p2 = x.pow(static_cast<unsigned>(s.m)) + y.pow(static_cast<unsigned>(s.m));
      break;
    }
    case GroupSpec::Kind::Exceptional: {
      ExceptionalPair ep = exceptional_pair(s.no);
      p1 = klein_invariant(ep.a).pow(ep.pa);
      p2 = klein_invariant(ep.b).pow(ep.pb);
      break;
    }
  }
  {
    unsigned n = std::lcm(p1.ring().conductor(), p2.ring().conductor());
    p1 = lift(p1, n);
    p2 = lift(p2, n);
  }
  if (!is_invariant(g, p1) || !is_invariant(g, p2)) {
    throw ConsistencyError("basic set for " + s.name() + " is not invariant");
  }
  if (jacobian_det(p1, p2).is_zero()) {
    throw ConsistencyError("basic set for " + s.name() + " is algebraically dependent");
  }
  if (static_cast<std::size_t>(p1.total_degree()) * static_cast<std::size_t>(p2.total_degree()) != g.expected_order) {
    throw ConsistencyError("degrees of the basic set for " + s.name() + " do not multiply to the group order");
  }
  return {p1, p2};
}

PolyMap quotient_map(const GroupRecord& g) {
  auto [p1, p2] = basic_invariants(g);
  return PolyMap(p1, p2);
}

namespace {

// Solve A c = b over a cyclotomic field; nullopt if inconsistent. Free
// unknowns are set to zero.
std::optional<std::vector<CycloNumber>> solve_linear(std::vector<std::vector<CycloNumber>> a,
                                                     std::vector<CycloNumber> b, std::size_t ncols,
                                                     unsigned conductor) {
  const std::size_t nrows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t piv = r;
    while (piv < nrows && a[piv][c].is_zero()) ++piv;
    if (piv == nrows) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    CycloNumber inv = a[r][c].inverse();
    for (std::size_t j = c; j < ncols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      CycloNumber f = a[i][c];
      for (std::size_t j = c; j < ncols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < nrows; ++i) {
    if (!b[i].is_zero()) return std::nullopt;
  }
  std::vector<CycloNumber> x(ncols, CycloNumber::zero(conductor));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

// Finds P(s, t) with target = P(g1, g2), searching monomials s^a t^b of
// weighted degree a*deg g1 + b*deg g2 <= deg target.
std::optional<MultiPoly> express_in(const MultiPoly& target, const MultiPoly& g1, const MultiPoly& g2,
                                    const RingRef& out_ring) {
  const unsigned d1 = g1.total_degree(), d2 = g2.total_degree(), dt = target.total_degree();
  if (d1 == 0 || d2 == 0) throw DomainError("basic set members must be nonconstant");
  std::vector<std::pair<unsigned, unsigned>> exps;
  std::vector<MultiPoly> products;
  MultiPoly pa = MultiPoly::constant(g1.ring_ptr(), Rational(1));
  for (unsigned a = 0; a * d1 <= dt; ++a) {
    MultiPoly pb = pa;
    for (unsigned b = 0; a * d1 + b * d2 <= dt; ++b) {
      exps.emplace_back(a, b);
      products.push_back(pb);
      pb = pb * g2;
    }
    pa = pa * g1;
  }
  // rows: every monomial occurring in the target or any product
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  auto note = [&](const MultiPoly& p) {
    for (const auto& t : p.terms()) row_of.emplace(t.mono, 0);
  };
  note(target);
  for (const auto& p : products) note(p);
  std::size_t idx = 0;
  for (auto& [m, i] : row_of) i = idx++;
  const unsigned n = target.ring().conductor();
  std::vector<std::vector<CycloNumber>> a(idx, std::vector<CycloNumber>(products.size(), CycloNumber::zero(n)));
  std::vector<CycloNumber> b(idx, CycloNumber::zero(n));
  for (std::size_t j = 0; j < products.size(); ++j) {
    for (const auto& t : products[j].terms()) a[row_of[t.mono]][j] = t.coeff;
  }
  for (const auto& t : target.terms()) b[row_of[t.mono]] = t.coeff;
  auto sol = solve_linear(std::move(a), std::move(b), products.size(), n);
  if (!sol) return std::nullopt;
  MultiPolyBuilder out(out_ring);
  for (std::size_t j = 0; j < exps.size(); ++j) {
    if ((*sol)[j].is_zero()) continue;
    Monomial m{};
    m.e[0] = static_cast<std::uint16_t>(exps[j].first);
    m.e[1] = static_cast<std::uint16_t>(exps[j].second);
    out.add(m, (*sol)[j]);
  }
  return std::move(out).build();
}

}  // namespace

PlaneAutomorphism basic_set_transition(const std::pair<MultiPoly, MultiPoly>& phi,
                                       const std::pair<MultiPoly, MultiPoly>& psi) {
  unsigned n = 1;
  for (const MultiPoly* p : {&phi.first, &phi.second, &psi.first, &psi.second}) n = std::lcm(n, p->ring().conductor());
  RingRef ring = xy_ring(n);
  auto up = [&](const MultiPoly& p) {
    if (p.ring().nvars() != 2) throw DomainError("basic sets live in two variables");
    return p.in_ring(ring);
  };
  MultiPoly f1 = up(phi.first), f2 = up(phi.second), g1 = up(psi.first), g2 = up(psi.second);
  auto solve = [&](const MultiPoly& t, const MultiPoly& a, const MultiPoly& b) {
    auto r = express_in(t, a, b, ring);
    if (!r) throw DomainError("the two pairs are not related by a polynomial automorphism");
    return *r;
  };
  PolyMap forward(solve(f1, g1, g2), solve(f2, g1, g2));
  PolyMap backward(solve(g1, f1, f2), solve(g2, f1, f2));
  PlaneAutomorphism result(forward, backward);
  if (!(compose_maps(result.forward(), PolyMap(g1, g2)) == PolyMap(f1, f2))) {
    throw ConsistencyError("transition does not reproduce the first basic set");
  }
  return result;
}

std::vector<Table4Row> table4_catalog() {
  std::vector<Table4Row> rows;
  auto claim = [](const std::string& text, const PolyMap& map) { return parse_poly(text, map.ring()); };
  auto add = [&](std::string id, const GroupSpec& spec, const std::string& claimed, bool mandatory) {
    GroupRecord g = build_group(spec);
    PolyMap map = quotient_map(g);
    rows.push_back({std::move(id), spec, map, claim(claimed, map), mandatory});
  };
  for (int m = 2; m <= 6; ++m) add("f_" + std::to_string(m), GroupSpec::cyclic(m), "y", true);
  for (int m = 2; m <= 4; ++m) {
    for (int n = m; n <= 4; ++n) {
      add("f_" + std::to_string(m) + "," + std::to_string(n), GroupSpec::product(m, n), "x*y", true);
    }
  }
  for (int m = 2; m <= 6; ++m) {
    for (int p = 1; p <= m; ++p) {
      if (m % p != 0 || (m == 2 && p == 2)) continue;
      std::string pw = std::to_string(p);
      std::string claimed = p == m ? "y^2 - 4*x^" + pw : "x*(y^2 - 4*x^" + pw + ")";
      add("f_" + std::to_string(m) + "," + pw + ",2", GroupSpec::imprimitive(m, p), claimed, true);
    }
  }
  // Printed branch curves; xi = zeta(6) and 1/xi = 1 - xi.
  const std::string c4 = "(-24*zeta(6)+12)";
  const std::string c5 = "(1/18*(1-zeta(6))-1/36)";
  const std::vector<std::pair<int, std::string>> exceptional = {
      {4, "x^3 + " + c4 + "*y^2"},
      {5, "y*(x^2 + " + c5 + "*y)"},
      {6, "y*(x^3 + " + c4 + "*y^2)"},
      {7, "x*y*(x + " + c5 + "*y)"},
      {8, "y^2 - x^3"},
      {9, "y*(y - x^3)"},
      {10, "y*(y - x^2)"},
      {11, "x*y*(x - y)"},
      {12, "y^3 - 108*x^4"},
      {13, "y*(x^3 - 108*y^2)"},
      {14, "y*(y + 108*x^4)"},
      {15, "x*y*(y + 108*x^2)"},
      {16, "y^2 - x^3"},
      {17, "y*(y - x^3)"},
      {18, "y*(y - x^2)"},
      {19, "x*y*(x - y)"},
      {20, "y^2 - 1728*x^5"},
      {21, "y*(y - 1728*x^5)"},
      {22, "y^3 + 1728*x^5"},
  };
  for (const auto& [no, text] : exceptional) {
    bool mandatory = no <= 7 || no == 12;
    add("f~" + std::to_string(no), GroupSpec::exceptional(no), text, mandatory);
  }
  return rows;
}

}  // namespace polymap
