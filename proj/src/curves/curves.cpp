#include "polymap/curves.hpp"

#include <numeric>

#include "polymap/errors.hpp"
#include "polymap/parser.hpp"
#include "polymap/polyalg.hpp"

namespace polymap {

namespace {

void require_plane(const MultiPoly& f) {
  if (f.ring().nvars() != 2) throw DomainError("plane curve expected in two variables");
}

std::vector<MultiPoly> nonzero(std::initializer_list<MultiPoly> ps) {
  std::vector<MultiPoly> out;
  for (const auto& p : ps) {
    if (!p.is_zero()) out.push_back(p);
  }
  return out;
}

Dimension local_dimension(const std::vector<MultiPoly>& gens, const Budget& budget) {
  if (gens.empty()) return std::nullopt;
  return local_quotient_dimension(mora_standard_basis(gens, budget));
}

bool is_squarefree(const MultiPoly& f) {
  if (f.is_constant()) return true;
  return squarefree_part(f).total_degree() == f.total_degree();
}

CycloNumber coefficient(const MultiPoly& f, unsigned ex, unsigned ey) {
  for (const auto& t : f.terms()) {
    if (t.mono.e[0] == ex && t.mono.e[1] == ey) return t.coeff;
  }
  return CycloNumber::zero(f.ring().conductor());
}

}  // namespace

MilnorResult milnor_at_origin(const MultiPoly& f, const Budget& budget) {
  require_plane(f);
  std::vector<CycloNumber> origin(2, CycloNumber::zero(f.ring().conductor()));
  if (!f.evaluate(origin).is_zero()) throw DomainError("the curve does not pass through the origin");
  MilnorResult r;
  r.value = local_dimension(nonzero({f.derivative(0), f.derivative(1)}), budget);
  r.isolated = r.value.has_value();
  r.standard_monomials = r.value.value_or(0);
  return r;
}

MultiPoly translate_to_origin(const MultiPoly& f, const CycloNumber& a, const CycloNumber& b) {
  require_plane(f);
  unsigned n = std::lcm(f.ring().conductor(), std::lcm(a.conductor(), b.conductor()));
  RingRef ring = f.ring().with_conductor(n);
  std::vector<MultiPoly> images{MultiPoly::variable(ring, 0) + MultiPoly::constant(ring, a.embed(n)),
                                MultiPoly::variable(ring, 1) + MultiPoly::constant(ring, b.embed(n))};
  return substitute(f.in_ring(ring), images);
}

bool singular_points_exist_outside_origin(const MultiPoly& f, const Budget& budget) {
  require_plane(f);
  if (f.is_zero() || !is_squarefree(f)) throw DomainError("singular locus needs a nonzero squarefree curve");
  std::vector<MultiPoly> gens = nonzero({f, f.derivative(0), f.derivative(1)});
  IdealBasis global = buchberger(gens, MonomialOrder::degrevlex(2), budget);
  Dimension total = quotient_dimension(global);
  if (!total) throw ConsistencyError("singular locus of a squarefree curve is not finite");
  std::vector<CycloNumber> origin(2, CycloNumber::zero(f.ring().conductor()));
  std::size_t at_origin = 0;
  if (f.evaluate(origin).is_zero()) {
    Dimension local = local_dimension(gens, budget);
    if (!local) throw ConsistencyError("local singular scheme at the origin is not finite");
    at_origin = *local;
  }
  return *total > at_origin;
}

std::string to_string(CurveClass c) {
  switch (c) {
    case CurveClass::Line: return "line";
    case CurveClass::ConicOnePoint: return "conic-one-point-at-infinity";
    case CurveClass::ConicTwoPoints: return "conic-two-points-at-infinity";
    case CurveClass::DegenerateConic: return "degenerate-conic";
    case CurveClass::NotApplicable: return "not-applicable";
  }
  return "?";
}

CurveClass classify_low_degree_curve(const MultiPoly& f) {
  require_plane(f);
  const unsigned deg = f.is_zero() ? 0 : f.total_degree();
  if (deg > 2) throw DomainError("classification covers curves of degree at most 2");
  if (deg == 0) return CurveClass::NotApplicable;
  if (deg == 1) return CurveClass::Line;
  const Rational half(mpq_class(1, 2));
  CycloNumber a = coefficient(f, 2, 0), b = coefficient(f, 1, 1) * half, c = coefficient(f, 0, 2);
  CycloNumber d = coefficient(f, 1, 0) * half, e = coefficient(f, 0, 1) * half, g = coefficient(f, 0, 0);
  // symmetric matrix of the projective closure
  CycloNumber det = a * (c * g - e * e) - b * (b * g - e * d) + d * (b * e - c * d);
  if (det.is_zero()) return CurveClass::DegenerateConic;
  // points at infinity: roots of a X^2 + 2b XY + c Y^2
  CycloNumber disc = b * b - a * c;
  return disc.is_zero() ? CurveClass::ConicOnePoint : CurveClass::ConicTwoPoints;
}

std::optional<MilnorCertificate> distinguish_by_milnor(const PolyMap& f, const PolyMap& g, const Budget& budget) {
  auto examine = [&](const PolyMap& m, const char* label) {
    if (!is_proper(m, budget)) throw DomainError(std::string("map ") + label + " is not proper");
    MultiPoly crit = normalize_generator(critical_ideal(m));
    if (crit.is_constant()) throw DomainError(std::string("map ") + label + " has no critical curve");
    if (!is_squarefree(crit)) throw DomainError(std::string("critical curve of map ") + label + " is not reduced");
    std::vector<CycloNumber> origin(2, CycloNumber::zero(crit.ring().conductor()));
    if (!crit.evaluate(origin).is_zero()) {
      throw DomainError(std::string("critical curve of map ") + label + " does not pass through the origin");
    }
    MilnorResult mu = milnor_at_origin(crit, budget);
    if (!mu.value || *mu.value == 0) {
      throw DomainError(std::string("critical curve of map ") + label + " is not singular at the origin");
    }
    if (singular_points_exist_outside_origin(crit, budget)) {
      throw DomainError(std::string("critical curve of map ") + label + " has singular points away from the origin");
    }
    return std::make_pair(crit, *mu.value);
  };
  auto [cf, mf] = examine(f, "1");
  auto [cg, mg] = examine(g, "2");
  if (mf == mg) return std::nullopt;
  MilnorCertificate cert;
  cert.critical_f = format_poly(cf);
  cert.critical_g = format_poly(cg);
  cert.mu_f = mf;
  cert.mu_g = mg;
  cert.reason =
      "equivalent maps carry their critical curves onto each other by a biholomorphism, which preserves the Milnor "
      "number of the unique singular point; the numbers differ";
  return cert;
}

}  // namespace polymap
