#pragma once

// Plane curve singularities: Milnor numbers, singular loci and the
// classification of lines and conics.

#include <cstddef>
#include <optional>
#include <string>

#include "polymap/groebner.hpp"
#include "polymap/maps.hpp"
#include "polymap/multipoly.hpp"

namespace polymap {

struct MilnorResult {
  Dimension value;                   // nullopt = infinite
  std::size_t standard_monomials = 0;  // staircase size (0 when infinite)
  bool isolated = false;             // == value.has_value()
};

/// dim of the local ring at (0,0) modulo <F_x, F_y>. Throws DomainError when
/// F(0,0) != 0.
MilnorResult milnor_at_origin(const MultiPoly& f, const Budget& budget = Budget::from_environment());

/// F(x + a, y + b): moves the point (a, b) to the origin.
MultiPoly translate_to_origin(const MultiPoly& f, const CycloNumber& a, const CycloNumber& b);

/// True iff <F, F_x, F_y> has a zero other than the origin. F must be
/// squarefree (DomainError otherwise).
bool singular_points_exist_outside_origin(const MultiPoly& f, const Budget& budget = Budget::from_environment());

enum class CurveClass { Line, ConicOnePoint, ConicTwoPoints, DegenerateConic, NotApplicable };
std::string to_string(CurveClass c);

/// Lines and conics only (DomainError above degree 2). Constants are
/// not-applicable.
CurveClass classify_low_degree_curve(const MultiPoly& f);

struct MilnorCertificate {
  std::string critical_f, critical_g;  // rendered critical generators
  std::size_t mu_f = 0, mu_g = 0;
  std::string reason;
};

/// Non-equivalence certificate when the critical curves of f and g have
/// different Milnor numbers at their unique singular point (the origin);
/// nullopt when the numbers agree (inconclusive). Each map must be proper,
/// its critical generator squarefree, vanishing and singular at the origin
/// and smooth elsewhere; violations throw DomainError naming the map.
std::optional<MilnorCertificate> distinguish_by_milnor(const PolyMap& f, const PolyMap& g,
                                                       const Budget& budget = Budget::from_environment());

}  // namespace polymap
