#pragma once

// Division, gcd, squarefree parts and resultants for MultiPoly.

#include <optional>
#include <utility>
#include <vector>

#include "polymap/multipoly.hpp"

namespace polymap {

/// a / b when b divides a exactly, otherwise nullopt. Throws DivisionByZero
/// for b = 0 and RingMismatch for different rings.
std::optional<MultiPoly> exact_div(const MultiPoly& a, const MultiPoly& b);

/// Remainder of a modulo the single divisor b (canonical order).
MultiPoly remainder_by(const MultiPoly& a, const MultiPoly& b);

/// prem_v(a, b) = lc_v(b)^(deg_v a - deg_v b + 1) * a mod b, as a polynomial.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t var);

/// Greatest common divisor, normalized to leading coefficient 1. gcd(0,0)=0.
MultiPoly gcd_poly(const MultiPoly& a, const MultiPoly& b);

/// Content of p as a polynomial in `var` (gcd of its coefficients).
MultiPoly content_in(const MultiPoly& p, std::size_t var);

/// Product of the distinct irreducible factors of p, leading coefficient 1.
MultiPoly squarefree_part(const MultiPoly& p);

/// Pairs (factor, multiplicity) whose product is p up to a nonzero constant.
/// Factors are pairwise coprime within one multiplicity class but not
/// necessarily irreducible.
std::vector<std::pair<MultiPoly, unsigned>> squarefree_decomposition(const MultiPoly& p);

/// Sylvester resultant in `var`, a-block rows first, computed with
/// fraction-free elimination. Throws DomainError for zero input.
MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, std::size_t var);
MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, std::string_view var);

/// Determinant of a square matrix of polynomials via Bareiss elimination.
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m);

}  // namespace polymap
