#pragma once

// Gröbner bases (Buchberger, global orders) and standard bases (Mora, local
// order), plus the ideal queries built on them.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polymap/multipoly.hpp"

namespace polymap {

/// Effort limits for one basis computation. Exceeding any of them throws
/// ResourceExceeded. The work counter is deterministic (it counts term
/// operations), so a budget fails identically on every machine.
struct Budget {
  std::size_t max_pairs = 200000;
  std::size_t max_coeff_bits = 1u << 20;
  std::size_t max_work = std::size_t{4} << 30;

  static Budget unlimited();
  /// Scales the default work limit by `factor` (the CLI's --budget).
  static Budget scaled(double factor);
  /// Default budget, overridden by the POLYMAP_BUDGET environment variable
  /// (a scale factor) when it is set.
  static Budget from_environment();
};

/// Counters of a finished computation.
struct BasisStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t work = 0;
};

/// Not-a-number style dimension: nullopt means infinite.
using Dimension = std::optional<std::size_t>;

std::string format_dimension(const Dimension& d);

class IdealBasis {
 public:
  IdealBasis(std::vector<MultiPoly> generators, MonomialOrder order);

  const std::vector<MultiPoly>& generators() const noexcept { return gens_; }
  const MonomialOrder& order() const noexcept { return order_; }
  bool is_local() const noexcept { return !order_.is_global(); }
  bool computed() const noexcept { return basis_.has_value(); }
  /// Throws DomainError when the basis has not been computed.
  const std::vector<MultiPoly>& basis() const;
  const BasisStats& stats() const noexcept { return stats_; }
  /// Leading monomials of the basis under order().
  std::vector<Monomial> leading_monomials() const;

  void set_basis(std::vector<MultiPoly> basis, BasisStats stats);

 private:
  std::vector<MultiPoly> gens_;
  MonomialOrder order_;
  std::optional<std::vector<MultiPoly>> basis_;
  BasisStats stats_;
};

/// Reduced Gröbner basis (monic, interreduced, sorted by ascending leading
/// monomial). Requires a global order.
IdealBasis buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& order,
                      const Budget& budget = Budget::from_environment());

/// Fully reduced remainder of p. Requires a computed global basis.
MultiPoly normal_form(const MultiPoly& p, const IdealBasis& b);

/// Generators (a reduced Gröbner basis) of the ideal intersected with the
/// subring of the variables not in `eliminate`. Results stay in the input ring.
/// `weights` (optional, one per ring variable) refine the block order.
std::vector<MultiPoly> elimination_ideal(const std::vector<MultiPoly>& gens, const std::vector<std::string>& eliminate,
                                         const std::vector<unsigned>& weights = {},
                                         const Budget& budget = Budget::from_environment());

/// Number of standard monomials; nullopt if the ideal is not zero-dimensional.
Dimension quotient_dimension(const IdealBasis& b);

/// Number of monomials in nvars variables outside the monomial ideal
/// generated by `lead`; nullopt if infinite.
Dimension staircase_count(const std::vector<Monomial>& lead, std::size_t nvars);

/// Standard basis under the local anti-graded order via Mora's normal form.
IdealBasis mora_standard_basis(const std::vector<MultiPoly>& gens, const Budget& budget = Budget::from_environment());

/// Mora's weak normal form of p with respect to `reducers` (local order).
MultiPoly mora_normal_form(const MultiPoly& p, const std::vector<MultiPoly>& reducers, const Budget& budget,
                           std::size_t* work = nullptr);

Dimension local_quotient_dimension(const IdealBasis& b);

}  // namespace polymap
