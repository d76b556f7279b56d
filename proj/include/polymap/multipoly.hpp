#pragma once

// Sparse distributed multivariate polynomials over Q(zeta_N).

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polymap/cyclo.hpp"
#include "polymap/monomial.hpp"

namespace polymap {

class Ring;
using RingRef = std::shared_ptr<const Ring>;

/// Ordered variable names plus the conductor of the coefficient field.
class Ring {
 public:
  static RingRef make(std::vector<std::string> vars, unsigned conductor = 1);

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  unsigned conductor() const noexcept { return conductor_; }
  /// Terms of every polynomial in this ring are kept sorted by this order.
  const MonomialOrder& canonical_order() const noexcept { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws DomainError for an unknown variable.
  std::size_t require_index(std::string_view name) const;

  RingRef with_conductor(unsigned conductor) const { return make(vars_, conductor); }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.conductor_ == b.conductor_ && a.vars_ == b.vars_;
  }

 private:
  Ring(std::vector<std::string> vars, unsigned conductor);

  std::vector<std::string> vars_;
  unsigned conductor_;
  MonomialOrder order_;
};

bool same_ring(const RingRef& a, const RingRef& b);

class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    CycloNumber coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  /// The zero polynomial of `ring`.
  explicit MultiPoly(RingRef ring);

  static MultiPoly constant(RingRef ring, const CycloNumber& c);
  static MultiPoly constant(RingRef ring, const Rational& q);
  static MultiPoly variable(RingRef ring, std::size_t index);
  static MultiPoly variable(RingRef ring, std::string_view name);
  static MultiPoly monomial(RingRef ring, const Monomial& m, const CycloNumber& c);
  /// Sorts, merges equal monomials, drops zeros; embeds coefficients into the
  /// ring's conductor when needed.
  static MultiPoly from_terms(RingRef ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return *ring_; }
  const RingRef& ring_ptr() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// The constant term (zero if absent).
  CycloNumber constant_term() const;

  unsigned total_degree() const noexcept;
  unsigned degree_in(std::size_t var) const noexcept;
  bool involves(std::size_t var) const noexcept { return degree_in(var) > 0; }
  bool is_homogeneous() const noexcept;
  /// Leading term under the ring's canonical order (degrevlex).
  const Term& leading_term() const;
  /// Leading term under an arbitrary order.
  const Term& leading_term(const MonomialOrder& order) const;

  /// Coefficients as a polynomial in `var`: result[k] multiplies var^k.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;
  /// Leading coefficient w.r.t. `var` (a polynomial free of var).
  MultiPoly leading_coefficient_in(std::size_t var) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const CycloNumber& c) const;
  MultiPoly operator*(const Rational& q) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly pow(unsigned k) const;
  /// Multiplies by a monomial times a coefficient.
  MultiPoly shifted(const Monomial& m, const CycloNumber& c) const;
  /// Divides every coefficient by the leading (canonical order) coefficient.
  MultiPoly monic() const;

  /// Partial derivative with respect to variable `var`.
  MultiPoly derivative(std::size_t var) const;
  MultiPoly derivative(std::string_view name) const { return derivative(ring_->require_index(name)); }

  CycloNumber evaluate(std::span<const CycloNumber> point) const;

  /// Re-expresses the polynomial in `target`, mapping variables by name and
  /// embedding coefficients. Throws RingMismatch when a used variable is
  /// missing or the conductor does not divide the target's.
  MultiPoly in_ring(const RingRef& target) const;
  /// Same, but with an explicit variable index map (source index -> target index).
  MultiPoly in_ring(const RingRef& target, std::span<const std::size_t> var_map) const;

  std::size_t max_coeff_bits() const noexcept;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  MultiPoly(RingRef ring, std::vector<Term> sorted_terms) : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}
  void require_same_ring(const MultiPoly& o) const;

  RingRef ring_;
  std::vector<Term> terms_;

  friend MultiPoly multiply_terms_serial(const MultiPoly&, const MultiPoly&);
  friend MultiPoly multiply_terms_parallel(const MultiPoly&, const MultiPoly&);
  friend class MultiPolyBuilder;
};

enum class ArithOp { Add, Sub, Mul };

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, ArithOp op);

/// Composition: each variable of p is replaced by its image. All images must
/// share one ring, which becomes the result ring. Throws DomainError when a
/// variable of p has no image.
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& assignment);
/// Positional variant: images[i] replaces variable i of p.
MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images);

MultiPoly partial_derivative(const MultiPoly& p, std::string_view var);
/// d f1/dx * d f2/dy - d f1/dy * d f2/dx using the ring's first two variables.
MultiPoly jacobian_det(const MultiPoly& f1, const MultiPoly& f2);
/// Determinant of the 2x2 matrix of second partials in the first two variables.
MultiPoly hessian_det(const MultiPoly& p);

/// Incremental construction of a canonical polynomial from unsorted terms.
class MultiPolyBuilder {
 public:
  explicit MultiPolyBuilder(RingRef ring) : ring_(std::move(ring)) {}
  void add(const Monomial& m, const CycloNumber& c);
  MultiPoly build() &&;

 private:
  RingRef ring_;
  std::vector<MultiPoly::Term> terms_;
};

}  // namespace polymap
