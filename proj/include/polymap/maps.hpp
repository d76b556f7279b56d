#pragma once

// Polynomial self-maps of the plane: properness, degree, critical and branch
// loci, composition with automorphisms, and the verification helpers.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polymap/groebner.hpp"
#include "polymap/multipoly.hpp"

namespace polymap {

/// (f1, f2) in source variables (x, y); images are named by target variables.
class PolyMap {
 public:
  PolyMap(MultiPoly f1, MultiPoly f2, std::array<std::string, 2> target = {"s", "t"});

  const MultiPoly& f1() const noexcept { return f1_; }
  const MultiPoly& f2() const noexcept { return f2_; }
  const MultiPoly& operator[](std::size_t i) const { return i == 0 ? f1_ : f2_; }
  const RingRef& ring() const noexcept { return f1_.ring_ptr(); }
  const std::array<std::string, 2>& target() const noexcept { return target_; }

  MultiPoly jacobian() const;
  bool is_dominant() const { return !jacobian().is_zero(); }
  /// Same map with coefficients embedded into Q(zeta_conductor).
  PolyMap with_conductor(unsigned conductor) const;

  friend bool operator==(const PolyMap& a, const PolyMap& b) { return a.f1_ == b.f1_ && a.f2_ == b.f2_; }

 private:
  MultiPoly f1_, f2_;
  std::array<std::string, 2> target_;
};

/// An invertible polynomial map with its inverse (checked on construction).
class PlaneAutomorphism {
 public:
  /// Throws DomainError unless forward∘inverse and inverse∘forward are the identity.
  PlaneAutomorphism(PolyMap forward, PolyMap inverse);

  static PlaneAutomorphism identity(const RingRef& ring);
  /// (x, y) -> (a x + b y + e, c x + d y + f), ad - bc != 0.
  static PlaneAutomorphism affine(const RingRef& ring, const CycloNumber& a, const CycloNumber& b,
                                  const CycloNumber& c, const CycloNumber& d, const CycloNumber& e,
                                  const CycloNumber& f);
  /// (x, y) -> (a x + p(y), b y + c), a, b != 0, p a polynomial in y only.
  static PlaneAutomorphism triangular(const CycloNumber& a, const MultiPoly& p, const CycloNumber& b,
                                      const CycloNumber& c);

  const PolyMap& forward() const noexcept { return fwd_; }
  const PolyMap& inverse() const noexcept { return inv_; }
  PlaneAutomorphism inverted() const { return PlaneAutomorphism(inv_, fwd_); }

 private:
  PolyMap fwd_, inv_;
};

/// f∘g as maps of the plane: (f1(g1, g2), f2(g1, g2)).
PolyMap compose_maps(const PolyMap& f, const PolyMap& g);
/// post ∘ f ∘ pre.
PolyMap compose(const PolyMap& f, const PlaneAutomorphism& pre, const PlaneAutomorphism& post);

enum class Family { Whitney, Fd, Fdn, SemiSeparate, Separate };

struct FamilyParams {
  int d = 0;
  int n = 0;
  /// For semi_separate: Q(x, y) monic in y. For separate: P(y).
  std::optional<MultiPoly> q;
};

PolyMap make_family(Family name, const FamilyParams& params);
Family parse_family(const std::string& name);

/// True iff x and y are integral over C[s, t] (pure-power leading monomials in
/// the {x, y} block of a block-order Gröbner basis of <s - f1, t - f2>).
bool finite_extension_test(const PolyMap& f, const Budget& budget = Budget::from_environment());
bool is_proper(const PolyMap& f, const Budget& budget = Budget::from_environment());

struct DegreeOptions {
  std::uint64_t seed = 20240601;
  /// Numerators drawn from [-height, height], denominators from [1, height].
  int height = 97;
  int retries = 5;
  Budget budget = Budget::from_environment();
};

/// Number of preimages of a random rational point, confirmed at a second one.
std::size_t topological_degree(const PolyMap& f, const DegreeOptions& opt = {});

MultiPoly critical_ideal(const PolyMap& f);

/// Generators of the branch ideal in the target ring (variables named like
/// the source, x and y), normalized by normalize_generator.
std::vector<MultiPoly> branch_ideal(const PolyMap& f, const Budget& budget = Budget::from_environment());

/// Scales p to a canonical associate: coordinates integral with gcd 1 and the
/// leading coefficient positive (rational) or with positive first nonzero
/// coordinate, reading coordinates from the top power down.
MultiPoly normalize_generator(const MultiPoly& p);
/// True when a and b differ by a nonzero constant factor.
bool associates(const MultiPoly& a, const MultiPoly& b);

enum class TierStatus { Pass, Fail, Skipped, NotRun };
std::string to_string(TierStatus s);

struct BranchReport {
  TierStatus divisibility = TierStatus::NotRun;  // (i)
  TierStatus squarefree = TierStatus::NotRun;    // (ii)
  TierStatus elimination = TierStatus::NotRun;   // (iii)
  std::optional<MultiPoly> computed;             // generator from tier (iii)
  std::string detail;

  bool passed() const {
    return divisibility != TierStatus::Fail && squarefree != TierStatus::Fail && elimination != TierStatus::Fail;
  }
};

/// Tiered check of a claimed branch curve (variables x, y stand for s, t).
BranchReport verify_branch(const PolyMap& f, const MultiPoly& claimed, bool run_elimination,
                           const Budget& budget = Budget::from_environment());

struct JacobianSplit {
  MultiPoly h1, h2;
};
/// J_f = H1^(d-2) * H2 with H1, H2 nonconstant, found from the squarefree
/// decomposition of J_f; nullopt if no such split exists.
std::optional<JacobianSplit> jacobian_power_factorization(const PolyMap& f, int d);

/// `relation` lives in a ring with variables (main, s, t). Checks that
/// relation(element, f1, f2) = 0. Throws DomainError unless the leading
/// coefficient in the main variable is a nonzero constant.
bool integral_relation_check(const PolyMap& f, const MultiPoly& element, const MultiPoly& relation);

}  // namespace polymap
