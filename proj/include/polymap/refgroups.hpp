#pragma once

// Rank-2 finite complex reflection groups: construction, enumeration,
// fingerprints, invariants and the Galois-covering catalog.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "polymap/maps.hpp"
#include "polymap/multipoly.hpp"

namespace polymap {

/// Row-major 2x2 matrix over one cyclotomic field.
struct Matrix2 {
  std::array<CycloNumber, 4> a;

  static Matrix2 identity(unsigned conductor);
  static Matrix2 scalar(const CycloNumber& c);
  static Matrix2 of(const CycloNumber& m00, const CycloNumber& m01, const CycloNumber& m10, const CycloNumber& m11);

  unsigned conductor() const { return a[0].conductor(); }
  CycloNumber det() const;
  Matrix2 embed(unsigned conductor) const;
  Matrix2 pow(unsigned k) const;
  Matrix2 operator*(const Matrix2& o) const;
  Matrix2 operator*(const CycloNumber& c) const;
  bool is_identity() const;
  std::size_t hash() const noexcept;
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

struct Matrix2Hash {
  std::size_t operator()(const Matrix2& m) const noexcept { return m.hash(); }
};

struct GroupSpec {
  enum class Kind { Cyclic, Product, Imprimitive, Exceptional };
  Kind kind = Kind::Cyclic;
  int m = 0;   // cyclic order, product first factor, imprimitive m
  int n = 0;   // product second factor
  int p = 0;   // imprimitive p
  int no = 0;  // exceptional Shephard–Todd number

  static GroupSpec cyclic(int m) { return {Kind::Cyclic, m, 0, 0, 0}; }
  static GroupSpec product(int m, int n) { return {Kind::Product, m, n, 0, 0}; }
  static GroupSpec imprimitive(int m, int p) { return {Kind::Imprimitive, m, 0, p, 0}; }
  static GroupSpec exceptional(int no) { return {Kind::Exceptional, 0, 0, 0, no}; }

  /// "cyclic(5)", "product(2,3)", "G(4,2,2)", "G4" ...
  std::string name() const;
  /// Accepts the forms produced by name(), plus "imprimitive(m,p)" and "exceptional(n)".
  static GroupSpec parse(const std::string& text);
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct GroupRecord {
  GroupSpec spec;
  unsigned conductor = 1;
  std::vector<Matrix2> generators;
  std::size_t expected_order = 0;
  std::array<unsigned, 2> degrees{};

  // exceptional groups only: generators are S, T, Z (in that order)
  std::optional<CycloNumber> lambda, mu;
  int k1 = 0, k2 = 0, k3 = 0, k = 0;
  /// The p of (ST)^p = Z^k3: 3, 4, 5 for the A4, S4, A5 families.
  int st_exponent = 0;
  std::string label;  // small-group identifier, documentation only
};

GroupRecord build_group(const GroupSpec& spec);

struct GroupElements {
  std::vector<Matrix2> elements;  // elements[0] is the identity
  std::unordered_map<Matrix2, std::size_t, Matrix2Hash> index;  // element -> position
  bool contains(const Matrix2& m) const { return index.count(m) != 0; }
  std::size_t size() const { return elements.size(); }
};

/// Breadth-first closure under the generators. Throws ConsistencyError when
/// the closure exceeds twice the expected order.
GroupElements enumerate(const GroupRecord& g);

struct Fingerprint {
  std::size_t order = 0;
  std::size_t center_order = 0;
  std::map<std::size_t, std::size_t> order_histogram;  // element order -> count
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// Multiplicative order of every element. The serial reference powers each
/// element on its own; the OpenMP kernel walks cyclic chains and labels every
/// power g^j with ord(g)/gcd(ord(g), j).
std::vector<std::size_t> element_orders_serial(const GroupElements& els);
std::vector<std::size_t> element_orders_parallel(const GroupElements& els);

Fingerprint fingerprint(const GroupRecord& g, const GroupElements& els);

bool verify_presentation(const GroupRecord& g);

/// p(M v) for the column vector v = (x, y).
MultiPoly act(const Matrix2& m, const MultiPoly& p);

bool is_invariant(const std::vector<Matrix2>& generators, const MultiPoly& p);
bool is_invariant(const GroupRecord& g, const MultiPoly& p);

/// (1/|G|) sum_g p(g v). Serial reference and OpenMP kernel.
MultiPoly reynolds_serial(const GroupElements& els, const MultiPoly& p);
MultiPoly reynolds_parallel(const GroupElements& els, const MultiPoly& p);
MultiPoly reynolds(const GroupElements& els, const MultiPoly& p);

/// The seven printed binary forms, by name ("a4", "b6", ..., "g30").
MultiPoly klein_invariant(const std::string& name);

struct ConstructionCheck {
  std::string identity;  // e.g. "Hessian(b6) ~ c8"
  bool holds = false;
};
/// The Hessian/Jacobian identities linking the printed forms, each up to a
/// nonzero scalar.
std::vector<ConstructionCheck> invariant_constructions();

/// Basic set (phi1, phi2), verified invariant, algebraically independent and
/// with deg(phi1) * deg(phi2) = |G|. Throws ConsistencyError otherwise.
std::pair<MultiPoly, MultiPoly> basic_invariants(const GroupRecord& g);
PolyMap quotient_map(const GroupRecord& g);

/// Automorphism Phi with phi = Phi ∘ psi for two basic sets of one group.
PlaneAutomorphism basic_set_transition(const std::pair<MultiPoly, MultiPoly>& phi,
                                       const std::pair<MultiPoly, MultiPoly>& psi);

/// Every catalog group of order d (d >= 2).
std::vector<GroupSpec> classes_of_degree(int d);

/// All 19 exceptional numbers with their table orders.
const std::map<int, std::size_t>& exceptional_orders();

struct Table4Row {
  std::string id;  // "f_3", "f_2,3", "f_4,2,2", "f~4", ...
  GroupSpec group;
  PolyMap map;
  MultiPoly claimed;  // printed branch curve, variables (x, y) = (s, t)
  bool elimination_mandatory = false;
};

/// Family rows (f_m for m <= 6, f_m,n for m, n <= 4, f_m,p,2 for m <= 6)
/// followed by the 19 exceptional rows.
std::vector<Table4Row> table4_catalog();

}  // namespace polymap
