#pragma once

// Text front end: polynomials, maps, and canonical rendering.
//
//   expr  := term (('+' | '-') term)*
//   term  := unary ('*' unary)*
//   unary := ('-' | '+') unary | power
//   power := atom ('^' INTEGER)?
//   atom  := INTEGER ('/' INTEGER)? | 'zeta' '(' INTEGER ')' | 'i' | NAME | '(' expr ')'

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "polymap/maps.hpp"
#include "polymap/multipoly.hpp"

namespace polymap {

struct ExprAst {
  enum class Kind { Number, Zeta, Variable, Add, Sub, Mul, Neg, Power };
  Kind kind;
  Rational number;     // Number
  unsigned index = 0;  // Zeta order, Power exponent
  std::string name;    // Variable
  std::size_t position = 0;
  std::vector<std::unique_ptr<ExprAst>> children;
};

std::unique_ptr<ExprAst> parse_expr(std::string_view text);

/// lcm of the orders of all zeta(n) constants in the tree (i counts as 4).
unsigned required_conductor(const ExprAst& ast);

/// conductor = 0 picks the smallest field holding all constants. A nonzero
/// conductor must be a multiple of every constant's order.
MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars, unsigned conductor = 0);
MultiPoly parse_poly(std::string_view text, const RingRef& ring);

/// "(f1, f2)" in variables x, y.
PolyMap parse_map(std::string_view text, unsigned conductor = 0);

std::string format_cyclo(const CycloNumber& c);
std::string format_poly(const MultiPoly& p);
std::string format_map(const PolyMap& f);

nlohmann::json cyclo_to_json(const CycloNumber& c);
CycloNumber cyclo_from_json(const nlohmann::json& j);
nlohmann::json poly_to_json(const MultiPoly& p);

}  // namespace polymap
