#include "polymap/parser.hpp"

#include <cctype>
#include <numeric>

#include "polymap/errors.hpp"

namespace polymap {

namespace {

using Node = std::unique_ptr<ExprAst>;

Node make_node(ExprAst::Kind k, std::size_t pos) {
  auto n = std::make_unique<ExprAst>();
  n->kind = k;
  n->position = pos;
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Node expr() {
    Node lhs = term();
    while (true) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') return lhs;
      std::size_t at = pos_++;
      Node n = make_node(c == '+' ? ExprAst::Kind::Add : ExprAst::Kind::Sub, at);
      n->children.push_back(std::move(lhs));
      n->children.push_back(term());
      lhs = std::move(n);
    }
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect_end() {
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string msg = what;
    if (pos_ < s_.size()) {
      msg += " near '";
      msg += s_[pos_];
      msg += "'";
    } else {
      msg += " at end of input";
    }
    throw ParseError(msg, pos_);
  }

 private:
  Node term() {
    Node lhs = unary();
    while (accept('*')) {
      Node n = make_node(ExprAst::Kind::Mul, pos_ - 1);
      n->children.push_back(std::move(lhs));
      n->children.push_back(unary());
      lhs = std::move(n);
    }
    return lhs;
  }

  Node unary() {
    skip_ws();
    if (peek() == '-') {
      Node n = make_node(ExprAst::Kind::Neg, pos_++);
      n->children.push_back(unary());
      return n;
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Node power() {
    Node base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t at = pos_;
      mpz_class e = integer();
      if (e > 65535) {
        pos_ = at;
        fail("exponent too large");
      }
      Node n = make_node(ExprAst::Kind::Power, at);
      n->index = static_cast<unsigned>(e.get_ui());
      n->children.push_back(std::move(base));
      skip_ws();
      if (peek() == '^') fail("chained exponents need parentheses");
      return n;
    }
    return base;
  }

  Node atom() {
    skip_ws();
    const std::size_t at = pos_;
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      Node n = make_node(ExprAst::Kind::Number, at);
      if (accept('/')) {
        skip_ws();
        std::size_t dpos = pos_;
        mpz_class den = integer();
        if (den == 0) {
          pos_ = dpos;
          fail("zero denominator");
        }
        n->number = Rational(mpq_class(num, den));
      } else {
        n->number = Rational(num);
      }
      return n;
    }
    if (c == '(') {
      ++pos_;
      Node inner = expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        name += s_[pos_++];
      }
      if (name == "zeta") {
        expect('(');
        skip_ws();
        std::size_t npos = pos_;
        mpz_class order = integer();
        if (order < 1 || order > 100000) {
          pos_ = npos;
          fail("zeta order must be between 1 and 100000");
        }
        expect(')');
        Node n = make_node(ExprAst::Kind::Zeta, at);
        n->index = static_cast<unsigned>(order.get_ui());
        return n;
      }
      if (name == "i") {
        Node n = make_node(ExprAst::Kind::Zeta, at);
        n->index = 4;
        return n;
      }
      Node n = make_node(ExprAst::Kind::Variable, at);
      n->name = std::move(name);
      return n;
    }
    fail("expected a number, variable or '('");
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

MultiPoly evaluate(const ExprAst& n, const RingRef& ring) {
  switch (n.kind) {
    case ExprAst::Kind::Number:
      return MultiPoly::constant(ring, n.number);
    case ExprAst::Kind::Zeta:
      if (ring->conductor() % n.index != 0) {
        throw ConductorMismatch("zeta(" + std::to_string(n.index) + ") does not lie in Q(zeta_" +
                                std::to_string(ring->conductor()) + ")");
      }
      return MultiPoly::constant(ring, CycloNumber::zeta(n.index).embed(ring->conductor()));
    case ExprAst::Kind::Variable: {
      auto idx = ring->index_of(n.name);
      if (!idx) throw ParseError("unknown variable '" + n.name + "'", n.position);
      return MultiPoly::variable(ring, *idx);
    }
    case ExprAst::Kind::Add:
      return evaluate(*n.children[0], ring) + evaluate(*n.children[1], ring);
    case ExprAst::Kind::Sub:
      return evaluate(*n.children[0], ring) - evaluate(*n.children[1], ring);
    case ExprAst::Kind::Mul:
      return evaluate(*n.children[0], ring) * evaluate(*n.children[1], ring);
    case ExprAst::Kind::Neg:
      return -evaluate(*n.children[0], ring);
    case ExprAst::Kind::Power:
      return evaluate(*n.children[0], ring).pow(n.index);
  }
  throw ConsistencyError("unhandled expression node");
}

unsigned pick_conductor(unsigned needed, unsigned requested) {
  if (requested == 0) return needed;
  if (requested % needed != 0) {
    throw ConductorMismatch("conductor " + std::to_string(requested) + " is not a multiple of " +
                            std::to_string(needed) + " required by the constants");
  }
  return requested;
}

std::string monomial_text(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (m.e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.vars()[i];
    if (m.e[i] > 1) out += '^' + std::to_string(m.e[i]);
  }
  return out;
}

}  // namespace

std::unique_ptr<ExprAst> parse_expr(std::string_view text) {
  Parser p(text);
  Node n = p.expr();
  p.expect_end();
  return n;
}

unsigned required_conductor(const ExprAst& ast) {
  unsigned n = ast.kind == ExprAst::Kind::Zeta ? ast.index : 1;
  for (const auto& c : ast.children) n = std::lcm(n, required_conductor(*c));
  return n;
}

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars, unsigned conductor) {
  Node ast = parse_expr(text);
  RingRef ring = Ring::make(vars, pick_conductor(required_conductor(*ast), conductor));
  return evaluate(*ast, ring);
}

MultiPoly parse_poly(std::string_view text, const RingRef& ring) {
  Node ast = parse_expr(text);
  pick_conductor(required_conductor(*ast), ring->conductor());
  return evaluate(*ast, ring);
}

PolyMap parse_map(std::string_view text, unsigned conductor) {
  Parser p(text);
  p.expect('(');
  std::vector<Node> parts;
  parts.push_back(p.expr());
  while (p.accept(',')) parts.push_back(p.expr());
  p.expect(')');
  p.expect_end();
  if (parts.size() != 2) {
    throw ParseError("a plane map needs exactly 2 components, got " + std::to_string(parts.size()), 0);
  }
  unsigned needed = std::lcm(required_conductor(*parts[0]), required_conductor(*parts[1]));
  RingRef ring = Ring::make({"x", "y"}, pick_conductor(needed, conductor));
  return PolyMap(evaluate(*parts[0], ring), evaluate(*parts[1], ring));
}

std::string format_cyclo(const CycloNumber& c) {
  if (c.is_rational()) return c.rational_value().to_string();
  const auto& co = c.coords();
  const std::string base = "zeta(" + std::to_string(c.conductor()) + ")";
  std::string out;
  for (std::size_t k = co.size(); k-- > 0;) {
    const Rational& q = co[k];
    if (q.is_zero()) continue;
    std::string piece;
    if (k == 0) {
      piece = q.to_string();
    } else {
      std::string pw = k > 1 ? base + "^" + std::to_string(k) : base;
      if (q.is_one()) {
        piece = pw;
      } else if (q == Rational(-1)) {
        piece = "-" + pw;
      } else {
        piece = q.to_string() + "*" + pw;
      }
    }
    if (!out.empty() && piece[0] != '-') out += '+';
    out += piece;
  }
  return out;
}

std::string format_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string mono = monomial_text(t.mono, p.ring());
    bool negative = false;
    std::string coeff;
    if (t.coeff.is_rational()) {
      Rational q = t.coeff.rational_value();
      negative = q.sign() < 0;
      Rational a = q.abs();
      if (!a.is_one() || mono.empty()) coeff = a.to_string();
    } else {
      coeff = "(" + format_cyclo(t.coeff) + ")";
    }
    std::string body = coeff;
    if (!coeff.empty() && !mono.empty()) body += '*';
    body += mono;
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::string format_map(const PolyMap& f) { return "(" + format_poly(f.f1()) + ", " + format_poly(f.f2()) + ")"; }

nlohmann::json cyclo_to_json(const CycloNumber& c) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& q : c.coords()) coeffs.push_back(q.to_string());
  return {{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

CycloNumber cyclo_from_json(const nlohmann::json& j) {
  unsigned n = j.at("conductor").get<unsigned>();
  std::vector<Rational> coords;
  for (const auto& s : j.at("coeffs")) coords.push_back(Rational::parse(s.get<std::string>()));
  return CycloNumber::from_coords(n, std::move(coords));
}

nlohmann::json poly_to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    std::vector<unsigned> exps(t.mono.e.begin(), t.mono.e.begin() + p.ring().nvars());
    nlohmann::json coeff = t.coeff.is_rational() ? nlohmann::json(t.coeff.rational_value().to_string())
                                                 : cyclo_to_json(t.coeff);
    terms.push_back({{"exps", exps}, {"coeff", coeff}});
  }
  return {{"poly", format_poly(p)}, {"vars", p.ring().vars()}, {"conductor", p.ring().conductor()}, {"terms", terms}};
}

}  // namespace polymap
