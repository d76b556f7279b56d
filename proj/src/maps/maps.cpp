#include "polymap/maps.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <random>
#include <unordered_map>

#include "polymap/errors.hpp"
#include "polymap/polyalg.hpp"

namespace polymap {

namespace {

RingRef plane_ring(unsigned conductor) { return Ring::make({"x", "y"}, conductor); }

MultiPoly lift(const MultiPoly& p, unsigned conductor) {
  if (p.ring().conductor() == conductor) return p;
  return p.in_ring(p.ring().with_conductor(conductor));
}

}  // namespace

PolyMap::PolyMap(MultiPoly f1, MultiPoly f2, std::array<std::string, 2> target)
    : f1_(std::move(f1)), f2_(std::move(f2)), target_(std::move(target)) {
  if (f1_.ring().nvars() != 2) throw DomainError("a plane map needs a ring with two variables");
  if (!same_ring(f1_.ring_ptr(), f2_.ring_ptr())) {
    unsigned n = std::lcm(f1_.ring().conductor(), f2_.ring().conductor());
    RingRef r = f1_.ring().with_conductor(n);
    f1_ = f1_.in_ring(r);
    f2_ = f2_.in_ring(r);
  }
}

MultiPoly PolyMap::jacobian() const { return jacobian_det(f1_, f2_); }

PolyMap PolyMap::with_conductor(unsigned conductor) const {
  return PolyMap(lift(f1_, conductor), lift(f2_, conductor), target_);
}

PolyMap compose_maps(const PolyMap& f, const PolyMap& g) {
  unsigned n = std::lcm(f.ring()->conductor(), g.ring()->conductor());
  PolyMap gg = g.with_conductor(n);
  std::vector<MultiPoly> images{gg.f1(), gg.f2()};
  return PolyMap(substitute(lift(f.f1(), n), images), substitute(lift(f.f2(), n), images), f.target());
}

PolyMap compose(const PolyMap& f, const PlaneAutomorphism& pre, const PlaneAutomorphism& post) {
  return compose_maps(post.forward(), compose_maps(f, pre.forward()));
}

PlaneAutomorphism::PlaneAutomorphism(PolyMap forward, PolyMap inverse) : fwd_(std::move(forward)), inv_(std::move(inverse)) {
  unsigned n = std::lcm(fwd_.ring()->conductor(), inv_.ring()->conductor());
  fwd_ = fwd_.with_conductor(n);
  inv_ = inv_.with_conductor(n);
  RingRef r = fwd_.ring();
  PolyMap id(MultiPoly::variable(r, 0), MultiPoly::variable(r, 1));
  if (!(compose_maps(fwd_, inv_) == id) || !(compose_maps(inv_, fwd_) == id)) {
    throw DomainError("automorphism and stated inverse do not compose to the identity");
  }
}

PlaneAutomorphism PlaneAutomorphism::identity(const RingRef& ring) {
  PolyMap id(MultiPoly::variable(ring, 0), MultiPoly::variable(ring, 1));
  return PlaneAutomorphism(id, id);
}

PlaneAutomorphism PlaneAutomorphism::affine(const RingRef& ring, const CycloNumber& a, const CycloNumber& b,
                                            const CycloNumber& c, const CycloNumber& d, const CycloNumber& e,
                                            const CycloNumber& f) {
  unsigned n = ring->conductor();
  for (const auto* v : {&a, &b, &c, &d, &e, &f}) n = std::lcm(n, v->conductor());
  RingRef r = ring->with_conductor(n);
  auto k = [n](const CycloNumber& v) { return v.embed(n); };
  CycloNumber det = k(a) * k(d) - k(b) * k(c);
  if (det.is_zero()) throw DomainError("affine map with zero determinant");
  MultiPoly x = MultiPoly::variable(r, 0), y = MultiPoly::variable(r, 1);
  auto cst = [&](const CycloNumber& v) { return MultiPoly::constant(r, k(v)); };
  PolyMap fwd(x * k(a) + y * k(b) + cst(e), x * k(c) + y * k(d) + cst(f));
  CycloNumber di = det.inverse();
  // inverse: M^-1 ((X, Y) - (e, f))
  MultiPoly X = x - cst(e), Y = y - cst(f);
  PolyMap inv((X * k(d) - Y * k(b)) * di, (Y * k(a) - X * k(c)) * di);
  return PlaneAutomorphism(fwd, inv);
}

PlaneAutomorphism PlaneAutomorphism::triangular(const CycloNumber& a, const MultiPoly& p, const CycloNumber& b,
                                                const CycloNumber& c) {
  if (a.is_zero() || b.is_zero()) throw DomainError("triangular automorphism needs nonzero scalings");
  if (p.ring().nvars() != 2 || p.involves(0)) throw DomainError("triangular shift must be a polynomial in y");
  unsigned n = std::lcm(std::lcm(p.ring().conductor(), a.conductor()), std::lcm(b.conductor(), c.conductor()));
  RingRef r = p.ring().with_conductor(n);
  MultiPoly pp = p.in_ring(r);
  MultiPoly x = MultiPoly::variable(r, 0), y = MultiPoly::variable(r, 1);
  MultiPoly cc = MultiPoly::constant(r, c.embed(n));
  PolyMap fwd(x * a.embed(n) + pp, y * b.embed(n) + cc);
  MultiPoly yinv = (y - cc) * b.embed(n).inverse();
  std::vector<MultiPoly> img{x, yinv};
  PolyMap inv((x - substitute(pp, img)) * a.embed(n).inverse(), yinv);
  return PlaneAutomorphism(fwd, inv);
}

Family parse_family(const std::string& name) {
  if (name == "whitney") return Family::Whitney;
  if (name == "fd") return Family::Fd;
  if (name == "fdn") return Family::Fdn;
  if (name == "semi_separate") return Family::SemiSeparate;
  if (name == "separate") return Family::Separate;
  throw DomainError("unknown family '" + name + "'");
}

PolyMap make_family(Family name, const FamilyParams& prm) {
  RingRef r = plane_ring(1);
  MultiPoly x = MultiPoly::variable(r, 0), y = MultiPoly::variable(r, 1);
  switch (name) {
    case Family::Whitney:
      return PolyMap(x, y.pow(3) + x * y);
    case Family::Fd:
      if (prm.d < 2) throw DomainError("fd requires d >= 2");
      return PolyMap(x + y + x * y, x.pow(prm.d - 1) * y);
    case Family::Fdn:
      if (prm.d < 3 || prm.n < 2) throw DomainError("fdn requires d >= 3 and n >= 2");
      return PolyMap(x, y.pow(prm.d) - x.pow(prm.n) * y * Rational(prm.d));
    case Family::SemiSeparate: {
      if (!prm.q) throw DomainError("semi_separate requires Q(x, y)");
      const MultiPoly& q = *prm.q;
      if (q.ring().nvars() != 2 || !q.involves(1)) throw DomainError("Q must involve y");
      MultiPoly lc = q.leading_coefficient_in(1);
      if (!lc.is_constant() || !lc.constant_term().is_one()) throw DomainError("Q must be monic in y");
      return PolyMap(MultiPoly::variable(q.ring_ptr(), 0), q);
    }
    case Family::Separate: {
      if (!prm.q) throw DomainError("separate requires P(y)");
      const MultiPoly& p = *prm.q;
      if (p.ring().nvars() != 2 || p.involves(0) || !p.involves(1)) throw DomainError("P must be a nonconstant polynomial in y");
      return PolyMap(MultiPoly::variable(p.ring_ptr(), 0), p);
    }
  }
  throw DomainError("unknown family");
}

namespace {

// Ring (x, y, s, t) holding the graph of f.
struct GraphRing {
  RingRef ring;
  std::vector<std::size_t> source_map{0, 1};
  std::vector<std::size_t> target_map;  // (s, t) positions
  std::vector<unsigned> weights;
};

GraphRing graph_ring(const PolyMap& f) {
  GraphRing g;
  g.ring = Ring::make({"x", "y", f.target()[0], f.target()[1]}, f.ring()->conductor());
  g.target_map = {2, 3};
  g.weights = {1, 1, std::max(1u, f.f1().total_degree()), std::max(1u, f.f2().total_degree())};
  return g;
}

std::vector<MultiPoly> graph_generators(const PolyMap& f, const GraphRing& g) {
  MultiPoly s = MultiPoly::variable(g.ring, 2), t = MultiPoly::variable(g.ring, 3);
  return {s - f.f1().in_ring(g.ring, g.source_map), t - f.f2().in_ring(g.ring, g.source_map)};
}

}  // namespace

bool finite_extension_test(const PolyMap& f, const Budget& budget) {
  if (!f.is_dominant()) throw DomainError("map has zero Jacobian");
  GraphRing g = graph_ring(f);
  IdealBasis gb = buchberger(graph_generators(f, g), MonomialOrder::block(4, 2, g.weights), budget);
  bool px = false, py = false;
  for (const auto& m : gb.leading_monomials()) {
    if (m.e[2] != 0 || m.e[3] != 0) continue;
    if (m.e[1] == 0 && m.e[0] > 0) px = true;
    if (m.e[0] == 0 && m.e[1] > 0) py = true;
  }
  return px && py;
}

bool is_proper(const PolyMap& f, const Budget& budget) { return finite_extension_test(f, budget); }

std::size_t topological_degree(const PolyMap& f, const DegreeOptions& opt) {
  if (!is_proper(f, opt.budget)) throw DomainError("topological degree needs a proper map");
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long> num(-opt.height, opt.height), den(1, opt.height);
  const RingRef& r = f.ring();
  auto sample = [&]() -> Dimension {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    std::vector<MultiPoly> gens{f.f1() - MultiPoly::constant(r, a), f.f2() - MultiPoly::constant(r, b)};
    return quotient_dimension(buchberger(gens, MonomialOrder::degrevlex(2), opt.budget));
  };
  for (int attempt = 0; attempt <= opt.retries; ++attempt) {
    Dimension d1 = sample(), d2 = sample();
    if (d1 && d2 && *d1 == *d2) return *d1;
  }
  throw ConsistencyError("topological degree: sample points keep disagreeing");
}

MultiPoly critical_ideal(const PolyMap& f) { return f.jacobian(); }

MultiPoly normalize_generator(const MultiPoly& p) {
  if (p.is_zero()) return p;
  MultiPoly m = p.monic();
  mpz_class l = 1;
  for (const auto& t : m.terms()) {
    for (const auto& q : t.coeff.coords()) {
      if (!q.is_zero()) l = lcm(l, q.denominator());
    }
  }
  m = m * Rational(l);
  mpz_class g = 0;
  for (const auto& t : m.terms()) {
    for (const auto& q : t.coeff.coords()) {
      if (!q.is_zero()) g = gcd(g, q.numerator());
    }
  }
  if (g > 1) m = m * Rational(mpq_class(1, g));
  return m;
}

bool associates(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.size() != b.size()) return false;
  unsigned n = std::lcm(a.ring().conductor(), b.ring().conductor());
  MultiPoly aa = lift(a, n), bb = lift(b, n);
  if (!same_ring(aa.ring_ptr(), bb.ring_ptr())) return false;
  return aa.monic() == bb.monic();
}

std::vector<MultiPoly> branch_ideal(const PolyMap& f, const Budget& budget) {
  if (!f.is_dominant()) throw DomainError("map has zero Jacobian");
  RingRef out_ring = plane_ring(f.ring()->conductor());
  MultiPoly J = squarefree_part(f.jacobian());
  if (J.is_constant()) return {MultiPoly::constant(out_ring, Rational(1))};

  // <J> is radical, so the elimination ideal is the kernel of
  // C[s,t] -> C[x,y]/<J>, s -> f1, t -> f2, and it is principal (the image
  // curve). Walk s^a t^b by weighted degree, reduce images mod J and stop at
  // the first linear dependency: that relation has least weighted degree.
  const unsigned w1 = std::max(1u, f.f1().total_degree());
  const unsigned w2 = std::max(1u, f.f2().total_degree());
  const unsigned max_deg = J.total_degree() * std::max(w1, w2) * std::max(w1, w2);

  std::size_t work = 0;
  auto charge = [&](const MultiPoly& p) {
    work += p.size();
    if (work > budget.max_work) throw ResourceExceeded("branch elimination work budget exceeded");
    if (p.max_coeff_bits() > budget.max_coeff_bits) throw ResourceExceeded("coefficient size budget exceeded");
  };

  std::map<std::pair<unsigned, unsigned>, MultiPoly> images;
  auto image = [&](unsigned a, unsigned b) -> const MultiPoly& {
    auto key = std::make_pair(a, b);
    if (auto it = images.find(key); it != images.end()) return it->second;
    MultiPoly r = a == 0 && b == 0 ? remainder_by(MultiPoly::constant(J.ring_ptr(), Rational(1)), J)
                  : a > 0          ? remainder_by(images.at({a - 1, b}) * f.f1(), J)
                                   : remainder_by(images.at({a, b - 1}) * f.f2(), J);
    charge(r);
    return images.emplace(key, std::move(r)).first->second;
  };

  struct Pivot {
    MultiPoly vec;   // monic image, in (x, y)
    MultiPoly comb;  // the (s, t) polynomial it is the image of
  };
  std::unordered_map<Monomial, Pivot, MonomialHash> pivots;
  for (unsigned D = 0; D <= max_deg; ++D) {
    for (unsigned a = 0; a * w1 <= D; ++a) {
      if ((D - a * w1) % w2 != 0) continue;
      const unsigned b = (D - a * w1) / w2;
      MultiPoly vec = image(a, b);
      Monomial m;
      m.e[0] = static_cast<std::uint16_t>(a);
      m.e[1] = static_cast<std::uint16_t>(b);
      MultiPoly comb = MultiPoly::monomial(out_ring, m, CycloNumber::one(f.ring()->conductor()));
      while (!vec.is_zero()) {
        auto it = pivots.find(vec.leading_term().mono);
        if (it == pivots.end()) break;
        const CycloNumber c = vec.leading_term().coeff;
        vec -= it->second.vec * c;
        comb -= it->second.comb * c;
        charge(vec);
        charge(comb);
      }
      if (vec.is_zero()) return {normalize_generator(comb)};
      const CycloNumber inv = vec.leading_term().coeff.inverse();
      Monomial lead = vec.leading_term().mono;
      pivots.emplace(lead, Pivot{vec * inv, comb * inv});
    }
  }
  throw ConsistencyError("no relation found within the degree bound");
}

std::string to_string(TierStatus s) {
  switch (s) {
    case TierStatus::Pass:
      return "pass";
    case TierStatus::Fail:
      return "fail";
    case TierStatus::Skipped:
      return "skipped-budget";
    case TierStatus::NotRun:
      return "not-run";
  }
  return "?";
}

BranchReport verify_branch(const PolyMap& f, const MultiPoly& claimed, bool run_elimination, const Budget& budget) {
  BranchReport rep;
  if (claimed.is_zero() || claimed.is_constant()) {
    rep.divisibility = rep.squarefree = TierStatus::Fail;
    rep.detail = "claimed curve is constant";
    return rep;
  }
  unsigned n = std::lcm(f.ring()->conductor(), claimed.ring().conductor());
  PolyMap ff = f.with_conductor(n);
  MultiPoly c = lift(claimed, n).in_ring(plane_ring(n));

  MultiPoly pulled = substitute(c, std::vector<MultiPoly>{ff.f1(), ff.f2()});
  MultiPoly crit = squarefree_part(ff.jacobian());
  rep.divisibility = exact_div(pulled, crit) ? TierStatus::Pass : TierStatus::Fail;
  rep.squarefree = associates(squarefree_part(c), c) ? TierStatus::Pass : TierStatus::Fail;
  if (run_elimination) {
    try {
      auto gens = branch_ideal(ff, budget);
      if (gens.size() == 1) rep.computed = gens[0];
      rep.elimination = gens.size() == 1 && associates(gens[0], c) ? TierStatus::Pass : TierStatus::Fail;
      if (rep.elimination == TierStatus::Fail) {
        rep.detail = "elimination gave " + std::to_string(gens.size()) + " generator(s)";
      }
    } catch (const ResourceExceeded& e) {
      rep.elimination = TierStatus::Skipped;
      rep.detail = e.what();
    }
  }
  return rep;
}

namespace {

// Splits a squarefree factor along its contents in each variable.
void split_contents(const MultiPoly& p, std::vector<MultiPoly>& out) {
  if (p.is_constant()) return;
  for (std::size_t v = 0; v < p.ring().nvars(); ++v) {
    if (!p.involves(v)) continue;
    MultiPoly c = content_in(p, v);
    if (c.is_constant()) continue;
    auto q = exact_div(p, c);
    if (!q) throw ConsistencyError("content split failed");
    split_contents(c, out);
    split_contents(*q, out);
    return;
  }
  out.push_back(p.monic());
}

}  // namespace

std::optional<JacobianSplit> jacobian_power_factorization(const PolyMap& f, int d) {
  if (d < 3) throw DomainError("jacobian_power_factorization requires d >= 3");
  const unsigned e = static_cast<unsigned>(d - 2);
  MultiPoly J = f.jacobian();
  if (J.is_zero() || J.is_constant()) return std::nullopt;
  struct Piece {
    MultiPoly poly;
    unsigned mult;
  };
  std::vector<Piece> pieces;
  for (auto& [fac, m] : squarefree_decomposition(J)) {
    std::vector<MultiPoly> parts;
    split_contents(fac, parts);
    for (auto& p : parts) pieces.push_back(Piece{std::move(p), m});
  }
  std::vector<unsigned> use(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) use[i] = pieces[i].mult / e;
  auto remaining_degree = [&]() {
    unsigned deg = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i) deg += (pieces[i].mult - use[i] * e) * pieces[i].poly.total_degree();
    return deg;
  };
  if (remaining_degree() == 0) {
    // leave the highest-degree piece (first on ties) for H2
    std::size_t best = pieces.size();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (use[i] == 0) continue;
      if (best == pieces.size() || pieces[i].poly.total_degree() > pieces[best].poly.total_degree()) best = i;
    }
    if (best == pieces.size()) return std::nullopt;
    --use[best];
  }
  MultiPoly h1 = MultiPoly::constant(J.ring_ptr(), Rational(1));
  for (std::size_t i = 0; i < pieces.size(); ++i) h1 *= pieces[i].poly.pow(use[i]);
  if (h1.is_constant()) return std::nullopt;
  auto h2 = exact_div(J, h1.pow(e));
  if (!h2 || h2->is_constant()) return std::nullopt;
  return JacobianSplit{h1, *h2};
}

bool integral_relation_check(const PolyMap& f, const MultiPoly& element, const MultiPoly& relation) {
  if (relation.ring().nvars() != 3) throw DomainError("relation must live in a ring (X, s, t)");
  if (!relation.involves(0)) throw DomainError("relation does not involve its main variable");
  MultiPoly lc = relation.leading_coefficient_in(0);
  if (!lc.is_constant()) throw DomainError("relation is not monic in its main variable");
  unsigned n = std::lcm(std::lcm(f.ring()->conductor(), element.ring().conductor()), relation.ring().conductor());
  PolyMap ff = f.with_conductor(n);
  MultiPoly el = lift(element, n).in_ring(ff.ring());
  std::vector<MultiPoly> images{el, ff.f1(), ff.f2()};
  return substitute(lift(relation, n), images).is_zero();
}

}  // namespace polymap
