#include "polymap/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>

#include "polymap/errors.hpp"

namespace polymap {

Budget Budget::unlimited() {
  Budget b;
  b.max_pairs = std::numeric_limits<std::size_t>::max();
  b.max_coeff_bits = std::numeric_limits<std::size_t>::max();
  b.max_work = std::numeric_limits<std::size_t>::max();
  return b;
}

Budget Budget::scaled(double factor) {
  if (!(factor > 0)) throw DomainError("budget factor must be positive");
  Budget b;
  auto scale = [factor](std::size_t v) {
    double s = static_cast<double>(v) * factor;
    return s >= 1.8e19 ? std::numeric_limits<std::size_t>::max() : static_cast<std::size_t>(s);
  };
  b.max_pairs = scale(b.max_pairs);
  b.max_work = scale(b.max_work);
  return b;
}

Budget Budget::from_environment() {
  const char* env = std::getenv("POLYMAP_BUDGET");
  if (env == nullptr || *env == '\0') return Budget{};
  char* end = nullptr;
  double f = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(f > 0)) throw DomainError("POLYMAP_BUDGET must be a positive number");
  return scaled(f);
}

std::string format_dimension(const Dimension& d) { return d ? std::to_string(*d) : "infinite"; }

IdealBasis::IdealBasis(std::vector<MultiPoly> generators, MonomialOrder order)
    : gens_(std::move(generators)), order_(std::move(order)) {}

const std::vector<MultiPoly>& IdealBasis::basis() const {
  if (!basis_) throw DomainError("basis has not been computed");
  return *basis_;
}

std::vector<Monomial> IdealBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : basis()) out.push_back(g.leading_term(order_).mono);
  return out;
}

void IdealBasis::set_basis(std::vector<MultiPoly> basis, BasisStats stats) {
  basis_ = std::move(basis);
  stats_ = stats;
}

namespace {

using Term = MultiPoly::Term;
using Terms = std::vector<Term>;

Terms sorted_terms(const MultiPoly& p, const MonomialOrder& ord) {
  Terms t(p.terms().begin(), p.terms().end());
  if (ord.kind() != MonomialOrder::Kind::DegRevLex || ord.weights() != std::vector<unsigned>(ord.nvars(), 1)) {
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  }
  return t;
}

// p - c * m * g, both sorted under ord.
Terms sub_mul(std::span<const Term> p, std::span<const Term> g, const Monomial& m, const CycloNumber& c,
              const MonomialOrder& ord) {
  Terms out;
  out.reserve(p.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < p.size() && j < g.size()) {
    Monomial gm = g[j].mono * m;
    int cmp = ord.compare(p[i].mono, gm);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{gm, -(g[j].coeff * c)});
      ++j;
    } else {
      CycloNumber s = p[i].coeff - g[j].coeff * c;
      if (!s.is_zero()) out.push_back(Term{gm, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < p.size(); ++i) out.push_back(p[i]);
  for (; j < g.size(); ++j) out.push_back(Term{g[j].mono * m, -(g[j].coeff * c)});
  return out;
}

void make_monic(Terms& t) {
  if (t.empty() || t.front().coeff.is_one()) return;
  CycloNumber inv = t.front().coeff.inverse();
  for (auto& x : t) x.coeff = x.coeff * inv;
}

std::size_t coeff_bits(const Terms& t) {
  std::size_t b = 0;
  for (const auto& x : t) b = std::max(b, x.coeff.bit_size());
  return b;
}

struct Poly {
  Terms terms;
  unsigned sugar = 0;
  const Monomial& lm() const { return terms.front().mono; }
};

class Engine {
 public:
  Engine(const MonomialOrder& ord, const Budget& budget) : ord_(ord), budget_(budget) {}

  void charge(std::size_t units) {
    stats_.work += units;
    if (stats_.work > budget_.max_work) throw ResourceExceeded("Gröbner work budget exceeded");
  }

  const Poly* find_reducer(const Monomial& m, const std::vector<Poly>& store, const std::vector<std::size_t>& active) {
    for (std::size_t k : active) {
      if (store[k].lm().divides(m)) return &store[k];
    }
    return nullptr;
  }

  // Full reduction of p by the active polynomials.
  Terms reduce(Terms p, const std::vector<Poly>& store, const std::vector<std::size_t>& active) {
    Terms done;
    std::size_t pos = 0;
    while (pos < p.size()) {
      const Term& lt = p[pos];
      const Poly* g = find_reducer(lt.mono, store, active);
      if (g == nullptr) {
        done.push_back(lt);
        ++pos;
        continue;
      }
      charge(g->terms.size() + (p.size() - pos));
      Monomial q = Monomial::quotient(lt.mono, g->lm());
      CycloNumber c = lt.coeff;  // reducers are monic
      p = sub_mul(std::span<const Term>(p).subspan(pos), g->terms, q, c, ord_);
      pos = 0;
    }
    return done;
  }

  MonomialOrder ord_;
  Budget budget_;
  BasisStats stats_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

unsigned term_sugar(const MonomialOrder& ord, const Terms& t) {
  unsigned s = 0;
  for (const auto& x : t) s = std::max(s, ord.weighted_degree(x.mono));
  return s;
}

}  // namespace

IdealBasis buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& order, const Budget& budget) {
  if (!order.is_global()) throw DomainError("buchberger requires a global monomial order");
  IdealBasis result(gens, order);
  RingRef ring;
  for (const auto& g : gens) {
    if (!ring) ring = g.ring_ptr();
    if (!same_ring(ring, g.ring_ptr())) throw RingMismatch("buchberger: generators in different rings");
  }
  if (!ring) {
    result.set_basis({}, {});
    return result;
  }
  if (order.nvars() != ring->nvars()) throw DomainError("monomial order and ring disagree on variable count");

  Engine eng(order, budget);
  std::vector<Poly> store;
  std::vector<std::size_t> active;  // current basis G
  std::vector<Pair> pairs;          // B

  auto update = [&](std::size_t h) {
    const Monomial hm = store[h].lm();
    // Gebauer–Möller: new pairs, chain criterion among them, then product criterion
    std::vector<Pair> C;
    for (std::size_t g : active) {
      Monomial l = Monomial::lcm(hm, store[g].lm());
      unsigned s = std::max(store[h].sugar + order.weighted_degree(Monomial::quotient(l, hm)),
                            store[g].sugar + order.weighted_degree(Monomial::quotient(l, store[g].lm())));
      C.push_back(Pair{g, h, l, s});
    }
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      bool keep = hm.coprime(store[p.i].lm());
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b) {
          if (C[b].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t b = 0; b < D.size() && keep; ++b) {
          if (D[b].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> next;
    for (const Pair& p : pairs) {
      bool drop = hm.divides(p.lcm) && Monomial::lcm(store[p.i].lm(), hm) != p.lcm &&
                  Monomial::lcm(hm, store[p.j].lm()) != p.lcm;
      if (!drop) next.push_back(p);
    }
    for (const Pair& p : D) {
      if (!hm.coprime(store[p.i].lm())) next.push_back(p);
    }
    pairs = std::move(next);
    std::vector<std::size_t> kept;
    for (std::size_t g : active) {
      if (!hm.divides(store[g].lm())) kept.push_back(g);
    }
    kept.push_back(h);
    active = std::move(kept);
  };

  auto insert = [&](Terms t, unsigned sugar) {
    make_monic(t);
    if (coeff_bits(t) > budget.max_coeff_bits) throw ResourceExceeded("coefficient size budget exceeded");
    store.push_back(Poly{std::move(t), sugar});
    update(store.size() - 1);
  };

  // generators in ascending order of leading monomial, reduced against earlier ones
  std::vector<Terms> init;
  for (const auto& g : gens) {
    if (!g.is_zero()) init.push_back(sorted_terms(g, order));
  }
  std::stable_sort(init.begin(), init.end(),
                   [&](const Terms& a, const Terms& b) { return order.greater(b.front().mono, a.front().mono); });
  for (auto& t : init) {
    unsigned s = term_sugar(order, t);
    Terms r = eng.reduce(std::move(t), store, active);
    if (!r.empty()) insert(std::move(r), s);
  }

  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair p = *it;
    pairs.erase(it);
    ++eng.stats_.pairs_considered;
    if (eng.stats_.pairs_considered > budget.max_pairs) throw ResourceExceeded("Gröbner pair budget exceeded");

    const Poly& f = store[p.i];
    const Poly& g = store[p.j];
    const Monomial mf = Monomial::quotient(p.lcm, f.lm());
    Terms fs;
    fs.reserve(f.terms.size());
    for (const auto& t : f.terms) fs.push_back(Term{t.mono * mf, t.coeff});
    Terms s = sub_mul(fs, g.terms, Monomial::quotient(p.lcm, g.lm()), CycloNumber::one(ring->conductor()), order);
    eng.charge(f.terms.size() + g.terms.size());
    ++eng.stats_.pairs_reduced;
    Terms r = eng.reduce(std::move(s), store, active);
    if (r.empty()) {
      ++eng.stats_.zero_reductions;
      continue;
    }
    insert(std::move(r), p.sugar);
  }

  // interreduce: tail-reduce each element by the others, sort ascending
  std::vector<std::size_t> final_set = active;
  std::sort(final_set.begin(), final_set.end(),
            [&](std::size_t a, std::size_t b) { return order.greater(store[b].lm(), store[a].lm()); });
  std::vector<MultiPoly> basis;
  for (std::size_t k : final_set) {
    std::vector<std::size_t> others;
    for (std::size_t o : final_set) {
      if (o != k) others.push_back(o);
    }
    Terms head{store[k].terms.front()};
    Terms tail(store[k].terms.begin() + 1, store[k].terms.end());
    Terms red = eng.reduce(std::move(tail), store, others);
    head.insert(head.end(), red.begin(), red.end());
    basis.push_back(MultiPoly::from_terms(ring, std::move(head)));
  }
  result.set_basis(std::move(basis), eng.stats_);
  return result;
}

MultiPoly normal_form(const MultiPoly& p, const IdealBasis& b) {
  if (b.is_local()) throw DomainError("normal_form requires a global order");
  const auto& basis = b.basis();
  if (basis.empty()) return p;
  if (!same_ring(p.ring_ptr(), basis.front().ring_ptr())) throw RingMismatch("normal_form: ring mismatch");
  Engine eng(b.order(), Budget::unlimited());
  std::vector<Poly> store;
  std::vector<std::size_t> active;
  for (const auto& g : basis) {
    Terms t = sorted_terms(g, b.order());
    make_monic(t);
    store.push_back(Poly{std::move(t), 0});
    active.push_back(store.size() - 1);
  }
  return MultiPoly::from_terms(p.ring_ptr(), eng.reduce(sorted_terms(p, b.order()), store, active));
}

std::vector<MultiPoly> elimination_ideal(const std::vector<MultiPoly>& gens, const std::vector<std::string>& eliminate,
                                         const std::vector<unsigned>& weights, const Budget& budget) {
  if (gens.empty()) return {};
  const RingRef& ring = gens.front().ring_ptr();
  const std::size_t n = ring->nvars();
  if (!weights.empty() && weights.size() != n) throw DomainError("one weight per variable required");
  // permuted ring: eliminated variables first
  std::vector<std::size_t> perm;  // new position -> old index
  std::vector<bool> elim(n, false);
  for (const auto& name : eliminate) elim[ring->require_index(name)] = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (elim[i]) perm.push_back(i);
  }
  const std::size_t front = perm.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!elim[i]) perm.push_back(i);
  }
  std::vector<std::string> names;
  std::vector<std::size_t> to_new(n), to_old(n);
  std::vector<unsigned> w;
  for (std::size_t k = 0; k < n; ++k) {
    names.push_back(ring->vars()[perm[k]] + (front > 0 ? "'" : ""));
    to_new[perm[k]] = k;
    to_old[k] = perm[k];
    w.push_back(weights.empty() ? 1u : weights[perm[k]]);
  }
  RingRef work = Ring::make(names, ring->conductor());
  std::vector<MultiPoly> moved;
  for (const auto& g : gens) moved.push_back(g.in_ring(work, to_new));
  IdealBasis gb = buchberger(moved, MonomialOrder::block(n, front, w), budget);
  std::vector<MultiPoly> out;
  for (const auto& g : gb.basis()) {
    bool free = true;
    for (std::size_t k = 0; k < front; ++k) free = free && !g.involves(k);
    if (free) out.push_back(g.in_ring(ring, to_old));
  }
  return out;
}

Dimension staircase_count(const std::vector<Monomial>& lead, std::size_t nvars) {
  if (nvars == 0) return lead.empty() ? 1 : 0;
  std::vector<unsigned> bound(nvars, 0);
  for (const auto& m : lead) {
    if (m.is_one()) return 0;
    unsigned s = m.support();
    if ((s & (s - 1)) == 0) {
      unsigned v = __builtin_ctz(s);
      if (v < nvars && (bound[v] == 0 || m.e[v] < bound[v])) bound[v] = m.e[v];
    }
  }
  for (unsigned b : bound) {
    if (b == 0) return std::nullopt;
  }
  std::size_t count = 0;
  Monomial cur;
  while (true) {
    bool std_mono = std::none_of(lead.begin(), lead.end(), [&](const Monomial& m) { return m.divides(cur); });
    if (std_mono) ++count;
    std::size_t k = 0;
    while (k < nvars) {
      if (++cur.e[k] < bound[k]) break;
      cur.e[k] = 0;
      ++k;
    }
    if (k == nvars) break;
  }
  return count;
}

Dimension quotient_dimension(const IdealBasis& b) {
  if (b.is_local()) throw DomainError("quotient_dimension requires a global order");
  return staircase_count(b.leading_monomials(), b.order().nvars());
}

// ---------------------------------------------------------------------------
// Mora

namespace {

unsigned ecart(const Terms& t) {
  unsigned d = 0;
  for (const auto& x : t) d = std::max(d, x.mono.degree());
  return d - t.front().mono.degree();
}

Terms mora_reduce(Terms h, std::vector<Terms> T, const MonomialOrder& ord, const Budget& budget, std::size_t& work) {
  while (!h.empty()) {
    const Monomial lm = h.front().mono;
    std::size_t best = T.size();
    unsigned best_e = 0;
    for (std::size_t k = 0; k < T.size(); ++k) {
      if (!T[k].front().mono.divides(lm)) continue;
      unsigned e = ecart(T[k]);
      if (best == T.size() || e < best_e) {
        best = k;
        best_e = e;
      }
    }
    if (best == T.size()) break;
    work += T[best].size() + h.size();
    if (work > budget.max_work) throw ResourceExceeded("Mora work budget exceeded");
    Terms g = T[best];
    if (best_e > ecart(h)) T.push_back(h);
    CycloNumber c = h.front().coeff * g.front().coeff.inverse();
    h = sub_mul(h, g, Monomial::quotient(lm, g.front().mono), c, ord);
  }
  return h;
}

}  // namespace

MultiPoly mora_normal_form(const MultiPoly& p, const std::vector<MultiPoly>& reducers, const Budget& budget,
                           std::size_t* work) {
  const MonomialOrder ord = MonomialOrder::local(p.ring().nvars());
  std::vector<Terms> T;
  for (const auto& r : reducers) {
    if (!r.is_zero()) T.push_back(sorted_terms(r, ord));
  }
  std::size_t w = 0;
  Terms h = mora_reduce(sorted_terms(p, ord), std::move(T), ord, budget, w);
  if (work) *work += w;
  return MultiPoly::from_terms(p.ring_ptr(), std::move(h));
}

IdealBasis mora_standard_basis(const std::vector<MultiPoly>& gens, const Budget& budget) {
  if (gens.empty()) throw DomainError("mora_standard_basis needs generators");
  const RingRef ring = gens.front().ring_ptr();
  const MonomialOrder ord = MonomialOrder::local(ring->nvars());
  IdealBasis result(gens, ord);
  BasisStats stats;

  std::vector<Terms> S;
  for (const auto& g : gens) {
    if (!same_ring(ring, g.ring_ptr())) throw RingMismatch("mora: generators in different rings");
    if (!g.is_zero()) S.push_back(sorted_terms(g, ord));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < S.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.erase(pairs.begin());
    if (++stats.pairs_considered > budget.max_pairs) throw ResourceExceeded("Mora pair budget exceeded");
    const Monomial mi = S[i].front().mono, mj = S[j].front().mono;
    if (mi.coprime(mj)) continue;
    Monomial l = Monomial::lcm(mi, mj);
    Terms fi;
    Monomial qi = Monomial::quotient(l, mi);
    CycloNumber ci = S[i].front().coeff.inverse();
    for (const auto& t : S[i]) fi.push_back(Term{t.mono * qi, t.coeff * ci});
    CycloNumber cj = S[j].front().coeff.inverse();
    Terms s = sub_mul(fi, S[j], Monomial::quotient(l, mj), cj, ord);
    ++stats.pairs_reduced;
    Terms h = mora_reduce(std::move(s), S, ord, budget, stats.work);
    if (h.empty()) {
      ++stats.zero_reductions;
      continue;
    }
    S.push_back(std::move(h));
    for (std::size_t k = 0; k + 1 < S.size(); ++k) pairs.emplace_back(k, S.size() - 1);
  }
  std::vector<MultiPoly> basis;
  for (auto& t : S) basis.push_back(MultiPoly::from_terms(ring, std::move(t)));
  result.set_basis(std::move(basis), stats);
  return result;
}

Dimension local_quotient_dimension(const IdealBasis& b) {
  if (!b.is_local()) throw DomainError("local_quotient_dimension requires a local standard basis");
  return staircase_count(b.leading_monomials(), b.order().nvars());
}

}  // namespace polymap
