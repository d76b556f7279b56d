#include "polymap/multipoly.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

#include "polymap/errors.hpp"
#include "polymap/kernels.hpp"

namespace polymap {

Ring::Ring(std::vector<std::string> vars, unsigned conductor)
    : vars_(std::move(vars)), conductor_(conductor), order_(MonomialOrder::degrevlex(vars_.size())) {}

RingRef Ring::make(std::vector<std::string> vars, unsigned conductor) {
  if (vars.size() > kMaxVars) throw DomainError("too many variables (max " + std::to_string(kMaxVars) + ")");
  if (conductor == 0) throw DomainError("conductor must be positive");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw DomainError("empty variable name");
    if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
  }
  // Rings are interned so that equal rings share one pointer.
  static std::mutex mu;
  static std::map<std::pair<std::vector<std::string>, unsigned>, RingRef> interned;
  std::lock_guard lock(mu);
  auto key = std::make_pair(vars, conductor);
  auto it = interned.find(key);
  if (it != interned.end()) return it->second;
  RingRef r(new Ring(std::move(vars), conductor));
  interned.emplace(std::move(key), r);
  return r;
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Ring::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw DomainError("unknown variable '" + std::string(name) + "'");
  return *idx;
}

bool same_ring(const RingRef& a, const RingRef& b) { return a == b || *a == *b; }

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly(RingRef ring) : ring_(std::move(ring)) {}

MultiPoly MultiPoly::constant(RingRef ring, const CycloNumber& c) {
  return monomial(std::move(ring), Monomial{}, c);
}

MultiPoly MultiPoly::constant(RingRef ring, const Rational& q) {
  unsigned n = ring->conductor();
  return monomial(std::move(ring), Monomial{}, CycloNumber(q, n));
}

MultiPoly MultiPoly::variable(RingRef ring, std::size_t index) {
  if (index >= ring->nvars()) throw DomainError("variable index out of range");
  unsigned n = ring->conductor();
  return monomial(std::move(ring), Monomial::var(index), CycloNumber::one(n));
}

MultiPoly MultiPoly::variable(RingRef ring, std::string_view name) {
  std::size_t idx = ring->require_index(name);
  return variable(std::move(ring), idx);
}

MultiPoly MultiPoly::monomial(RingRef ring, const Monomial& m, const CycloNumber& c) {
  std::vector<Term> t;
  t.push_back(Term{m, c});
  return from_terms(std::move(ring), std::move(t));
}

MultiPoly MultiPoly::from_terms(RingRef ring, std::vector<Term> terms) {
  const unsigned n = ring->conductor();
  const std::size_t nv = ring->nvars();
  for (auto& t : terms) {
    for (std::size_t i = nv; i < kMaxVars; ++i) {
      if (t.mono.e[i] != 0) throw RingMismatch("monomial uses a variable outside the ring");
    }
    if (t.coeff.conductor() != n) t.coeff = t.coeff.embed(n);
  }
  const MonomialOrder& ord = ring->canonical_order();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return MultiPoly(std::move(ring), std::move(out));
}

void MultiPoly::require_same_ring(const MultiPoly& o) const {
  if (!same_ring(ring_, o.ring_)) throw RingMismatch("polynomials belong to different rings");
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

CycloNumber MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return CycloNumber::zero(ring_->conductor());
}

unsigned MultiPoly::total_degree() const noexcept {
  // canonical order is graded, so the first term has maximal degree
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

unsigned MultiPoly::degree_in(std::size_t var) const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.e[var]);
  return d;
}

bool MultiPoly::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  unsigned d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
}

const MultiPoly::Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return terms_.front();
}

const MultiPoly::Term& MultiPoly::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (order.greater(t.mono, best->mono)) best = &t;
  }
  return *best;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  const unsigned d = degree_in(var);
  std::vector<std::vector<Term>> buckets(d + 1);
  for (const auto& t : terms_) {
    Term c = t;
    c.mono.e[var] = 0;
    buckets[t.mono.e[var]].push_back(std::move(c));
  }
  std::vector<MultiPoly> out;
  out.reserve(d + 1);
  for (auto& b : buckets) out.push_back(from_terms(ring_, std::move(b)));
  return out;
}

MultiPoly MultiPoly::leading_coefficient_in(std::size_t var) const {
  const unsigned d = degree_in(var);
  std::vector<Term> b;
  for (const auto& t : terms_) {
    if (t.mono.e[var] != d) continue;
    Term c = t;
    c.mono.e[var] = 0;
    b.push_back(std::move(c));
  }
  return from_terms(ring_, std::move(b));
}

namespace {

template <bool Subtract>
std::vector<MultiPoly::Term> merge_terms(std::span<const MultiPoly::Term> a, std::span<const MultiPoly::Term> b,
                                         const MonomialOrder& ord) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ord.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      if constexpr (Subtract) {
        out.push_back(MultiPoly::Term{b[j].mono, -b[j].coeff});
      } else {
        out.push_back(b[j]);
      }
      ++j;
    } else {
      CycloNumber s = a[i].coeff;
      if constexpr (Subtract) {
        s -= b[j].coeff;
      } else {
        s += b[j].coeff;
      }
      if (!s.is_zero()) out.push_back(MultiPoly::Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    if constexpr (Subtract) {
      out.push_back(MultiPoly::Term{b[j].mono, -b[j].coeff});
    } else {
      out.push_back(b[j]);
    }
  }
  return out;
}

}  // namespace

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  require_same_ring(o);
  return MultiPoly(ring_, merge_terms<false>(terms_, o.terms_, ring_->canonical_order()));
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  require_same_ring(o);
  return MultiPoly(ring_, merge_terms<true>(terms_, o.terms_, ring_->canonical_order()));
}

MultiPoly MultiPoly::operator-() const {
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coeff = -x.coeff;
  return MultiPoly(ring_, std::move(t));
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  require_same_ring(o);
  if (is_zero() || o.is_zero()) return MultiPoly(ring_);
  if (terms_.size() * o.terms_.size() >= kParallelMultiplyThreshold && kernel_threads() > 1) {
    return multiply_terms_parallel(*this, o);
  }
  return multiply_terms_serial(*this, o);
}

MultiPoly MultiPoly::operator*(const CycloNumber& c) const {
  CycloNumber cc = c.conductor() == ring_->conductor() ? c : c.embed(ring_->conductor());
  if (cc.is_zero()) return MultiPoly(ring_);
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coeff = x.coeff * cc;
  return MultiPoly(ring_, std::move(t));
}

MultiPoly MultiPoly::operator*(const Rational& q) const {
  if (q.is_zero()) return MultiPoly(ring_);
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coeff *= q;
  return MultiPoly(ring_, std::move(t));
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(ring_, Rational(1));
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::shifted(const Monomial& m, const CycloNumber& c) const {
  if (c.is_zero()) return MultiPoly(ring_);
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.push_back(Term{x.mono * m, x.coeff * c});
  return MultiPoly(ring_, std::move(t));  // monomial orders are multiplicative
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return *this * terms_.front().coeff.inverse();
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= ring_->nvars()) throw DomainError("derivative: variable index out of range");
  std::vector<Term> t;
  for (const auto& x : terms_) {
    unsigned e = x.mono.e[var];
    if (e == 0) continue;
    Term d{x.mono, x.coeff * Rational(static_cast<long>(e))};
    d.mono.e[var] = static_cast<std::uint16_t>(e - 1);
    t.push_back(std::move(d));
  }
  // every surviving term lost one power of var: relative order is unchanged
  return MultiPoly(ring_, std::move(t));
}

CycloNumber MultiPoly::evaluate(std::span<const CycloNumber> point) const {
  if (point.size() != ring_->nvars()) throw DomainError("evaluate: point has wrong dimension");
  const unsigned n = ring_->conductor();
  std::vector<CycloNumber> pt;
  for (const auto& p : point) pt.push_back(p.conductor() == n ? p : p.embed(n));
  CycloNumber acc = CycloNumber::zero(n);
  for (const auto& t : terms_) {
    CycloNumber v = t.coeff;
    for (std::size_t i = 0; i < pt.size(); ++i) {
      for (unsigned k = 0; k < t.mono.e[i]; ++k) v = v * pt[i];
    }
    acc += v;
  }
  return acc;
}

MultiPoly MultiPoly::in_ring(const RingRef& target) const {
  if (same_ring(ring_, target)) return *this;
  std::vector<std::size_t> map(ring_->nvars(), SIZE_MAX);
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    if (auto j = target->index_of(ring_->vars()[i])) map[i] = *j;
  }
  return in_ring(target, map);
}

MultiPoly MultiPoly::in_ring(const RingRef& target, std::span<const std::size_t> var_map) const {
  if (target->conductor() % ring_->conductor() != 0) {
    throw RingMismatch("target conductor " + std::to_string(target->conductor()) + " is not a multiple of " +
                       std::to_string(ring_->conductor()));
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term r{Monomial{}, t.coeff.embed(target->conductor())};
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.mono.e[i] == 0) continue;
      if (i >= var_map.size() || var_map[i] == SIZE_MAX) {
        throw RingMismatch("variable '" + ring_->vars()[i] + "' has no counterpart in the target ring");
      }
      r.mono.e[var_map[i]] = static_cast<std::uint16_t>(r.mono.e[var_map[i]] + t.mono.e[i]);
    }
    out.push_back(std::move(r));
  }
  return from_terms(target, std::move(out));
}

std::size_t MultiPoly::max_coeff_bits() const noexcept {
  std::size_t b = 0;
  for (const auto& t : terms_) b = std::max(b, t.coeff.bit_size());
  return b;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Sub:
      return a - b;
    case ArithOp::Mul:
      return a * b;
  }
  throw DomainError("unknown arithmetic operation");
}

MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images) {
  if (images.size() != p.ring().nvars()) throw DomainError("substitute: one image per variable required");
  if (images.empty()) throw DomainError("substitute: empty assignment");
  const RingRef& target = images[0].ring_ptr();
  for (const auto& img : images) {
    if (!same_ring(img.ring_ptr(), target)) throw RingMismatch("substitute: images live in different rings");
  }
  if (target->conductor() % p.ring().conductor() != 0) {
    throw RingMismatch("substitute: coefficient field does not embed into the image ring");
  }
  const std::size_t nv = images.size();
  std::vector<unsigned> maxe(nv, 0);
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < nv; ++i) maxe[i] = std::max<unsigned>(maxe[i], t.mono.e[i]);
  }
  std::vector<std::vector<MultiPoly>> powers(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    powers[i].push_back(MultiPoly::constant(target, Rational(1)));
    for (unsigned k = 1; k <= maxe[i]; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  MultiPoly acc(target);
  for (const auto& t : p.terms()) {
    MultiPoly term = MultiPoly::constant(target, t.coeff.embed(target->conductor()));
    for (std::size_t i = 0; i < nv; ++i) {
      if (t.mono.e[i] != 0) term = term * powers[i][t.mono.e[i]];
    }
    acc += term;
  }
  return acc;
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& assignment) {
  std::vector<MultiPoly> images;
  images.reserve(p.ring().nvars());
  for (const auto& v : p.ring().vars()) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw DomainError("substitute: no image for variable '" + v + "'");
    images.push_back(it->second);
  }
  return substitute(p, images);
}

MultiPoly partial_derivative(const MultiPoly& p, std::string_view var) { return p.derivative(var); }

MultiPoly jacobian_det(const MultiPoly& f1, const MultiPoly& f2) {
  if (!same_ring(f1.ring_ptr(), f2.ring_ptr())) throw RingMismatch("jacobian_det: ring mismatch");
  if (f1.ring().nvars() < 2) throw DomainError("jacobian_det needs two variables");
  return f1.derivative(0) * f2.derivative(1) - f1.derivative(1) * f2.derivative(0);
}

MultiPoly hessian_det(const MultiPoly& p) {
  if (p.ring().nvars() < 2) throw DomainError("hessian_det needs two variables");
  MultiPoly px = p.derivative(0), py = p.derivative(1);
  return px.derivative(0) * py.derivative(1) - px.derivative(1) * py.derivative(0);
}

void MultiPolyBuilder::add(const Monomial& m, const CycloNumber& c) {
  if (!c.is_zero()) terms_.push_back(MultiPoly::Term{m, c});
}

MultiPoly MultiPolyBuilder::build() && { return MultiPoly::from_terms(std::move(ring_), std::move(terms_)); }

}  // namespace polymap
