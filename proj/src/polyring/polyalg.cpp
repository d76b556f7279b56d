#include "polymap/polyalg.hpp"

#include <algorithm>

#include "polymap/errors.hpp"
#include "polymap/upoly.hpp"

namespace polymap {

namespace {

MultiPoly one_of(const RingRef& r) { return MultiPoly::constant(r, Rational(1)); }

MultiPoly var_power(const RingRef& r, std::size_t v, unsigned k) {
  return MultiPoly::monomial(r, Monomial::var(v, k), CycloNumber::one(r->conductor()));
}

// Variables occurring in p, as a bitmask.
std::uint32_t support_of(const MultiPoly& p) {
  std::uint32_t s = 0;
  for (const auto& t : p.terms()) s |= t.mono.support();
  return s;
}

int single_var(std::uint32_t s) {
  if (s == 0 || (s & (s - 1)) != 0) return -1;
  return __builtin_ctz(s);
}

UPoly<CycloNumber> to_upoly(const MultiPoly& p, std::size_t v) {
  const unsigned n = p.ring().conductor();
  std::vector<CycloNumber> c(p.degree_in(v) + 1, CycloNumber::zero(n));
  for (const auto& t : p.terms()) c[t.mono.e[v]] += t.coeff;
  return UPoly<CycloNumber>(std::move(c), CycloNumber::zero(n));
}

// Homogenizes u(x_v) with x_w to degree `deg`.
MultiPoly from_upoly(const RingRef& r, const UPoly<CycloNumber>& u, std::size_t v, std::size_t w, unsigned deg) {
  MultiPolyBuilder b(r);
  for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
    Monomial m = Monomial::var(v, static_cast<unsigned>(k));
    if (w != v) m.e[w] = static_cast<std::uint16_t>(deg - k);
    b.add(m, u.coeffs()[k]);
  }
  return std::move(b).build();
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

MultiPoly primitive_part(const MultiPoly& p, std::size_t v, MultiPoly* content = nullptr) {
  MultiPoly c = content_in(p, v);
  if (content) *content = c;
  if (c.is_constant()) return p.monic();
  auto q = exact_div(p, c);
  if (!q) throw ConsistencyError("content does not divide polynomial");
  return *q;
}

// Subresultant PRS on two polynomials with positive degree in v.
MultiPoly subresultant_gcd(MultiPoly A, MultiPoly B, std::size_t v) {
  const RingRef& ring = A.ring_ptr();
  if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
  MultiPoly ca(ring), cb(ring);
  A = primitive_part(A, v, &ca);
  B = primitive_part(B, v, &cb);
  MultiPoly d = gcd_rec(ca, cb);
  MultiPoly g = one_of(ring), h = one_of(ring);
  while (true) {
    const unsigned delta = A.degree_in(v) - B.degree_in(v);
    MultiPoly R = pseudo_remainder(A, B, v);
    if (R.is_zero()) break;
    if (R.degree_in(v) == 0) {
      B = one_of(ring);
      break;
    }
    A = B;
    auto q = exact_div(R, g * h.pow(delta));
    if (!q) throw ConsistencyError("subresultant division failed");
    B = *q;
    g = A.leading_coefficient_in(v);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      auto hq = exact_div(g.pow(delta), h.pow(delta - 1));
      if (!hq) throw ConsistencyError("subresultant scale division failed");
      h = *hq;
    }
  }
  if (B.degree_in(v) > 0) B = primitive_part(B, v);
  return (d * B).monic();
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
  const RingRef& ring = a.ring_ptr();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return one_of(ring);

  const std::uint32_t sa = support_of(a), sb = support_of(b);
  const std::uint32_t s = sa | sb;
  if (int v = single_var(s); v >= 0) {
    auto g = upoly_gcd(to_upoly(a, v), to_upoly(b, v));
    return from_upoly(ring, g, v, v, 0);
  }
  // Binary forms: work with the dehomogenization and restore powers of w.
  if (__builtin_popcount(s) == 2 && a.is_homogeneous() && b.is_homogeneous()) {
    const std::size_t v = __builtin_ctz(s);
    const std::size_t w = 31 - __builtin_clz(s);
    auto ua = to_upoly(a, v), ub = to_upoly(b, v);
    unsigned va = a.total_degree() - ua.degree(), vb = b.total_degree() - ub.degree();
    auto g = upoly_gcd(ua, ub);
    unsigned wpow = std::min(va, vb);
    MultiPoly r = from_upoly(ring, g, v, w, g.degree());
    return (r * var_power(ring, w, wpow)).monic();
  }

  const std::uint32_t both = sa & sb;
  if (both == 0) {
    // no shared variable: gcd divides the content of a in each variable of b
    std::size_t v = __builtin_ctz(sb);
    return gcd_rec(a, content_in(b, v));
  }
  // main variable: the shared one of least degree
  std::size_t best = kMaxVars;
  unsigned best_deg = ~0u;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (!(both & (1u << v))) continue;
    unsigned dv = std::max(a.degree_in(v), b.degree_in(v));
    if (dv < best_deg) {
      best_deg = dv;
      best = v;
    }
  }
  // variables present on one side only can be split off through contents
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if ((sa & ~sb) & (1u << v)) return gcd_rec(content_in(a, v), b);
    if ((sb & ~sa) & (1u << v)) return gcd_rec(a, content_in(b, v));
  }
  return subresultant_gcd(a, b, best);
}

// Yun's algorithm in variable v for p with no v-free factors.
void yun(const MultiPoly& f, std::size_t v, std::vector<std::pair<MultiPoly, unsigned>>& out) {
  auto div = [](const MultiPoly& x, const MultiPoly& y) {
    auto q = exact_div(x, y);
    if (!q) throw ConsistencyError("squarefree decomposition: inexact division");
    return *q;
  };
  MultiPoly fp = f.derivative(v);
  MultiPoly a0 = gcd_poly(f, fp);
  MultiPoly b = div(f, a0);
  MultiPoly c = div(fp, a0);
  MultiPoly d = c - b.derivative(v);
  for (unsigned i = 1; !b.is_constant(); ++i) {
    MultiPoly a = gcd_poly(b, d);
    if (!a.is_constant()) out.emplace_back(a, i);
    b = div(b, a);
    c = div(d, a);
    d = c - b.derivative(v);
  }
}

}  // namespace

std::optional<MultiPoly> exact_div(const MultiPoly& a, const MultiPoly& b) {
  if (!same_ring(a.ring_ptr(), b.ring_ptr())) throw RingMismatch("exact_div: ring mismatch");
  if (b.is_zero()) throw DivisionByZero("exact_div by zero polynomial");
  const RingRef& ring = a.ring_ptr();
  const auto& lb = b.leading_term();
  const CycloNumber lb_inv = lb.coeff.inverse();
  MultiPoly r = a;
  MultiPolyBuilder q(ring);
  while (!r.is_zero()) {
    const auto& lr = r.leading_term();
    if (!lb.mono.divides(lr.mono)) return std::nullopt;
    Monomial m = Monomial::quotient(lr.mono, lb.mono);
    CycloNumber c = lr.coeff * lb_inv;
    q.add(m, c);
    r -= b.shifted(m, c);
  }
  return std::move(q).build();
}

MultiPoly remainder_by(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DivisionByZero("remainder by zero polynomial");
  const RingRef& ring = a.ring_ptr();
  const auto& lb = b.leading_term();
  const CycloNumber lb_inv = lb.coeff.inverse();
  MultiPoly r = a;
  MultiPolyBuilder rem(ring);
  while (!r.is_zero()) {
    const auto lr = r.leading_term();
    if (lb.mono.divides(lr.mono)) {
      r -= b.shifted(Monomial::quotient(lr.mono, lb.mono), lr.coeff * lb_inv);
    } else {
      rem.add(lr.mono, lr.coeff);
      r -= MultiPoly::monomial(ring, lr.mono, lr.coeff);
    }
  }
  return std::move(rem).build();
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t v) {
  if (b.is_zero()) throw DivisionByZero("pseudo-remainder by zero polynomial");
  const RingRef& ring = a.ring_ptr();
  const unsigned db = b.degree_in(v);
  const MultiPoly lcb = b.leading_coefficient_in(v);
  MultiPoly r = a;
  int e = static_cast<int>(a.degree_in(v)) - static_cast<int>(db) + 1;
  if (e < 0) e = 0;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    const unsigned dr = r.degree_in(v);
    MultiPoly lcr = r.leading_coefficient_in(v);
    r = r * lcb - lcr * var_power(ring, v, dr - db) * b;
    --e;
  }
  if (e > 0) r = r * lcb.pow(static_cast<unsigned>(e));
  return r;
}

MultiPoly content_in(const MultiPoly& p, std::size_t v) {
  const RingRef& ring = p.ring_ptr();
  if (p.is_zero()) return MultiPoly(ring);
  MultiPoly g(ring);
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_constant()) return one_of(ring);
  }
  return g;
}

MultiPoly gcd_poly(const MultiPoly& a, const MultiPoly& b) {
  if (!same_ring(a.ring_ptr(), b.ring_ptr())) throw RingMismatch("gcd_poly: ring mismatch");
  return gcd_rec(a, b);
}

MultiPoly squarefree_part(const MultiPoly& p) {
  if (p.is_zero()) return p;
  if (p.is_constant()) return one_of(p.ring_ptr());
  // gcd(p, all partials) = product of f_i^(e_i - 1) in characteristic zero
  MultiPoly g = p;
  for (std::size_t v = 0; v < p.ring().nvars() && !g.is_constant(); ++v) {
    if (p.involves(v)) g = gcd_poly(g, p.derivative(v));
  }
  if (g.is_constant()) return p.monic();
  auto q = exact_div(p, g);
  if (!q) throw ConsistencyError("squarefree part: inexact division");
  return q->monic();
}

std::vector<std::pair<MultiPoly, unsigned>> squarefree_decomposition(const MultiPoly& p) {
  std::vector<std::pair<MultiPoly, unsigned>> out;
  if (p.is_zero() || p.is_constant()) return out;
  std::size_t v = 0;
  while (!p.involves(v)) ++v;
  MultiPoly c(p.ring_ptr());
  MultiPoly pp = primitive_part(p, v, &c);
  yun(pp, v, out);
  for (auto& f : squarefree_decomposition(c)) out.push_back(std::move(f));
  return out;
}

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("determinant of empty matrix");
  const RingRef ring = m[0][0].ring_ptr();
  MultiPoly prev = one_of(ring);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t i = k + 1;
      while (i < n && m[i][k].is_zero()) ++i;
      if (i == n) return MultiPoly(ring);
      std::swap(m[k], m[i]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = exact_div(num, prev);
        if (!q) throw ConsistencyError("Bareiss step is not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = MultiPoly(ring);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, std::size_t v) {
  if (!same_ring(a.ring_ptr(), b.ring_ptr())) throw RingMismatch("resultant: ring mismatch");
  if (a.is_zero() || b.is_zero()) throw DomainError("resultant of zero polynomial");
  const RingRef& ring = a.ring_ptr();
  const std::size_t m = a.degree_in(v), n = b.degree_in(v);
  if (m + n == 0) return one_of(ring);
  auto ca = a.coefficients_in(v), cb = b.coefficients_in(v);
  const std::size_t N = m + n;
  std::vector<std::vector<MultiPoly>> s(N, std::vector<MultiPoly>(N, MultiPoly(ring)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = ca[m - k];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = cb[n - k];
  }
  return bareiss_determinant(std::move(s));
}

MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, std::string_view var) {
  return resultant(a, b, a.ring().require_index(var));
}

}  // namespace polymap
