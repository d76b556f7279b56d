#include <omp.h>

#include <algorithm>
#include <deque>
#include <numeric>
#include <regex>

#include "polymap/errors.hpp"
#include "polymap/refgroups.hpp"

namespace polymap {

Matrix2 Matrix2::identity(unsigned n) { return of(CycloNumber::one(n), CycloNumber::zero(n), CycloNumber::zero(n), CycloNumber::one(n)); }

Matrix2 Matrix2::scalar(const CycloNumber& c) {
  CycloNumber z = CycloNumber::zero(c.conductor());
  return of(c, z, z, c);
}

Matrix2 Matrix2::of(const CycloNumber& m00, const CycloNumber& m01, const CycloNumber& m10, const CycloNumber& m11) {
  unsigned n = std::lcm(std::lcm(m00.conductor(), m01.conductor()), std::lcm(m10.conductor(), m11.conductor()));
  return Matrix2{{m00.embed(n), m01.embed(n), m10.embed(n), m11.embed(n)}};
}

CycloNumber Matrix2::det() const { return a[0] * a[3] - a[1] * a[2]; }

Matrix2 Matrix2::embed(unsigned n) const { return Matrix2{{a[0].embed(n), a[1].embed(n), a[2].embed(n), a[3].embed(n)}}; }

Matrix2 Matrix2::operator*(const Matrix2& o) const {
  return Matrix2{{a[0] * o.a[0] + a[1] * o.a[2], a[0] * o.a[1] + a[1] * o.a[3], a[2] * o.a[0] + a[3] * o.a[2],
                  a[2] * o.a[1] + a[3] * o.a[3]}};
}

Matrix2 Matrix2::operator*(const CycloNumber& c) const { return Matrix2{{a[0] * c, a[1] * c, a[2] * c, a[3] * c}}; }

Matrix2 Matrix2::pow(unsigned k) const {
  Matrix2 r = identity(conductor()), b = *this;
  while (k > 0) {
    if (k & 1u) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

bool Matrix2::is_identity() const { return a[0].is_one() && a[1].is_zero() && a[2].is_zero() && a[3].is_one(); }

std::size_t Matrix2::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& c : a) h = (h ^ c.hash()) * 0x100000001b3ULL;
  return h;
}

std::string GroupSpec::name() const {
  switch (kind) {
    case Kind::Cyclic:
      return "cyclic(" + std::to_string(m) + ")";
    case Kind::Product:
      return "product(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Kind::Imprimitive:
      return "G(" + std::to_string(m) + "," + std::to_string(p) + ",2)";
    case Kind::Exceptional:
      return "G" + std::to_string(no);
  }
  return "?";
}

GroupSpec GroupSpec::parse(const std::string& text) {
  static const std::regex cyc(R"(\s*cyclic\((\d+)\)\s*)");
  static const std::regex prod(R"(\s*product\((\d+),\s*(\d+)\)\s*)");
  static const std::regex imp(R"(\s*G\((\d+),\s*(\d+),\s*2\)\s*)");
  static const std::regex imp2(R"(\s*imprimitive\((\d+),\s*(\d+)\)\s*)");
  static const std::regex exc(R"(\s*G(\d+)\s*)");
  static const std::regex exc2(R"(\s*exceptional\((\d+)\)\s*)");
  std::smatch mt;
  auto num = [&](int i) { return std::stoi(mt[i].str()); };
  if (std::regex_match(text, mt, cyc)) return cyclic(num(1));
  if (std::regex_match(text, mt, prod)) return product(num(1), num(2));
  if (std::regex_match(text, mt, imp) || std::regex_match(text, mt, imp2)) return imprimitive(num(1), num(2));
  if (std::regex_match(text, mt, exc) || std::regex_match(text, mt, exc2)) return exceptional(num(1));
  throw DomainError("unrecognized group specification '" + text + "'");
}

namespace {

struct ExceptionalRow {
  int no;
  std::size_t order;
  // lambda and mu as products of roots of unity: list of (order, power), sign folded in as zeta(2)
  std::vector<std::pair<unsigned, long>> lambda, mu;
  int k1, k2, k3, k;
  unsigned d1, d2;
  const char* label;
};

// omega = zeta(3), epsilon = zeta(8), i = zeta(4), eta = zeta(5), -1 = zeta(2)
const std::vector<ExceptionalRow>& exceptional_table() {
  static const std::vector<ExceptionalRow> rows = {
      {4, 24, {{2, 1}}, {{2, 1}, {3, 1}}, 1, 2, 2, 2, 4, 6, "[24,3]"},
      {5, 72, {{2, 1}, {3, 1}}, {{2, 1}, {3, 1}}, 1, 6, 6, 6, 6, 12, "[72,25]"},
      {6, 48, {{4, 1}}, {{2, 1}, {3, 1}}, 4, 4, 1, 4, 4, 12, "[48,33]"},
      {7, 144, {{4, 1}, {3, 1}}, {{2, 1}, {3, 1}}, 8, 12, 3, 12, 12, 12, "[144,157]"},
      {8, 96, {{8, 3}}, {}, 1, 2, 4, 4, 8, 12, "[96,67]"},
      {9, 192, {{4, 1}}, {{8, 1}}, 8, 7, 8, 8, 8, 24, "[192,963]"},
      {10, 288, {{8, 7}, {3, 2}}, {{2, 1}, {3, 1}}, 7, 12, 12, 12, 12, 24, "[288,400]"},
      {11, 576, {{4, 1}}, {{8, 1}, {3, 1}}, 24, 21, 8, 24, 24, 24, "[576,5472]"},
      {12, 48, {{4, 1}}, {}, 2, 1, 1, 2, 6, 8, "[48,29]"},
      {13, 96, {{4, 1}}, {{4, 1}}, 4, 1, 2, 4, 8, 12, "[96,192]"},
      {14, 144, {{4, 1}}, {{2, 1}, {3, 1}}, 6, 6, 5, 6, 6, 24, "[144,122]"},
      {15, 288, {{4, 1}}, {{4, 1}, {3, 1}}, 12, 3, 10, 12, 12, 24, "[288,903]"},
      {16, 600, {{2, 1}, {5, 3}}, {}, 7, 10, 10, 10, 20, 30, "[600,54]"},
      {17, 1200, {{4, 1}}, {{4, 1}, {5, 3}}, 20, 11, 20, 20, 20, 60, "[1200,483]"},
      {18, 1800, {{2, 1}, {3, 1}, {5, 3}}, {{3, 2}}, 11, 30, 30, 30, 30, 60, "[1800,328]"},
      {19, 3600, {{4, 1}, {3, 1}}, {{4, 1}, {5, 3}}, 40, 33, 40, 60, 60, 60, "[3600, ]"},
      {20, 360, {}, {{3, 2}}, 3, 6, 5, 6, 12, 30, "[360,51]"},
      {21, 720, {{4, 1}}, {{3, 2}}, 12, 12, 1, 12, 12, 60, "[720,420]"},
      {22, 240, {{4, 1}}, {}, 4, 4, 3, 4, 12, 20, "[240,93]"},
  };
  return rows;
}

const ExceptionalRow& exceptional_row(int no) {
  for (const auto& r : exceptional_table()) {
    if (r.no == no) return r;
  }
  throw DomainError("exceptional group number must be in 4..22, got " + std::to_string(no));
}

CycloNumber root_product(const std::vector<std::pair<unsigned, long>>& f, unsigned n) {
  CycloNumber c = CycloNumber::one(n);
  for (const auto& [ord, pw] : f) c = c * CycloNumber::zeta(ord, pw).embed(n);
  return c;
}

CycloNumber z(unsigned ord, long k, unsigned n) { return CycloNumber::zeta(ord, k).embed(n); }
CycloNumber q(long v, unsigned n) { return CycloNumber(Rational(v), n); }

// Klein's matrices S1, T1 for each polyhedral family, in Q(zeta_n).
std::pair<Matrix2, Matrix2> klein_pair(int family, unsigned n) {
  if (family == 3) {
    CycloNumber r2inv = (z(8, 1, n) - z(8, 3, n)).inverse();
    Matrix2 s1 = Matrix2::of(z(4, 1, n), q(0, n), q(0, n), -z(4, 1, n));
    Matrix2 t1 = Matrix2::of(z(8, 1, n), z(8, 3, n), z(8, 1, n), z(8, 7, n)) * r2inv;
    return {s1, t1};
  }
  if (family == 4) {
    CycloNumber r2inv = (z(8, 1, n) - z(8, 3, n)).inverse();
    Matrix2 s1 = Matrix2::of(z(4, 1, n), q(1, n), q(-1, n), -z(4, 1, n)) * r2inv;
    Matrix2 t1 = Matrix2::of(z(8, 1, n), z(8, 1, n), z(8, 3, n), z(8, 7, n)) * r2inv;
    return {s1, t1};
  }
  auto e = [n](long k) { return z(5, k, n); };
  CycloNumber r5inv = (e(1) - e(2) - e(3) + e(4)).inverse();
  Matrix2 s1 = Matrix2::of(e(4) - e(1), e(2) - e(3), e(2) - e(3), e(1) - e(4)) * r5inv;
  Matrix2 t1 = Matrix2::of(e(2) - e(4), e(4) - q(1, n), q(1, n) - e(1), e(3) - e(1)) * r5inv;
  return {s1, t1};
}

}  // namespace

const std::map<int, std::size_t>& exceptional_orders() {
  static const std::map<int, std::size_t> m = [] {
    std::map<int, std::size_t> out;
    for (const auto& r : exceptional_table()) out[r.no] = r.order;
    return out;
  }();
  return m;
}

GroupRecord build_group(const GroupSpec& spec) {
  GroupRecord g;
  g.spec = spec;
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: {
      if (spec.m < 2) throw DomainError("cyclic group needs m >= 2");
      unsigned n = static_cast<unsigned>(spec.m);
      g.conductor = n;
      g.generators = {Matrix2::of(q(1, n), q(0, n), q(0, n), z(n, 1, n))};
      g.expected_order = n;
      g.degrees = {1, n};
      break;
    }
    case GroupSpec::Kind::Product: {
      if (spec.m < 2 || spec.n < 2) throw DomainError("product group needs m, n >= 2");
      unsigned m = spec.m, nn = spec.n, n = std::lcm(m, nn);
      g.conductor = n;
      g.generators = {Matrix2::of(z(m, 1, n), q(0, n), q(0, n), q(1, n)),
                      Matrix2::of(q(1, n), q(0, n), q(0, n), z(nn, 1, n))};
      g.expected_order = static_cast<std::size_t>(m) * nn;
      g.degrees = {m, nn};
      break;
    }
    case GroupSpec::Kind::Imprimitive: {
      if (spec.m < 2 || spec.p < 1 || spec.m % spec.p != 0) throw DomainError("G(m,p,2) needs m >= 2 and p | m");
      unsigned m = spec.m, p = spec.p, n = m;
      g.conductor = n;
      g.generators = {Matrix2::of(z(m, p, n), q(0, n), q(0, n), q(1, n)),
                      Matrix2::of(z(m, 1, n), q(0, n), q(0, n), z(m, -1, n)),
                      Matrix2::of(q(0, n), q(1, n), q(1, n), q(0, n))};
      g.expected_order = 2 * static_cast<std::size_t>(m) * m / p;
      g.degrees = {2 * m / p, m};
      break;
    }
    case GroupSpec::Kind::Exceptional: {
      const ExceptionalRow& r = exceptional_row(spec.no);
      const int family = spec.no <= 7 ? 3 : spec.no <= 15 ? 4 : 5;
      const unsigned n = family == 5 ? 60 : 24;
      g.conductor = n;
      g.lambda = root_product(r.lambda, n);
      g.mu = root_product(r.mu, n);
      g.k1 = r.k1;
      g.k2 = r.k2;
      g.k3 = r.k3;
      g.k = r.k;
      g.st_exponent = family;
      g.label = r.label;
      auto [s1, t1] = klein_pair(family, n);
      g.generators = {s1 * *g.lambda, t1 * *g.mu, Matrix2::scalar(z(static_cast<unsigned>(r.k), 1, n))};
      g.expected_order = r.order;
      g.degrees = {r.d1, r.d2};
      break;
    }
  }
  return g;
}

GroupElements enumerate(const GroupRecord& g) {
  GroupElements out;
  Matrix2 id = Matrix2::identity(g.conductor);
  out.elements.push_back(id);
  out.index.emplace(id, 0);
  const std::size_t limit = 2 * std::max<std::size_t>(g.expected_order, 1);
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (const auto& gen : g.generators) {
      Matrix2 m = out.elements[head] * gen;
      if (out.index.emplace(m, out.elements.size()).second) {
        out.elements.push_back(std::move(m));
        if (out.elements.size() > limit) {
          throw ConsistencyError("closure of " + g.spec.name() + " exceeds twice its expected order");
        }
      }
    }
  }
  return out;
}

namespace {

std::size_t order_of(const Matrix2& m, std::size_t cap) {
  Matrix2 p = m;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  throw ConsistencyError("element order exceeds group size");
}

}  // namespace

std::vector<std::size_t> element_orders_serial(const GroupElements& els) {
  std::vector<std::size_t> out(els.size());
  for (std::size_t i = 0; i < els.size(); ++i) out[i] = order_of(els.elements[i], els.size());
  return out;
}

std::vector<std::size_t> element_orders_parallel(const GroupElements& els) {
  const auto n = static_cast<std::ptrdiff_t>(els.size());
  std::vector<std::size_t> out(els.size(), 0);
  bool failed = false;
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    std::size_t known;
#pragma omp atomic read
    known = out[static_cast<std::size_t>(i)];
    if (known != 0) continue;
    // chain[j] = position of g^(j+1)
    const Matrix2& g = els.elements[static_cast<std::size_t>(i)];
    std::vector<std::size_t> chain;
    Matrix2 p = g;
    while (true) {
      auto it = els.index.find(p);
      if (it == els.index.end() || chain.size() > els.size()) {
#pragma omp atomic write
        failed = true;
        break;
      }
      chain.push_back(it->second);
      if (it->second == 0) break;
      p = p * g;
    }
    if (chain.empty() || els.index.find(p) == els.index.end() || chain.back() != 0) continue;
    const std::size_t ord = chain.size();
    for (std::size_t j = 1; j <= ord; ++j) {
      std::size_t v = ord / std::gcd(ord, j);
#pragma omp atomic write
      out[chain[j - 1]] = v;
    }
  }
  if (failed) throw ConsistencyError("element list is not closed under powers");
  return out;
}

Fingerprint fingerprint(const GroupRecord& g, const GroupElements& els) {
  Fingerprint f;
  f.order = els.size();
  for (const auto& e : els.elements) {
    const bool scalar = e.a[1].is_zero() && e.a[2].is_zero() && e.a[0] == e.a[3];
    bool central = scalar || std::all_of(g.generators.begin(), g.generators.end(),
                               [&](const Matrix2& s) { return e * s == s * e; });
    if (central) ++f.center_order;
  }
  for (std::size_t o : element_orders_parallel(els)) ++f.order_histogram[o];
  return f;
}

bool verify_presentation(const GroupRecord& g) {
  if (g.spec.kind != GroupSpec::Kind::Exceptional || g.generators.size() < 3) {
    throw DomainError("presentations are defined for exceptional groups only");
  }
  const Matrix2& S = g.generators[0];
  const Matrix2& T = g.generators[1];
  const Matrix2& Z = g.generators[2];
  auto zp = [&](int e) { return Z.pow(static_cast<unsigned>(((e % g.k) + g.k) % g.k)); };
  return S.pow(2) == zp(g.k1) && T.pow(3) == zp(g.k2) && (S * T).pow(static_cast<unsigned>(g.st_exponent)) == zp(g.k3) &&
         S * Z == Z * S && T * Z == Z * T && Z.pow(static_cast<unsigned>(g.k)).is_identity();
}

std::vector<GroupSpec> classes_of_degree(int d) {
  if (d < 2) throw DomainError("classes_of_degree needs d >= 2");
  std::vector<GroupSpec> out{GroupSpec::cyclic(d)};
  for (int m = 2; m * m <= d; ++m) {
    if (d % m == 0) out.push_back(GroupSpec::product(m, d / m));
  }
  for (int m = 2; 2 * m <= d; ++m) {
    for (int p = 1; p <= m; ++p) {
      if (m % p != 0 || (m == 2 && p == 2)) continue;
      if (2L * m * m == static_cast<long>(p) * d) out.push_back(GroupSpec::imprimitive(m, p));
    }
  }
  for (const auto& [no, ord] : exceptional_orders()) {
    if (ord == static_cast<std::size_t>(d)) out.push_back(GroupSpec::exceptional(no));
  }
  return out;
}

}  // namespace polymap
