#include "polymap/cyclo.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "polymap/errors.hpp"
#include "polymap/upoly.hpp"

namespace polymap {

namespace {

// Exact quotient of integer polynomials by a monic divisor.
std::vector<mpz_class> divide_monic(const std::vector<mpz_class>& num, const std::vector<mpz_class>& den) {
  std::vector<mpz_class> r = num;
  const std::size_t dd = den.size() - 1;
  std::vector<mpz_class> q(num.size() - dd);
  for (std::size_t k = num.size(); k-- > dd;) {
    mpz_class top = r[k];
    q[k - dd] = top;
    if (top == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) r[k - dd + j] -= top * den[j];
  }
  for (std::size_t j = 0; j < dd; ++j) {
    if (r[j] != 0) throw ConsistencyError("cyclotomic division left a remainder");
  }
  return q;
}

long to_long_checked(const mpz_class& z) {
  if (!z.fits_slong_p()) throw DomainError("cyclotomic coefficient exceeds machine range");
  return z.get_si();
}

}  // namespace

unsigned euler_phi(unsigned n) {
  if (n == 0) throw DomainError("euler_phi(0)");
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw DomainError("cyclotomic_polynomial requires n >= 1");
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<std::vector<mpz_class>>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<mpz_class> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) num = divide_monic(num, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(n, std::make_unique<std::vector<mpz_class>>(std::move(num)));
  return *it->second;
}

const CycloField& CycloField::get(unsigned conductor) {
  if (conductor == 0) throw DomainError("conductor must be positive");
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<CycloField>> fields;
  std::lock_guard lock(mu);
  auto it = fields.find(conductor);
  if (it == fields.end()) {
    it = fields.emplace(conductor, std::unique_ptr<CycloField>(new CycloField(conductor))).first;
  }
  return *it->second;
}

CycloField::CycloField(unsigned conductor) : conductor_(conductor), degree_(euler_phi(conductor)) {
  const auto& phi = cyclotomic_polynomial(conductor);
  for (unsigned j = 0; j < degree_; ++j) {
    if (phi[j] != 0) phi_terms_.emplace_back(j, to_long_checked(phi[j]));
  }
  zeta_pow_.reserve(conductor_);
  std::vector<long> cur(degree_, 0);
  cur[0] = 1;
  for (unsigned k = 0; k < conductor_; ++k) {
    zeta_pow_.push_back(cur);
    // multiply by x and reduce the overflowing top coefficient
    long carry = cur[degree_ - 1];
    for (unsigned j = degree_ - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (carry != 0) {
      for (const auto& [j, c] : phi_terms_) cur[j] -= carry * c;
    }
  }
}

const std::vector<long>& CycloField::zeta_power(long k) const {
  long n = static_cast<long>(conductor_);
  long r = ((k % n) + n) % n;
  return zeta_pow_[static_cast<std::size_t>(r)];
}

CycloNumber::CycloNumber() : field_(&CycloField::get(1)), c_{Rational(0)} {}

CycloNumber::CycloNumber(const Rational& q, unsigned conductor) : field_(&CycloField::get(conductor)) {
  c_.assign(field_->degree(), Rational(0));
  c_[0] = q;
}

CycloNumber CycloNumber::zeta(unsigned n, long k) {
  const CycloField& f = CycloField::get(n);
  Coords c;
  for (long v : f.zeta_power(k)) c.emplace_back(v);
  return CycloNumber(&f, std::move(c));
}

CycloNumber CycloNumber::from_coords(unsigned conductor, std::vector<Rational> coords) {
  const CycloField& f = CycloField::get(conductor);
  if (coords.size() != f.degree()) {
    throw DomainError("coordinate vector length " + std::to_string(coords.size()) +
                      " does not match phi(" + std::to_string(conductor) + ")");
  }
  return CycloNumber(&f, Coords(std::make_move_iterator(coords.begin()), std::make_move_iterator(coords.end())));
}

bool CycloNumber::is_zero() const noexcept {
  for (const auto& q : c_) {
    if (!q.is_zero()) return false;
  }
  return true;
}

bool CycloNumber::is_one() const noexcept {
  if (!c_[0].is_one()) return false;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

bool CycloNumber::is_rational() const noexcept {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

const Rational& CycloNumber::rational_value() const {
  if (!is_rational()) throw DomainError("cyclotomic number is not rational");
  return c_[0];
}

void CycloNumber::require_same(const CycloNumber& o) const {
  if (field_ != o.field_) {
    throw ConductorMismatch("conductor mismatch: " + std::to_string(conductor()) + " vs " +
                            std::to_string(o.conductor()));
  }
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  require_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  }
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
  require_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  }
  return *this;
}

CycloNumber& CycloNumber::operator*=(const Rational& q) {
  if (q.is_zero()) {
    for (auto& v : c_) v = Rational(0);
    return *this;
  }
  for (auto& v : c_) {
    if (!v.is_zero()) v *= q;
  }
  return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  *this = *this * o;
  return *this;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  a.require_same(b);
  if (b.is_rational()) return a * b.c_[0];
  if (a.is_rational()) return b * a.c_[0];
  const std::size_t n = a.c_.size();
  boost::container::small_vector<Rational, 8> prod(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.c_[j].is_zero()) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  a.field_->reduce(prod);
  CycloNumber::Coords c(std::make_move_iterator(prod.begin()), std::make_move_iterator(prod.end()));
  return CycloNumber(a.field_, std::move(c));
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r(*this);
  for (auto& v : r.c_) {
    if (!v.is_zero()) v = -v;
  }
  return r;
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(conductor()) + ")");
  if (is_rational()) return CycloNumber(c_[0].inverse(), conductor());
  std::vector<Rational> a(c_.begin(), c_.end());
  std::vector<Rational> m;
  for (const auto& z : cyclotomic_polynomial(conductor())) m.emplace_back(z);
  UPoly<Rational> ua(std::move(a), Rational(0));
  UPoly<Rational> um(std::move(m), Rational(0));
  auto [g, s] = upoly_half_ext_gcd(ua, um);
  if (g.degree() != 0) throw ConsistencyError("cyclotomic inverse: non-unit gcd");
  Coords c;
  for (std::size_t i = 0; i < field_->degree(); ++i) c.push_back(s[i]);
  return CycloNumber(field_, std::move(c));
}

CycloNumber CycloNumber::embed(unsigned m) const {
  const unsigned n = conductor();
  if (m == 0 || m % n != 0) {
    throw ConductorMismatch("cannot embed conductor " + std::to_string(n) + " into " + std::to_string(m));
  }
  if (m == n) return *this;
  const CycloField& target = CycloField::get(m);
  Coords out(target.degree(), Rational(0));
  const long step = static_cast<long>(m / n);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    const auto& image = target.zeta_power(static_cast<long>(k) * step);
    for (std::size_t j = 0; j < image.size(); ++j) {
      if (image[j] != 0) out[j] += c_[k] * Rational(image[j]);
    }
  }
  return CycloNumber(&target, std::move(out));
}

std::complex<double> CycloNumber::approx() const {
  std::complex<double> acc(0.0, 0.0);
  const double n = static_cast<double>(conductor());
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
    acc += c_[k].to_double() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

std::size_t CycloNumber::bit_size() const noexcept {
  std::size_t bits = 0;
  for (const auto& q : c_) bits = std::max(bits, q.bit_size());
  return bits;
}

std::size_t CycloNumber::hash() const noexcept {
  std::size_t h = conductor();
  for (const auto& q : c_) h = h * 1000003u ^ q.hash();
  return h;
}

CycloNumber cyclo_mul(const CycloNumber& a, const CycloNumber& b) { return a * b; }
CycloNumber cyclo_inv(const CycloNumber& a) { return a.inverse(); }
CycloNumber cyclo_embed(const CycloNumber& a, unsigned m) { return a.embed(m); }
std::complex<double> cyclo_approx(const CycloNumber& a) { return a.approx(); }

}  // namespace polymap
