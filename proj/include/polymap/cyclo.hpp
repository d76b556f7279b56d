#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N), power basis modulo the
// N-th cyclotomic polynomial. Conductor 1 is the rational field.

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <vector>

#include "polymap/rational.hpp"

namespace polymap {

/// Phi_n with integer coefficients, low degree first. Cached.
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n);

/// Euler's totient.
unsigned euler_phi(unsigned n);

/// Field descriptor shared by every number of one conductor. Instances are
/// interned and live for the whole program.
class CycloField {
 public:
  static const CycloField& get(unsigned conductor);

  unsigned conductor() const noexcept { return conductor_; }
  /// phi(N), the length of every coordinate vector.
  unsigned degree() const noexcept { return degree_; }
  /// Power-basis coordinates of zeta_N^k, k taken mod N.
  const std::vector<long>& zeta_power(long k) const;

  /// Reduces a coefficient vector of any length modulo Phi_N in place,
  /// leaving exactly degree() entries.
  template <class Vec>
  void reduce(Vec& v) const;

 private:
  explicit CycloField(unsigned conductor);

  unsigned conductor_;
  unsigned degree_;
  // Nonzero low coefficients of Phi_N (excluding the monic top term).
  std::vector<std::pair<unsigned, long>> phi_terms_;
  std::vector<std::vector<long>> zeta_pow_;
};

class CycloNumber {
 public:
  using Coords = boost::container::small_vector<Rational, 2>;

  /// Zero of Q.
  CycloNumber();
  /// The rational q inside Q(zeta_conductor).
  explicit CycloNumber(const Rational& q, unsigned conductor = 1);

  static CycloNumber zero(unsigned conductor) { return CycloNumber(Rational(0), conductor); }
  static CycloNumber one(unsigned conductor) { return CycloNumber(Rational(1), conductor); }
  /// zeta_n^k as an element of Q(zeta_n); k may be negative.
  static CycloNumber zeta(unsigned n, long k = 1);
  /// Throws DomainError if coords.size() != phi(conductor).
  static CycloNumber from_coords(unsigned conductor, std::vector<Rational> coords);

  unsigned conductor() const noexcept { return field_->conductor(); }
  const CycloField& field() const noexcept { return *field_; }
  const Coords& coords() const noexcept { return c_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when the value lies in Q.
  bool is_rational() const noexcept;
  /// Requires is_rational().
  const Rational& rational_value() const;

  /// Multiplicative inverse via extended Euclid against Phi_N.
  CycloNumber inverse() const;
  /// Image under zeta_n -> zeta_m^(m/n); requires conductor() | m.
  CycloNumber embed(unsigned m) const;
  /// Numerical value at zeta_N = exp(2 pi i / N). Diagnostics only.
  std::complex<double> approx() const;

  std::size_t bit_size() const noexcept;
  std::size_t hash() const noexcept;

  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  CycloNumber& operator*=(const Rational& q);
  CycloNumber& operator/=(const CycloNumber& o) { return *this *= o.inverse(); }

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator*(CycloNumber a, const Rational& q) { return a *= q; }
  friend CycloNumber operator*(const Rational& q, CycloNumber a) { return a *= q; }
  friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }
  CycloNumber operator-() const;

  friend bool operator==(const CycloNumber& a, const CycloNumber& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  CycloNumber(const CycloField* field, Coords c) : field_(field), c_(std::move(c)) {}
  void require_same(const CycloNumber& o) const;

  const CycloField* field_;
  Coords c_;
};

CycloNumber cyclo_mul(const CycloNumber& a, const CycloNumber& b);
CycloNumber cyclo_inv(const CycloNumber& a);
CycloNumber cyclo_embed(const CycloNumber& a, unsigned m);
std::complex<double> cyclo_approx(const CycloNumber& a);

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline CycloNumber zero_like(const CycloNumber& a) { return CycloNumber::zero(a.conductor()); }
inline CycloNumber one_like(const CycloNumber& a) { return CycloNumber::one(a.conductor()); }

template <class Vec>
void CycloField::reduce(Vec& v) const {
  const std::size_t n = degree_;
  for (std::size_t k = v.size(); k-- > n;) {
    if (v[k].is_zero()) continue;
    Rational top = v[k];
    const std::size_t base = k - n;
    for (const auto& [j, coef] : phi_terms_) {
      v[base + j] -= top * Rational(coef);
    }
  }
  if (v.size() > n) v.resize(n);
  while (v.size() < n) v.emplace_back(0);
}

}  // namespace polymap

template <>
struct std::hash<polymap::CycloNumber> {
  std::size_t operator()(const polymap::CycloNumber& a) const noexcept { return a.hash(); }
};
