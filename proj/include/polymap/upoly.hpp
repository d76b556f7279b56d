#pragma once

// Dense univariate polynomials over an exact field K, stored low degree first.
// K must provide is_zero(), inverse(), ring operators, and free functions
// zero_like(k) / one_like(k) found by ADL.

#include <cstddef>
#include <utility>
#include <vector>

#include "polymap/errors.hpp"

namespace polymap {

template <class K>
class UPoly {
 public:
  explicit UPoly(K zero) : zero_(std::move(zero)) {}
  UPoly(std::vector<K> coeffs, K zero) : c_(std::move(coeffs)), zero_(std::move(zero)) { trim(); }

  const std::vector<K>& coeffs() const { return c_; }
  const K& zero() const { return zero_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const K& lead() const { return c_.back(); }
  const K& operator[](std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }

  UPoly operator+(const UPoly& o) const {
    std::vector<K> r(std::max(c_.size(), o.c_.size()), zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return UPoly(std::move(r), zero_);
  }
  UPoly operator-(const UPoly& o) const {
    std::vector<K> r(std::max(c_.size(), o.c_.size()), zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
    return UPoly(std::move(r), zero_);
  }
  UPoly operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly(zero_);
    std::vector<K> r(c_.size() + o.c_.size() - 1, zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return UPoly(std::move(r), zero_);
  }
  UPoly scaled(const K& s) const {
    std::vector<K> r = c_;
    for (auto& v : r) v = v * s;
    return UPoly(std::move(r), zero_);
  }
  UPoly monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inverse());
  }

  /// Euclidean division over the field: *this = q*d + r with deg r < deg d.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("univariate division by zero polynomial");
    std::vector<K> r = c_;
    int dd = d.degree();
    if (degree() < dd) return {UPoly(zero_), *this};
    std::vector<K> q(static_cast<std::size_t>(degree() - dd + 1), zero_);
    K inv = d.lead().inverse();
    for (int k = degree(); k >= dd; --k) {
      const K& top = r[static_cast<std::size_t>(k)];
      if (top.is_zero()) continue;
      K f = top * inv;
      for (int j = 0; j <= dd; ++j) {
        auto idx = static_cast<std::size_t>(k - dd + j);
        r[idx] = r[idx] - f * d.c_[static_cast<std::size_t>(j)];
      }
      q[static_cast<std::size_t>(k - dd)] = std::move(f);
    }
    r.resize(static_cast<std::size_t>(dd));
    return {UPoly(std::move(q), zero_), UPoly(std::move(r), zero_)};
  }

  bool operator==(const UPoly& o) const { return c_ == o.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<K> c_;
  K zero_;
};

/// Monic gcd (zero if both inputs are zero).
template <class K>
UPoly<K> upoly_gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Returns (g, s) with g = gcd(a, m) monic and s*a = g (mod m).
template <class K>
std::pair<UPoly<K>, UPoly<K>> upoly_half_ext_gcd(const UPoly<K>& a, const UPoly<K>& m) {
  const K& z = a.zero();
  UPoly<K> r0 = m, r1 = a;
  UPoly<K> s0(z), s1(std::vector<K>{one_like(z)}, z);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    UPoly<K> s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.is_zero()) return {r0, s0};
  K inv = r0.lead().inverse();
  return {r0.scaled(inv), s0.scaled(inv)};
}

}  // namespace polymap
