#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace polymap {

/// Upper bound on the number of variables of any ring.
inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector. Unused trailing slots stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  unsigned degree() const noexcept {
    unsigned d = 0;
    for (auto v : e) d += v;
    return d;
  }
  bool is_one() const noexcept {
    return std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
  }
  bool divides(const Monomial& o) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (e[i] > o.e[i]) return false;
    }
    return true;
  }
  /// Bit i set when variable i occurs. Cheap divisibility pre-check.
  std::uint32_t support() const noexcept {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (e[i] != 0) s |= 1u << i;
    }
    return s;
  }
  bool coprime(const Monomial& o) const noexcept { return (support() & o.support()) == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    return r;
  }
  /// b / a, requires a | b.
  static Monomial quotient(const Monomial& b, const Monomial& a) noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }
  static Monomial var(std::size_t i, unsigned power = 1) {
    Monomial r;
    r.e[i] = static_cast<std::uint16_t>(power);
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : m.e) h = (h ^ v) * 1099511628211ULL;
    return h;
  }
};

/// A monomial order on a fixed number of variables.
///  - lex, degrevlex: the usual global orders (degrevlex may carry weights)
///  - block(k): degrevlex on the first k variables, ties broken by degrevlex
///    on the rest; an elimination order for the first k variables
///  - local: anti-graded reverse lex (lower degree is larger), for Mora
class MonomialOrder {
 public:
  enum class Kind { Lex, DegRevLex, Block, Local };

  static MonomialOrder lex(std::size_t nvars) { return MonomialOrder(Kind::Lex, nvars, 0, {}); }
  static MonomialOrder degrevlex(std::size_t nvars, std::vector<unsigned> weights = {}) {
    return MonomialOrder(Kind::DegRevLex, nvars, 0, std::move(weights));
  }
  static MonomialOrder block(std::size_t nvars, std::size_t front, std::vector<unsigned> weights = {}) {
    return MonomialOrder(Kind::Block, nvars, front, std::move(weights));
  }
  static MonomialOrder local(std::size_t nvars) { return MonomialOrder(Kind::Local, nvars, 0, {}); }

  Kind kind() const noexcept { return kind_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t front() const noexcept { return front_; }
  bool is_global() const noexcept { return kind_ != Kind::Local; }
  const std::vector<unsigned>& weights() const noexcept { return weights_; }

  /// Weighted total degree.
  unsigned weighted_degree(const Monomial& m) const noexcept {
    unsigned d = 0;
    for (std::size_t i = 0; i < nvars_; ++i) d += weights_[i] * m.e[i];
    return d;
  }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept {
    switch (kind_) {
      case Kind::Lex:
        for (std::size_t i = 0; i < nvars_; ++i) {
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        }
        return 0;
      case Kind::DegRevLex:
        return grevlex_range(a, b, 0, nvars_);
      case Kind::Block: {
        int c = grevlex_range(a, b, 0, front_);
        return c != 0 ? c : grevlex_range(a, b, front_, nvars_);
      }
      case Kind::Local: {
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da < db ? 1 : -1;
        for (std::size_t i = nvars_; i-- > 0;) {
          if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        }
        return 0;
      }
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

 private:
  MonomialOrder(Kind k, std::size_t nvars, std::size_t front, std::vector<unsigned> weights)
      : kind_(k), nvars_(nvars), front_(front), weights_(std::move(weights)) {
    if (weights_.empty()) weights_.assign(nvars_, 1);
  }

  int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const noexcept {
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += weights_[i] * a.e[i];
      db += weights_[i] * b.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  }

  Kind kind_;
  std::size_t nvars_;
  std::size_t front_;
  std::vector<unsigned> weights_;
};

}  // namespace polymap
