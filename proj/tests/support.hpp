#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polymap/maps.hpp"
#include "polymap/multipoly.hpp"
#include "polymap/parser.hpp"

namespace polymap::testing {

inline MultiPoly P(const std::string& text, unsigned conductor = 0) {
  return parse_poly(text, std::vector<std::string>{"x", "y"}, conductor);
}

inline MultiPoly P(const std::string& text, const RingRef& ring) { return parse_poly(text, ring); }

inline RingRef xy(unsigned conductor = 1) { return Ring::make({"x", "y"}, conductor); }

inline Rational small_rational(std::mt19937_64& rng, int height = 5, bool nonzero = false) {
  std::uniform_int_distribution<long> num(-height, height), den(1, 3);
  for (;;) {
    Rational q(num(rng), den(rng));
    if (!nonzero || !q.is_zero()) return q;
  }
}

/// Random polynomial in the ring's first two variables, total degree <= deg.
inline MultiPoly random_poly(std::mt19937_64& rng, const RingRef& ring, unsigned deg, double density = 0.5) {
  std::bernoulli_distribution keep(density);
  MultiPoly p(ring);
  for (unsigned i = 0; i <= deg; ++i) {
    for (unsigned j = 0; i + j <= deg; ++j) {
      if (!keep(rng)) continue;
      Monomial m;
      m.e[0] = static_cast<std::uint16_t>(i);
      m.e[1] = static_cast<std::uint16_t>(j);
      p += MultiPoly::monomial(ring, m, CycloNumber(small_rational(rng), ring->conductor()));
    }
  }
  return p;
}

/// Random polynomial in x alone of degree <= deg.
inline MultiPoly random_poly_in_x(std::mt19937_64& rng, const RingRef& ring, unsigned deg) {
  MultiPoly p(ring);
  const MultiPoly x = MultiPoly::variable(ring, 0);
  for (unsigned j = 0; j <= deg; ++j) p += x.pow(j) * small_rational(rng);
  return p;
}

/// Random polynomial in y alone of degree <= deg.
inline MultiPoly random_poly_in_y(std::mt19937_64& rng, const RingRef& ring, unsigned deg) {
  MultiPoly p(ring);
  const MultiPoly y = MultiPoly::variable(ring, 1);
  for (unsigned j = 0; j <= deg; ++j) p += y.pow(j) * small_rational(rng);
  return p;
}

/// Random affine automorphism, or (when allowed) a triangular one
/// (a x + p(y), b y + c) with a small integral shift p of degree <= 2.
inline PlaneAutomorphism random_automorphism(std::mt19937_64& rng, const RingRef& ring, bool allow_triangular = true) {
  const unsigned n = ring->conductor();
  auto c = [&](bool nonzero) { return CycloNumber(small_rational(rng, 3, nonzero), n); };
  if (!allow_triangular || std::bernoulli_distribution(0.5)(rng)) {
    for (;;) {
      CycloNumber a = c(false), b = c(false), cc = c(false), d = c(false);
      if ((a * d - b * cc).is_zero()) continue;
      return PlaneAutomorphism::affine(ring, a, b, cc, d, c(false), c(false));
    }
  }
  std::uniform_int_distribution<long> small(-2, 2);
  const MultiPoly y = MultiPoly::variable(ring, 1);
  long lead = small(rng);
  MultiPoly p = y * y * Rational(lead == 0 ? 1 : lead) + y * Rational(small(rng));
  return PlaneAutomorphism::triangular(c(true), p, c(true), c(false));
}

}  // namespace polymap::testing
