#pragma once

#include <random>

#include "stab/ratfunc.hpp"

namespace gen {

using stab::Poly;
using stab::Rat;
using stab::RatFunc;

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20240611);
  return r;
}

inline long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rat rational(long bound = 5) {
  long den = integer(1, 3);
  return Rat(integer(-bound, bound)) / den;
}

inline Rat nonzero_rational(long bound = 5) {
  for (;;) {
    Rat r = rational(bound);
    if (sgn(r) != 0) return r;
  }
}

/// Degree exactly deg (deg >= 0).
inline Poly poly(int deg, long bound = 5) {
  std::vector<Rat> c;
  for (int i = 0; i < deg; ++i) c.push_back(rational(bound));
  c.push_back(nonzero_rational(bound));
  return Poly(std::move(c));
}

inline Poly poly_upto(int max_deg, long bound = 5) { return poly(static_cast<int>(integer(0, max_deg)), bound); }

inline RatFunc ratfunc(int max_num, int max_den) {
  return RatFunc(poly_upto(max_num), poly_upto(max_den));
}

inline RatFunc nonzero_ratfunc(int max_num, int max_den) {
  for (;;) {
    RatFunc f = ratfunc(max_num, max_den);
    if (!f.is_zero()) return f;
  }
}

/// Small irreducible polynomials over Q.
inline Poly irreducible() {
  static const std::vector<Poly> pool = {
      Poly{0, 1}, Poly{-1, 1}, Poly{2, 1}, Poly{1, 0, 1}, Poly{-2, 0, 1}, Poly{1, 1, 1}, Poly{-2, 0, 0, 1},
  };
  return pool[static_cast<std::size_t>(integer(0, static_cast<long>(pool.size()) - 1))];
}

}  // namespace gen
