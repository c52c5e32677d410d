#pragma once

#include <random>
#include <vector>

#include "polycf/cf.hpp"

namespace polycf::testing {

inline Rational q(const char* text) {
  Rational r(text);
  r.canonicalize();
  return r;
}

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Nonzero rational with numerator and denominator bounded by `bound`.
inline Rational random_nonzero(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(1, bound), den(1, bound), sign(0, 1);
  return q(sign(rng) ? num(rng) : -num(rng), den(rng));
}

inline Rational random_positive(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(1, bound), den(1, bound);
  return q(num(rng), den(rng));
}

/// b0 = 2; a_n = n, b_n = n from n = 2 onwards.
inline CFSpec e_cf() {
  return CFSpec{Rational(2), {},
                Tail{RationalFunction::variable(), RationalFunction::variable(), 2}};
}

/// 1 + K (2n-1)^2 / 2.
inline CFSpec brouncker_cf() {
  RationalFunction t = RationalFunction(IntPolynomial{-1, 2});
  return CFSpec{Rational(1), {}, Tail{t * t, RationalFunction::constant(2), 1}};
}

inline CFSpec random_prefix_cf(std::mt19937_64& rng, long length, bool positive) {
  CFSpec cf;
  cf.b0 = positive ? random_positive(rng, 9) : random_nonzero(rng, 9);
  for (long i = 0; i < length; ++i) {
    if (positive) cf.prefix.push_back({random_positive(rng, 9), random_positive(rng, 9)});
    else cf.prefix.push_back({random_nonzero(rng, 9), random_nonzero(rng, 9)});
  }
  return cf;
}

}  // namespace polycf::testing
