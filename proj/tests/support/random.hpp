#pragma once

// Seeded generators for the property suites.

#include "tropohull/rational.hpp"
#include "tropohull/tropical.hpp"

#include <random>
#include <vector>

namespace gen {

using tropohull::Rational;
using tropohull::TropicalPoint;

// Rationals num/den with |num| <= span * den and den in 1..max_den.
inline Rational rational(std::mt19937_64& rng, long span = 6, long max_den = 3) {
  std::uniform_int_distribution<long> den(1, max_den);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(-span * d, span * d);
  Rational q(num(rng), d);
  q.canonicalize();
  return q;
}

inline long integer(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline TropicalPoint point(std::mt19937_64& rng, std::size_t d, long span = 6, long max_den = 3) {
  std::vector<Rational> c(d);
  for (auto& x : c) x = rational(rng, span, max_den);
  return TropicalPoint(c);
}

inline std::vector<TropicalPoint> points(std::mt19937_64& rng, std::size_t n, std::size_t d, long span = 6,
                                         long max_den = 3) {
  std::vector<TropicalPoint> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(point(rng, d, span, max_den));
  return out;
}

inline std::vector<std::vector<Rational>> matrix(std::mt19937_64& rng, std::size_t n, long span = 4, long max_den = 1) {
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (auto& row : m)
    for (auto& x : row) x = rational(rng, span, max_den);
  return m;
}

}  // namespace gen
