#pragma once

#include <random>
#include <vector>

#include "cox/series.hpp"

namespace cox::testing {

inline Rational frac(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

inline Rational random_rational(std::mt19937_64& rng, long bound = 20) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return frac(num(rng), den(rng));
}

/// Random series of the given order with a fixed constant term.
inline TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order, const Rational& constant) {
  std::vector<Rational> c(order + 1);
  c[0] = constant;
  for (std::size_t k = 1; k <= order; ++k) c[k] = random_rational(rng);
  return TruncatedSeries(std::move(c));
}

inline TruncatedSeries ints(std::initializer_list<long> v) {
  std::vector<Rational> c;
  for (long x : v) c.emplace_back(x);
  return TruncatedSeries(std::move(c));
}

}  // namespace cox::testing
