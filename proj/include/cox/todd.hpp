#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cox/catalog.hpp"
#include "cox/series.hpp"

namespace cox {

/// gamma_0 = 1, gamma_1, gamma_2, ... together with the p used for the
/// root factor.
struct GammaSeries {
  TruncatedSeries series;
  int p = 1;
};

/// Td_0, Td_1(c_1), Td_2(c_1, c_2), ...
struct ToddValues {
  std::vector<Rational> values;
  const Rational& operator[](std::size_t n) const { return values.at(n); }
};

/// ((1 + p t) / (1 - p t))^{1/p}.
TruncatedSeries p_factor(int p, std::size_t order);

struct PiMu {
  Rational pi;
  Rational mu;
};

/// prod_k ((1 + pi_k t) / (1 - pi_k t))^{mu_k}; requires sum pi_k mu_k = m1
/// (ConstraintViolated otherwise).
TruncatedSeries p_factor_general(std::span<const PiMu> pairs, int m1, std::size_t order);

/// (1 - alpha t)(1 - beta t) / ((1 - A t)(1 - B t)) times p_factor(p).
GammaSeries gamma_series(const ParameterSet& params, int p, std::size_t order);

/// Same series, assembled as (1 - (alpha+beta) t + alpha beta t^2) X(t) p(t)
/// where X_n comes from the two-term recursion in (h, gamma, alpha, beta).
GammaSeries gamma_series_xn(const ParameterSet& params, int p, std::size_t order);

/// X_0 .. X_{n_max}: X_0 = 1, X_1 = h - 2 + alpha + beta,
/// X_n = (A+B) X_{n-1} - AB X_{n-2} with A+B and AB written in
/// (h, gamma, alpha, beta).
std::vector<Rational> x_sequence(const ParameterSet& params, std::size_t n_max);

// Sign convention: the single-variable Todd factor is x t / (1 - e^{-x t}),
// whose Bernoulli expansion has B_1 = +1/2. The Bernoulli polynomials below
// use the other convention, t e^{tx} / (e^t - 1), which has B_1 = -1/2.

/// lambda_k = [t^k] log(t / (1 - e^{-t})) for k = 0..order (lambda_0 = 0).
std::vector<Rational> todd_log_coefficients(std::size_t order);

/// Td_n(gamma_1..gamma_n) for n = 0..n_max, computed as
/// exp(sum_k lambda_k P_k t^k) where P_k are power sums of the virtual roots
/// recovered from gamma through Newton's identities.
ToddValues todd_values(const GammaSeries& g, std::size_t n_max);

/// Same computation on a raw coefficient series with gamma_0 = 1 and an
/// explicit lambda table (length > n_max). Exposed for fault injection.
ToddValues todd_values(const TruncatedSeries& gamma, std::size_t n_max, std::span<const Rational> lambda);

/// Printed closed forms of Td_0..Td_5; c[0] is c_1. UnsupportedDegree for n > 5.
Rational todd_closed(int n, std::span<const Rational> c);

/// Coefficients of B_n(x), index = power of x.
std::vector<Rational> bernoulli_polynomial(int n);

/// Coefficients of x -> 1^n + 2^n + ... + x^n as a polynomial in x.
std::vector<Rational> faulhaber_polynomial(int n);

/// sum_{i=1}^{r} i^n through the Bernoulli polynomial B_{n+1}.
Rational faulhaber(int n, std::int64_t r);

/// Horner evaluation of a coefficient list.
Rational evaluate(std::span<const Rational> coeffs, const Rational& x);

}  // namespace cox
