#include "cox/todd.hpp"

#include "cox/error.hpp"

namespace cox {

namespace {

void require_order(std::size_t order) {
  if (order < 2) throw Error(ErrorCode::InvalidArgument, "gamma series needs order >= 2");
}

Rational R(std::int64_t v) { return Rational(static_cast<long>(v)); }

/// (1 + c t) / (1 - c t)
TruncatedSeries cayley(const Rational& c, std::size_t order) {
  std::vector<Rational> v(order + 1);
  v[0] = 1;
  Rational power(1);
  for (std::size_t k = 1; k <= order; ++k) {
    power *= c;
    v[k] = Rational(2) * power;
  }
  return TruncatedSeries(std::move(v));
}

TruncatedSeries linear(const Rational& c0, const Rational& c1, std::size_t order) {
  std::vector<Rational> v(order + 1);
  v[0] = c0;
  if (order >= 1) v[1] = c1;
  return TruncatedSeries(std::move(v));
}

}  // namespace

TruncatedSeries p_factor(int p, std::size_t order) {
  if (p < 1) throw Error(ErrorCode::InvalidArgument, "p must be a positive integer");
  return series_pow(cayley(Rational(p), order), Rational(BigInt(1), BigInt(p)));
}

TruncatedSeries p_factor_general(std::span<const PiMu> pairs, int m1, std::size_t order) {
  Rational total;
  for (const auto& [pi, mu] : pairs) total += pi * mu;
  if (total != Rational(m1))
    throw Error(ErrorCode::ConstraintViolated,
                "sum pi_k mu_k = " + total.to_string() + " but m1 = " + std::to_string(m1));
  TruncatedSeries out = TruncatedSeries::constant(1, order);
  for (const auto& [pi, mu] : pairs) out = series_mul(out, series_pow(cayley(pi, order), mu));
  return out;
}

GammaSeries gamma_series(const ParameterSet& params, int p, std::size_t order) {
  require_order(order);
  TruncatedSeries num = series_mul(linear(1, -params.alpha, order), linear(1, -params.beta, order));
  TruncatedSeries den = series_mul(linear(1, -params.A, order), linear(1, -params.B, order));
  TruncatedSeries s = series_mul(series_mul(num, series_inv(den)), p_factor(p, order));
  return {std::move(s), p};
}

std::vector<Rational> x_sequence(const ParameterSet& params, std::size_t n_max) {
  const Rational h = R(params.h);
  const Rational g = R(params.gamma);
  const Rational sum_ab = params.alpha + params.beta;
  const Rational sum_AB = h - 2 + sum_ab;
  const Rational prod_AB = h * h - g + (h - 2) * (sum_ab - 1) + params.alpha * params.beta;
  std::vector<Rational> x(n_max + 1);
  x[0] = 1;
  if (n_max >= 1) x[1] = sum_AB;
  for (std::size_t n = 2; n <= n_max; ++n) x[n] = sum_AB * x[n - 1] - prod_AB * x[n - 2];
  return x;
}

GammaSeries gamma_series_xn(const ParameterSet& params, int p, std::size_t order) {
  require_order(order);
  std::vector<Rational> quad(order + 1);
  quad[0] = 1;
  quad[1] = -(params.alpha + params.beta);
  quad[2] = params.alpha * params.beta;
  TruncatedSeries xs(x_sequence(params, order));
  TruncatedSeries s = series_mul(series_mul(TruncatedSeries(std::move(quad)), xs), p_factor(p, order));
  return {std::move(s), p};
}

std::vector<Rational> todd_log_coefficients(std::size_t order) {
  // (1 - e^{-t}) / t = sum_n (-1)^n t^n / (n+1)!
  std::vector<Rational> v(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Rational term(BigInt(1), factorial(n + 1));
    v[n] = (n % 2) ? -term : term;
  }
  TruncatedSeries lambda = series_scale(series_log(TruncatedSeries(std::move(v))), -1);
  return {lambda.coefficients().begin(), lambda.coefficients().end()};
}

ToddValues todd_values(const TruncatedSeries& gamma, std::size_t n_max, std::span<const Rational> lambda) {
  if (n_max > gamma.order())
    throw Error(ErrorCode::InvalidArgument, "n_max exceeds the order of the gamma series");
  if (lambda.size() <= n_max) throw Error(ErrorCode::InvalidArgument, "lambda table too short");
  // log prod (1 + x_j t) = sum_k (-1)^{k-1} P_k t^k / k
  TruncatedSeries log_gamma = series_log(truncate(gamma, n_max));
  std::vector<Rational> exponent(n_max + 1);
  for (std::size_t k = 1; k <= n_max; ++k) {
    Rational power_sum = Rational(static_cast<long>(k)) * log_gamma[k];
    if (k % 2 == 0) power_sum = -power_sum;
    exponent[k] = lambda[k] * power_sum;
  }
  TruncatedSeries td = series_exp(TruncatedSeries(std::move(exponent)));
  return {{td.coefficients().begin(), td.coefficients().end()}};
}

ToddValues todd_values(const GammaSeries& g, std::size_t n_max) {
  return todd_values(g.series, n_max, todd_log_coefficients(n_max));
}

Rational todd_closed(int n, std::span<const Rational> c) {
  if (n < 0 || n > 5) throw Error(ErrorCode::UnsupportedDegree, "closed Todd forms exist for n <= 5 only");
  if (c.size() < static_cast<std::size_t>(n))
    throw Error(ErrorCode::InvalidArgument, "need at least n arguments");
  auto at = [&](std::size_t i) { return i <= c.size() ? c[i - 1] : Rational(); };
  switch (n) {
    case 0: return 1;
    case 1: return at(1) / 2;
    case 2: return (at(1) * at(1) + at(2)) / 12;
    case 3: return at(1) * at(2) / 24;
    case 4: {
      const Rational c1 = at(1), c2 = at(2), c3 = at(3), c4 = at(4);
      return (-c1.pow(4) + 4 * c1 * c1 * c2 + c1 * c3 + 3 * c2 * c2 - c4) / 720;
    }
    default: {
      const Rational c1 = at(1), c2 = at(2), c3 = at(3), c4 = at(4);
      return (-c1.pow(3) * c2 + 3 * c1 * c2 * c2 + c1 * c1 * c3 - c1 * c4) / 1440;
    }
  }
}

std::vector<Rational> bernoulli_polynomial(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "Bernoulli index must be nonnegative");
  const auto order = static_cast<std::size_t>(n);
  // t / (e^t - 1) = 1 / sum_k t^k / (k+1)!
  std::vector<Rational> v(order + 1);
  for (std::size_t k = 0; k <= order; ++k) v[k] = Rational(BigInt(1), factorial(k + 1));
  TruncatedSeries gen = series_inv(TruncatedSeries(std::move(v)));
  std::vector<Rational> coeffs(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    Rational bk = gen[k] * Rational(factorial(k));
    coeffs[order - k] = Rational(binomial(n, static_cast<long>(k))) * bk;
  }
  return coeffs;
}

Rational evaluate(std::span<const Rational> coeffs, const Rational& x) {
  Rational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Rational> faulhaber_polynomial(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "Faulhaber power must be nonnegative");
  // (B_{n+1}(x+1) - B_{n+1}(1)) / (n+1), expanded in powers of x.
  std::vector<Rational> b = bernoulli_polynomial(n + 1);
  std::vector<Rational> shifted(b.size());
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t i = 0; i <= j; ++i)
      shifted[i] += b[j] * Rational(binomial(static_cast<long>(j), static_cast<long>(i)));
  shifted[0] -= evaluate(b, 1);
  for (auto& s : shifted) s /= Rational(n + 1);
  return shifted;
}

Rational faulhaber(int n, std::int64_t r) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "Faulhaber upper limit must be nonnegative");
  std::vector<Rational> b = bernoulli_polynomial(n + 1);
  return (evaluate(b, R(r + 1)) - evaluate(b, 1)) / Rational(n + 1);
}

}  // namespace cox
