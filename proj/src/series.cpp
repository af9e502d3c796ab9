#include "cox/series.hpp"

#include <algorithm>
#include <sstream>

#include "cox/error.hpp"

namespace cox {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw Error(ErrorCode::InvalidArgument, "a truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
  std::vector<Rational> v(order + 1);
  v[0] = c;
  return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, std::size_t k, std::size_t order) {
  std::vector<Rational> v(order + 1);
  if (k <= order) v[k] = c;
  return TruncatedSeries(std::move(v));
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) os << ", ";
    os << coeffs_[k];
  }
  os << ']';
  return os.str();
}

TruncatedSeries truncate(const TruncatedSeries& a, std::size_t order) {
  auto c = a.coefficients();
  std::size_t n = std::min(order, a.order());
  return TruncatedSeries(std::vector<Rational>(c.begin(), c.begin() + static_cast<long>(n) + 1));
}

namespace {

template <class Op>
TruncatedSeries zip(const TruncatedSeries& a, const TruncatedSeries& b, Op op) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = op(a[k], b[k]);
  return TruncatedSeries(std::move(out));
}

}  // namespace

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return x - y; });
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& c) {
  std::vector<Rational> out(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : out) x *= c;
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_dilate(const TruncatedSeries& a, const Rational& c) {
  std::vector<Rational> out(a.order() + 1);
  Rational power(1);
  for (std::size_t k = 0; k <= a.order(); ++k) {
    out[k] = a[k] * power;
    power *= c;
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_log(const TruncatedSeries& a) {
  if (a[0] != Rational(1))
    throw Error(ErrorCode::ConstantTermNotOne, "log needs constant term 1, got " + a[0].to_string());
  // a' = L' a, so n a_n = sum_{k=1}^{n} k L_k a_{n-k}.
  std::size_t n = a.order();
  std::vector<Rational> log(n + 1);
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc = Rational(static_cast<long>(m)) * a[m];
    for (std::size_t k = 1; k < m; ++k) {
      if (log[k].is_zero() || a[m - k].is_zero()) continue;
      acc -= Rational(static_cast<long>(k)) * log[k] * a[m - k];
    }
    log[m] = acc / Rational(static_cast<long>(m));
  }
  return TruncatedSeries(std::move(log));
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
  if (!a[0].is_zero())
    throw Error(ErrorCode::NonzeroConstantTerm, "exp needs constant term 0, got " + a[0].to_string());
  // E' = a' E, so m E_m = sum_{k=1}^{m} k a_k E_{m-k}.
  std::size_t n = a.order();
  std::vector<Rational> e(n + 1);
  e[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc;
    for (std::size_t k = 1; k <= m; ++k) {
      if (a[k].is_zero() || e[m - k].is_zero()) continue;
      acc += Rational(static_cast<long>(k)) * a[k] * e[m - k];
    }
    e[m] = acc / Rational(static_cast<long>(m));
  }
  return TruncatedSeries(std::move(e));
}

TruncatedSeries series_inv(const TruncatedSeries& a) {
  if (a[0].is_zero()) throw Error(ErrorCode::ZeroConstantTerm, "inverse needs a nonzero constant term");
  Rational c = Rational(1) / a[0];
  return series_scale(series_exp(series_scale(series_log(series_scale(a, c)), -1)), c);
}

TruncatedSeries series_pow(const TruncatedSeries& a, const Rational& exponent) {
  if (a[0] != Rational(1))
    throw Error(ErrorCode::ConstantTermNotOne, "rational power needs constant term 1, got " + a[0].to_string());
  return series_exp(series_scale(series_log(a), exponent));
}

}  // namespace cox
