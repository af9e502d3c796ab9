#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cox/rational.hpp"

namespace cox {

/// Prefix t^0..t^N of a formal power series with rational coefficients.
///
/// The truncation order N is part of the value. Binary operations produce a
/// result of order min(N_a, N_b); nothing beyond the shorter operand is ever
/// claimed.
class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order);
  /// Order is coeffs.size() - 1; an empty vector is rejected.
  explicit TruncatedSeries(std::vector<Rational> coeffs);
  TruncatedSeries(std::initializer_list<Rational> coeffs)
      : TruncatedSeries(std::vector<Rational>(coeffs)) {}

  static TruncatedSeries constant(const Rational& c, std::size_t order);
  /// c * t^k, zero when k exceeds the order.
  static TruncatedSeries monomial(const Rational& c, std::size_t k, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries truncate(const TruncatedSeries& a, std::size_t order);

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& c);
/// Cauchy product truncated to the shorter order.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// f(t) -> f(c t).
TruncatedSeries series_dilate(const TruncatedSeries& a, const Rational& c);

/// Multiplicative inverse, a0^{-1} exp(-log(a/a0)). Throws ZeroConstantTerm.
TruncatedSeries series_inv(const TruncatedSeries& a);
/// Formal logarithm of a series with constant term 1.
TruncatedSeries series_log(const TruncatedSeries& a);
/// Formal exponential of a series with constant term 0.
TruncatedSeries series_exp(const TruncatedSeries& a);
/// exp(exponent * log(a)); for exponent 1/p this is the p-th root with
/// constant term 1.
TruncatedSeries series_pow(const TruncatedSeries& a, const Rational& exponent);

}  // namespace cox
