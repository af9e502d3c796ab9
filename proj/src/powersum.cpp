#include "cox/powersum.hpp"

#include <algorithm>

#include "cox/error.hpp"
#include "cox/todd.hpp"

namespace cox {

namespace {

Rational R(std::int64_t v) { return Rational(static_cast<long>(v)); }

void require_nonnegative(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "power must be nonnegative");
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Direct: return "direct";
    case Method::Todd: return "todd";
    case Method::Closed: return "closed";
  }
  return "?";
}

Rational powersum_direct(const ExponentList& e, int n) {
  require_nonnegative(n);
  BigInt total;
  for (auto m : e) {
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n));
    total += term;
  }
  return Rational(total);
}

PowerSumResult powersum_direct(const CoxeterType& t, int n) {
  return {normalize(t), n, powersum_direct(exponents(t), n), Method::Direct};
}

std::vector<Rational> powersums_todd(const ParameterSet& params, int n_max, int p) {
  require_nonnegative(n_max);
  const auto order = static_cast<std::size_t>(std::max(n_max, 2));
  ToddValues td = todd_values(gamma_series(params, p, order), static_cast<std::size_t>(n_max));
  std::vector<Rational> out(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n)
    out[static_cast<std::size_t>(n)] =
        Rational(factorial(static_cast<unsigned long>(n))) * R(params.r) * td[static_cast<std::size_t>(n)];
  return out;
}

Rational powersum_todd(const ParameterSet& params, int n, int p) {
  return powersums_todd(params, n, p).back();
}

PowerSumResult powersum_todd(const CoxeterType& t, int n, int p) {
  return {normalize(t), n, powersum_todd(parameters(t), n, p), Method::Todd};
}

Rational r45(const ParameterSet& params) {
  const Rational h = R(params.h), g = R(params.gamma);
  const Rational& a = params.alpha;
  const Rational& b = params.beta;
  return (h * h - g - h + 2) * ((h - 2 + a + b) * (a + b) - a * b) + (h - 2) * (h - 2 + a + b) * a * b;
}

Rational powersum_closed(const ParameterSet& params, int n) {
  const Rational r = R(params.r), h = R(params.h), g = R(params.gamma);
  switch (n) {
    case 0: return r;
    case 1: return r * h / 2;
    case 2: return r * (h * h + g - h) / 6;
    case 3: return r * h * (g - h) / 4;
    case 4:
      return r / 30 *
             (-h.pow(4) + 5 * h * h * g + 2 * g * g - 7 * h.pow(3) - 2 * h * g + 4 * h * h - 2 * g - 2 * h + 2 +
              r45(params));
    case 5:
      return r / 12 * h *
             (2 * g * g - 2 * h.pow(3) - 2 * h * g + 4 * h * h - 2 * g - 2 * h + 2 + r45(params));
    default:
      throw Error(ErrorCode::UnsupportedDegree, "closed power sums exist for 0 <= n <= 5");
  }
}

PowerSumResult powersum_closed(const CoxeterType& t, int n) {
  return {normalize(t), n, powersum_closed(parameters(t), n), Method::Closed};
}

Rational heightsum_direct(const ExponentList& e, int n) {
  require_nonnegative(n);
  Rational by_exponent;
  for (auto m : e) by_exponent += faulhaber(n, m);

  Rational by_height;
  const DualPartition k = dual_partition(e);
  for (std::size_t j = 0; j < k.size(); ++j) {
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), j + 1, static_cast<unsigned long>(n));
    by_height += R(k[j]) * Rational(pw);
  }
  if (by_exponent != by_height)
    throw Error(ErrorCode::InternalMismatch, "Faulhaber route gives " + by_exponent.to_string() +
                                                 ", dual partition gives " + by_height.to_string());
  return by_exponent;
}

PowerSumResult heightsum_direct(const CoxeterType& t, int n) {
  return {normalize(t), n, heightsum_direct(exponents(t), n), Method::Direct};
}

Rational heightsum_todd(const ParameterSet& params, int n, int p) {
  require_nonnegative(n);
  // sum_i F_n(m_i) = sum_k [x^k]F_n * S_k
  std::vector<Rational> f = faulhaber_polynomial(n);
  std::vector<Rational> s = powersums_todd(params, static_cast<int>(f.size()) - 1, p);
  Rational total;
  for (std::size_t k = 0; k < f.size(); ++k) total += f[k] * s[k];
  return total;
}

PowerSumResult heightsum_todd(const CoxeterType& t, int n, int p) {
  return {normalize(t), n, heightsum_todd(parameters(t), n, p), Method::Todd};
}

Rational heightsum_closed(const ParameterSet& params, int n) {
  const Rational r = R(params.r), h = R(params.h), g = R(params.gamma);
  switch (n) {
    case 0: return r * h / 2;
    case 1: return r * (h * h + g + 2 * h) / 12;
    case 2: return r * (h + 1) * g / 12;
    case 3:
      return r / 120 *
             (-h.pow(4) + 5 * h * h * g + 2 * g * g - 7 * h.pow(3) + 13 * h * g - 6 * h * h + 3 * g - 7 * h + 2 +
              r45(params));
    case 4:
      return r / 60 * (h + 1) * (2 * g * g - 3 * h.pow(3) + 3 * h * g - 2 * g - 3 * h + 2 + r45(params));
    default:
      throw Error(ErrorCode::UnsupportedDegree, "closed height sums exist for 0 <= n <= 4");
  }
}

PowerSumResult heightsum_closed(const CoxeterType& t, int n) {
  return {normalize(t), n, heightsum_closed(parameters(t), n), Method::Closed};
}

}  // namespace cox
