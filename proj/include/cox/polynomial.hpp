#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cox/rational.hpp"

namespace cox {

/// Polynomial in q with integer coefficients, index = power of q.
/// Canonical: no trailing zero coefficient; zero is the empty list.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial monomial(const BigInt& c, std::size_t k);
  /// 1 - q^v.
  static IntPolynomial one_minus_q_pow(std::size_t v);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  std::span<const BigInt> coefficients() const { return coeffs_; }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  /// Human-readable form, e.g. "q + 3q^3 + q^5".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Long division by a divisor with leading coefficient +-1.
/// Returns {quotient, remainder}.
std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& num, const IntPolynomial& den);

/// q^shift * prod_{v in plus} (1 - q^v) / prod_{v in minus} (1 - q^v), which
/// must be a polynomial. Throws NotAPolynomial on a nonzero remainder.
IntPolynomial poly_from_factors(std::size_t shift, std::span<const std::int64_t> plus,
                                std::span<const std::int64_t> minus);

/// sum_i q^{e_i}.
IntPolynomial poly_from_exponents(std::span<const std::int64_t> exponents);

}  // namespace cox
