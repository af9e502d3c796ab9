#include "cox/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "cox/error.hpp"

namespace cox {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::one_minus_q_pow(std::size_t v) {
  if (v == 0) return IntPolynomial();
  std::vector<BigInt> c(v + 1);
  c[0] = 1;
  c[v] = -1;
  return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) + b.coefficient(k);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) - b.coefficient(k);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << 'q';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const BigInt lead = den.coefficients().back();
  if (lead != 1 && lead != -1)
    throw Error(ErrorCode::InvalidArgument, "divisor must be monic up to sign");
  std::vector<BigInt> rem(num.coefficients().begin(), num.coefficients().end());
  const long dd = den.degree();
  const long nd = num.degree();
  if (nd < dd) return {IntPolynomial(), num};
  std::vector<BigInt> quot(static_cast<std::size_t>(nd - dd + 1));
  for (long k = nd; k >= dd; --k) {
    BigInt c = rem[static_cast<std::size_t>(k)] * lead;  // lead is its own inverse
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = c;
    for (long j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] -= c * den.coefficients()[static_cast<std::size_t>(j)];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial poly_from_factors(std::size_t shift, std::span<const std::int64_t> plus,
                                std::span<const std::int64_t> minus) {
  IntPolynomial numerator = IntPolynomial::monomial(1, shift);
  IntPolynomial denominator = IntPolynomial::monomial(1, 0);
  for (auto v : plus) {
    if (v <= 0) throw Error(ErrorCode::InvalidArgument, "factor exponents must be positive");
    numerator = numerator * IntPolynomial::one_minus_q_pow(static_cast<std::size_t>(v));
  }
  for (auto v : minus) {
    if (v <= 0) throw Error(ErrorCode::InvalidArgument, "factor exponents must be positive");
    denominator = denominator * IntPolynomial::one_minus_q_pow(static_cast<std::size_t>(v));
  }
  auto [q, r] = divmod(numerator, denominator);
  if (!r.is_zero())
    throw Error(ErrorCode::NotAPolynomial,
                "(" + numerator.to_string() + ") / (" + denominator.to_string() +
                    ") leaves remainder " + r.to_string());
  return q;
}

IntPolynomial poly_from_exponents(std::span<const std::int64_t> exponents) {
  std::vector<BigInt> c;
  for (auto e : exponents) {
    if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    auto k = static_cast<std::size_t>(e);
    if (c.size() <= k) c.resize(k + 1);
    c[k] += 1;
  }
  return IntPolynomial(std::move(c));
}

}  // namespace cox
