#include "cox/rational.hpp"

#include "cox/error.hpp"

namespace cox {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::NotAPolynomial: return "NotAPolynomial";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::ProfileMismatch: return "ProfileMismatch";
    case ErrorCode::BetaNotFree: return "BetaNotFree";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
    case ErrorCode::WrongFamily: return "WrongFamily";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error(ErrorCode::ParseError, "not a rational: '" + s + "'"); };
  auto valid_int = [](std::string_view part) {
    if (!part.empty() && (part.front() == '-' || part.front() == '+')) part.remove_prefix(1);
    if (part.empty()) return false;
    for (char c : part)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw bad();
  if (num.front() == '+') num.remove_prefix(1);
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
  return Rational(n, d);
}

std::optional<std::int64_t> Rational::to_int64() const {
  if (!is_integer() || !value_.get_num().fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(value_.get_num().get_si());
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) return Rational(1) / pow(-e);
  Rational result(1);
  Rational base = *this;
  auto k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1UL) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

bool Rational::is_canonical() const {
  const BigInt& d = value_.get_den();
  if (d <= 0) return false;
  BigInt g;
  BigInt n = abs(value_.get_num());
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (n == 0) return d == 1;
  return g == 1;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

Rational binomial(const Rational& x, long k) {
  if (k < 0) return 0;
  Rational r(1);
  for (long i = 0; i < k; ++i) r = r * (x - Rational(i)) / Rational(i + 1);
  return r;
}

}  // namespace cox
