#include "cox/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "cox/error.hpp"
#include "cox/polynomial.hpp"
#include "cox/powersum.hpp"
#include "cox/sweep.hpp"
#include "cox/todd.hpp"

namespace cox {

namespace {

Rational R(std::int64_t v) { return Rational(static_cast<long>(v)); }

std::string join(const std::vector<Rational>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + "}";
}

bool same_multiset(std::vector<Rational> a, std::vector<Rational> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

/// Accumulates sub-checks and keeps the first failure.
class Recorder {
 public:
  Recorder(std::string suite, std::string subject) {
    report_.suite = std::move(suite);
    report_.subject = std::move(subject);
  }

  bool expect(bool ok, const std::function<std::string()>& witness) {
    ++report_.checks;
    if (!ok && report_.passed) {
      report_.passed = false;
      report_.witness = witness();
    }
    return ok;
  }

  bool expect_equal(const Rational& lhs, const Rational& rhs, const std::string& what) {
    return expect(lhs == rhs, [&] { return what + ": " + lhs.to_string() + " != " + rhs.to_string(); });
  }

  void note(std::string n) { report_.note = std::move(n); }
  CheckReport done() && { return std::move(report_); }

 private:
  CheckReport report_;
};

std::string subject_with_profile(const CoxeterType& t, Profile p) {
  return normalize(t).name() + " [" + std::string(to_string(p)) + "]";
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-100, 100);
  std::uniform_int_distribution<long> den(1, 100);
  long n = num(rng);
  long d = den(rng);
  return Rational(BigInt(n), BigInt(d));
}

std::mt19937_64 seeded(std::uint64_t seed, std::initializer_list<std::uint32_t> salt) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  words.insert(words.end(), salt.begin(), salt.end());
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

TruncatedSeries from_function(std::size_t order, const std::function<Rational(std::size_t)>& f) {
  std::vector<Rational> v(order + 1);
  for (std::size_t n = 0; n <= order; ++n) v[n] = f(n);
  return TruncatedSeries(std::move(v));
}

Rational pow2(std::size_t n) { return Rational(BigInt(1) << static_cast<mp_bitcnt_t>(n)); }

Rational catalan(long k) {
  if (k == -1) return Rational(BigInt(-1), BigInt(2));
  return Rational(binomial(2 * k, k), BigInt(k + 1));
}

bool is_even_integer(const Rational& x) {
  return x.is_integer() && mpz_even_p(x.numerator().get_mpz_t());
}

}  // namespace

// ---------------------------------------------------------------------------
// Names and faults

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::ExpSum: return "expsum";
    case Suite::Multiset: return "multiset";
    case Suite::Gamma: return "gamma";
    case Suite::HRelation: return "h-relation";
    case Suite::Beta: return "beta";
    case Suite::Symmetry: return "symmetry";
    case Suite::ToddSymm: return "todd-symm";
    case Suite::Kostant: return "kostant";
    case Suite::TTransform: return "t-transform";
    case Suite::Specializations: return "specializations";
    case Suite::Gamma34: return "gamma34";
    case Suite::Methods: return "methods";
  }
  return "?";
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{
      Suite::ExpSum,   Suite::Multiset, Suite::Gamma,      Suite::HRelation,       Suite::Beta,    Suite::Symmetry,
      Suite::ToddSymm, Suite::Kostant,  Suite::TTransform, Suite::Specializations, Suite::Gamma34, Suite::Methods};
  return suites;
}

Suite parse_suite(std::string_view text) {
  for (Suite s : all_suites())
    if (to_string(s) == text) return s;
  throw Error(ErrorCode::ParseError, "unknown suite '" + std::string(text) + "'");
}

Fault Fault::parse(std::string_view text) {
  auto fail = [&] { return Error(ErrorCode::ParseError, "bad fault '" + std::string(text) + "'"); };
  auto colon = text.find(':');
  auto eq = text.find('=');
  if (colon == std::string_view::npos || eq == std::string_view::npos || eq < colon) throw fail();
  std::string_view where = text.substr(0, colon);
  std::string_view field = text.substr(colon + 1, eq - colon - 1);
  Fault f;
  f.value = Rational::parse(text.substr(eq + 1));

  auto indexed = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (field.substr(0, prefix.size()) != prefix || field.size() == prefix.size()) return std::nullopt;
    std::size_t k = 0;
    for (char c : field.substr(prefix.size())) {
      if (c < '0' || c > '9') return std::nullopt;
      k = k * 10 + static_cast<std::size_t>(c - '0');
    }
    return k;
  };

  if (where == "todd") {
    auto k = indexed("lambda");
    if (!k) throw fail();
    f.field = FaultField::ToddLambda;
    f.index = *k;
    return f;
  }
  if (where == "t") {
    auto k = indexed("a");
    if (!k) throw fail();
    f.field = FaultField::TStart;
    f.index = *k;
    return f;
  }

  f.target = normalize(parse_type(where));
  if (field == "h") f.field = FaultField::H;
  else if (field == "gamma") f.field = FaultField::Gamma;
  else if (field == "d") f.field = FaultField::D;
  else if (field == "nu") f.field = FaultField::Nu;
  else if (field == "alpha") f.field = FaultField::Alpha;
  else if (field == "beta") f.field = FaultField::Beta;
  else if (field == "A") f.field = FaultField::A;
  else if (field == "B") f.field = FaultField::B;
  else if (auto k = indexed("exp"); k && *k >= 1) {
    f.field = FaultField::Exponent;
    f.index = *k;
  } else {
    throw fail();
  }
  bool integral = f.field == FaultField::H || f.field == FaultField::Gamma || f.field == FaultField::Nu ||
                  f.field == FaultField::Exponent;
  if (integral && !f.value.is_integer()) throw fail();
  return f;
}

ParameterSet VerifyContext::params(const CoxeterType& t, Profile profile) const {
  ParameterSet p = parameters(t, profile);
  if (!fault_ || !fault_->target || *fault_->target != normalize(t)) return p;
  const Rational& v = fault_->value;
  switch (fault_->field) {
    case FaultField::H: p.h = *v.to_int64(); break;
    case FaultField::Gamma: p.gamma = *v.to_int64(); break;
    case FaultField::D: p.d = v; break;
    case FaultField::Nu: p.nu = *v.to_int64(); break;
    case FaultField::Alpha: p.alpha = v; break;
    case FaultField::Beta: p.beta = v; break;
    case FaultField::A: p.A = v; break;
    case FaultField::B: p.B = v; break;
    default: break;
  }
  return p;
}

ExponentList VerifyContext::exponents(const CoxeterType& t) const {
  ExponentList e = cox::exponents(t);
  if (fault_ && fault_->target && *fault_->target == normalize(t) && fault_->field == FaultField::Exponent &&
      fault_->index >= 1 && fault_->index <= e.size())
    e[fault_->index - 1] = *fault_->value.to_int64();
  return e;
}

std::vector<Rational> VerifyContext::lambda(std::size_t order) const {
  std::vector<Rational> l = todd_log_coefficients(order);
  if (fault_ && fault_->field == FaultField::ToddLambda && fault_->index < l.size()) l[fault_->index] = fault_->value;
  return l;
}

TruncatedSeries VerifyContext::corrupt_t_input(TruncatedSeries f) const {
  if (!fault_ || fault_->field != FaultField::TStart || fault_->index > f.order()) return f;
  std::vector<Rational> c(f.coefficients().begin(), f.coefficients().end());
  c[fault_->index] = fault_->value;
  return TruncatedSeries(std::move(c));
}

// ---------------------------------------------------------------------------
// Catalog identities

CheckReport check_expsum(const CoxeterType& t, Profile profile, const VerifyContext& ctx) {
  Recorder rec("expsum", subject_with_profile(t, profile));
  const ParameterSet p = ctx.params(t, profile);
  const ExponentList e = ctx.exponents(t);

  std::vector<Rational> plus = p.v_plus();
  std::vector<Rational> minus = p.v_minus();
  for (auto it = plus.begin(); it != plus.end();) {
    auto hit = std::find(minus.begin(), minus.end(), *it);
    if (hit != minus.end()) {
      minus.erase(hit);
      it = plus.erase(it);
    } else {
      ++it;
    }
  }
  if (!rec.expect(std::all_of(plus.begin(), plus.end(), [](const Rational& v) { return v.is_integer() && v.sign() > 0; }) &&
                      std::all_of(minus.begin(), minus.end(), [](const Rational& v) { return v.is_integer() && v.sign() > 0; }),
                  [&] { return "after cancellation V+ = " + join(plus) + ", V- = " + join(minus) + " are not positive integers"; }))
    return std::move(rec).done();

  std::vector<std::int64_t> ip, im;
  for (const auto& v : plus) ip.push_back(*v.to_int64());
  for (const auto& v : minus) im.push_back(*v.to_int64());
  if (!rec.expect(std::all_of(e.begin(), e.end(), [](auto m) { return m >= 0; }),
                  [] { return std::string("negative exponent"); }))
    return std::move(rec).done();

  IntPolynomial lhs = poly_from_exponents(e);
  for (auto v : im) lhs = lhs * IntPolynomial::one_minus_q_pow(static_cast<std::size_t>(v));
  IntPolynomial rhs = IntPolynomial::monomial(1, 1);
  for (auto v : ip) rhs = rhs * IntPolynomial::one_minus_q_pow(static_cast<std::size_t>(v));
  rec.expect(lhs == rhs, [&] {
    return "sum q^m * prod_{V-}(1-q^v) = " + lhs.to_string() + " but q * prod_{V+}(1-q^v) = " + rhs.to_string();
  });
  return std::move(rec).done();
}

CheckReport check_multiset_laws(const CoxeterType& t, Profile profile, const VerifyContext& ctx) {
  Recorder rec("multiset", subject_with_profile(t, profile));
  const ParameterSet p = ctx.params(t, profile);
  const auto plus = p.v_plus();
  const auto minus = p.v_minus();
  Rational prod_plus(1), prod_minus(1);
  for (const auto& v : plus) prod_plus *= v;
  for (const auto& v : minus) prod_minus *= v;
  rec.expect_equal(prod_plus, R(p.r) * prod_minus, "prod V+ vs r * prod V-");
  rec.expect(plus.size() == minus.size(), [&] { return "|V+| != |V-|"; });
  return std::move(rec).done();
}

CheckReport check_gamma_formula(const CoxeterType& t, const VerifyContext& ctx) {
  Recorder rec("gamma", normalize(t).name());
  const ParameterSet p = ctx.params(t);
  const Rational h = R(p.h);
  const Rational formula = h * h + (h - 2) * (p.alpha + p.beta - 1) - R(p.r - 1) * p.alpha * p.beta;
  rec.expect_equal(R(p.gamma), formula, "table gamma vs h^2 + (h-2)(alpha+beta-1) - (r-1) alpha beta");
  return std::move(rec).done();
}

bool h_relation_asserted(const CoxeterType& t, Profile profile) {
  CoxeterType u = normalize(t);
  return !(profile == Profile::Standard && u.family == Family::I2 && u.n % 2 == 1);
}

CheckReport check_h_relation(const CoxeterType& t, Profile profile, const VerifyContext& ctx) {
  if (!h_relation_asserted(t, profile))
    throw Error(ErrorCode::ProfileMismatch,
                "h = (d/2)(r+2+nu) is not asserted for " + subject_with_profile(t, profile));
  Recorder rec("h-relation", subject_with_profile(t, profile));
  const ParameterSet p = ctx.params(t, profile);
  const Rational d = p.d;
  const Rational nu = R(p.nu);
  rec.expect_equal(R(p.h), d / 2 * (R(p.r) + 2 + nu), "h vs (d/2)(r+2+nu)");
  const std::vector<Rational> minus{d, 2 * d - 2 + nu};
  const std::vector<Rational> plus{4 * d - 4 + d * nu, R(p.h) - d - (d - 1) * nu};
  rec.expect(same_multiset(minus, p.v_minus()),
             [&] { return "V- from (d,nu) = " + join(minus) + " but table {alpha,beta} = " + join(p.v_minus()); });
  rec.expect(same_multiset(plus, p.v_plus()),
             [&] { return "V+ from (d,nu) = " + join(plus) + " but table {A,B} = " + join(p.v_plus()); });
  return std::move(rec).done();
}

CheckReport check_beta_formula(const CoxeterType& t, const VerifyContext& ctx) {
  Recorder rec("beta", normalize(t).name());
  const ParameterSet p = ctx.params(t);
  const Rational h = R(p.h);
  const Rational den = 2 + R(p.r - 1) * p.alpha - h;
  if (den.is_zero()) {
    rec.note("unconstrained");
    // The table must mark the slot free exactly when the formula leaves it free.
    rec.expect(p.beta_free, [&] { return "denominator 2+(r-1)alpha-h vanishes but table fixes beta = " + p.beta.to_string(); });
    return std::move(rec).done();
  }
  const Rational num = h * h - R(p.gamma) + (h - 2) * (p.alpha - 1);
  rec.expect_equal(num / den, p.beta, "beta formula vs table beta");
  return std::move(rec).done();
}

CheckReport check_symmetry_identities(const CoxeterType& t, int a_max, int b_max, const VerifyContext& ctx) {
  if (a_max < 0 || b_max < 0) throw Error(ErrorCode::InvalidArgument, "a_max and b_max must be nonnegative");
  Recorder rec("symmetry", normalize(t).name());
  const ExponentList e = ctx.exponents(t);
  const Rational h = R(ctx.params(t).h);
  std::vector<Rational> s;
  for (int k = 0; k <= a_max + b_max; ++k) s.push_back(powersum_direct(e, k));
  auto side = [&](int a, int b) {
    Rational acc;
    for (int j = 0; j <= a; ++j) {
      Rational term = Rational(binomial(a, j)) * h.pow(j) * s[static_cast<std::size_t>(a + b - j)];
      acc += ((a - j) % 2) ? -term : term;
    }
    return acc;
  };
  for (int a = 0; a <= a_max; ++a)
    for (int b = 0; b <= b_max; ++b)
      rec.expect_equal(side(a, b), side(b, a),
                       "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")");
  return std::move(rec).done();
}

// ---------------------------------------------------------------------------
// Todd polynomial identities

CheckReport check_todd_symmetry(int a, int b, int samples, std::uint64_t seed, const VerifyContext& ctx) {
  if (a < 0 || b < 0 || samples < 1) throw Error(ErrorCode::InvalidArgument, "need a, b >= 0 and samples >= 1");
  Recorder rec("todd-symm", "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")");
  const auto total = static_cast<std::size_t>(a + b);
  const std::vector<Rational> lambda = ctx.lambda(total);
  auto rng = seeded(seed, {0x7d, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});

  for (int s = 0; s < samples; ++s) {
    std::vector<Rational> c(total + 1);
    c[0] = 1;
    for (std::size_t k = 1; k <= total; ++k) c[k] = random_rational(rng);
    const TruncatedSeries gamma(c);
    const ToddValues td = todd_values(gamma, total, lambda);
    const Rational c1 = total >= 1 ? c[1] : Rational();
    auto side = [&](int x) {
      Rational acc;
      for (int j = 0; j <= x; ++j) {
        const auto deg = total - static_cast<std::size_t>(j);
        Rational term = Rational(binomial(x, j)) * c1.pow(j) * Rational(factorial(deg)) * td[deg];
        acc += ((x - j) % 2) ? -term : term;
      }
      return acc;
    };
    const Rational lhs = side(a);
    const Rational rhs = side(b);
    if (!rec.expect(lhs == rhs, [&] {
          std::vector<Rational> shown(c.begin() + 1, c.end());
          return "sample " + std::to_string(s) + " c=" + join(shown) + ": " + lhs.to_string() + " != " + rhs.to_string();
        }))
      break;
  }
  return std::move(rec).done();
}

CheckReport check_todd_odd_independence(int n, int samples, std::uint64_t seed, const VerifyContext& ctx) {
  if (n < 3 || n % 2 == 0 || samples < 1) throw Error(ErrorCode::InvalidArgument, "need odd n >= 3 and samples >= 1");
  Recorder rec("todd-symm", "Td_" + std::to_string(n) + " independent of c_" + std::to_string(n));
  const auto order = static_cast<std::size_t>(n);
  const std::vector<Rational> lambda = ctx.lambda(order);
  auto rng = seeded(seed, {0x0dd, static_cast<std::uint32_t>(n)});
  for (int s = 0; s < samples; ++s) {
    std::vector<Rational> c(order + 1);
    c[0] = 1;
    for (std::size_t k = 1; k <= order; ++k) c[k] = random_rational(rng);
    std::vector<Rational> perturbed = c;
    Rational delta = random_rational(rng);
    if (delta.is_zero()) delta = 1;
    perturbed[order] += delta;
    const Rational before = todd_values(TruncatedSeries(c), order, lambda)[order];
    const Rational after = todd_values(TruncatedSeries(perturbed), order, lambda)[order];
    if (!rec.expect_equal(before, after, "sample " + std::to_string(s) + " shift c_n by " + delta.to_string())) break;
  }
  return std::move(rec).done();
}

CheckReport check_de_kostant(const CoxeterType& t, const VerifyContext& ctx) {
  const CoxeterType u = normalize(t);
  if (u.family != Family::D && u.family != Family::E)
    throw Error(ErrorCode::WrongFamily, "Kostant parameters exist for D and E types only, got " + u.name());
  Recorder rec("kostant", u.name());
  const ParameterSet p = ctx.params(u, Profile::Standard);
  const Rational h = R(p.h), r = R(p.r), d = p.d;
  const Rational a = 2 * d;
  const Rational b = h + 2 - 2 * d;
  const std::vector<Rational> minus{a / 2, b / 2};
  const std::vector<Rational> plus{b, r * a / 4};
  rec.expect(same_multiset(minus, p.v_minus()),
             [&] { return "{a/2, b/2} = " + join(minus) + " but V- = " + join(p.v_minus()); });
  rec.expect(same_multiset(plus, p.v_plus()),
             [&] { return "{b, ra/4} = " + join(plus) + " but V+ = " + join(p.v_plus()); });
  rec.expect_equal(h, d * r - 4 * d + 6, "h vs dr - 4d + 6");
  rec.expect_equal(d * (h - 2 * r - 6 * d + 26), 24, "d(h - 2r - 6d + 26) vs 24");
  return std::move(rec).done();
}

// ---------------------------------------------------------------------------
// T transformation

TruncatedSeries t_transform(const TruncatedSeries& f, int iterations) {
  if (iterations < 0) throw Error(ErrorCode::InvalidArgument, "iterations must be nonnegative");
  TruncatedSeries cur = f;
  for (int it = 0; it < iterations; ++it) {
    if (cur[0] != Rational(1))
      throw Error(ErrorCode::ConstantTermNotOne, "T needs constant term 1, got " + cur[0].to_string());
    const std::size_t order = cur.order();
    std::vector<Rational> b(order + 1);
    b[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
      Rational conv;
      for (std::size_t j = 1; j < n; ++j) conv += b[j] * b[n - j];
      b[n] = pow2(n - 1) * cur[n] - conv / 2;
    }
    cur = TruncatedSeries(std::move(b));
  }
  if (iterations == 0 && cur[0] != Rational(1))
    throw Error(ErrorCode::ConstantTermNotOne, "T needs constant term 1, got " + cur[0].to_string());
  return cur;
}

TruncatedSeries ell_transform(const TruncatedSeries& f, int ell, int iterations) {
  if (ell < 1 || iterations < 0) throw Error(ErrorCode::InvalidArgument, "need ell >= 1 and iterations >= 0");
  TruncatedSeries cur = f;
  for (int it = 0; it < iterations; ++it)
    cur = series_pow(series_dilate(cur, ell), Rational(BigInt(1), BigInt(ell)));
  return cur;
}

CheckReport check_t_integrality(int k_max, std::size_t order, const VerifyContext& ctx) {
  if (k_max < 0) throw Error(ErrorCode::InvalidArgument, "k_max must be nonnegative");
  Recorder rec("t-transform", "T^k((1+t)/(1-t)), k<=" + std::to_string(k_max) + ", order " + std::to_string(order));
  TruncatedSeries cur = ctx.corrupt_t_input(p_factor(1, order));
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) cur = t_transform(cur, 1);
    for (std::size_t n = 1; n <= order; ++n)
      if (!rec.expect(is_even_integer(cur[n]), [&] {
            return "k=" + std::to_string(k) + ": coefficient " + std::to_string(n) + " = " + cur[n].to_string() +
                   " is not an even integer";
          }))
        return std::move(rec).done();
    const TruncatedSeries expected = p_factor(1 << k, order);
    rec.expect(cur == expected, [&] {
      return "k=" + std::to_string(k) + ": T^k f = " + cur.to_string() + " but p_factor(" +
             std::to_string(1 << k) + ") = " + expected.to_string();
    });
  }
  return std::move(rec).done();
}

CheckReport check_t_examples(std::size_t order, const VerifyContext& ctx) {
  Recorder rec("t-transform", "example rows, order " + std::to_string(order));
  struct Row {
    const char* name;
    std::function<Rational(std::size_t)> input;
    std::function<Rational(std::size_t)> output;
  };
  const std::vector<Row> rows{
      {"a_n=n+1 -> 2^n", [](std::size_t n) { return Rational(static_cast<long>(n + 1)); }, pow2},
      {"a_n=2^n -> C(2n,n)", pow2,
       [](std::size_t n) { return Rational(binomial(static_cast<long>(2 * n), static_cast<long>(n))); }},
      {"a_n=C_{n+1} -> 2^n C_n", [](std::size_t n) { return catalan(static_cast<long>(n) + 1); },
       [](std::size_t n) { return pow2(n) * catalan(static_cast<long>(n)); }},
  };
  for (const auto& row : rows) {
    const TruncatedSeries in = ctx.corrupt_t_input(from_function(order, row.input));
    const TruncatedSeries out = t_transform(in, 1);
    const TruncatedSeries expected = from_function(order, row.output);
    rec.expect(out == expected,
               [&] { return std::string(row.name) + ": got " + out.to_string() + ", expected " + expected.to_string(); });
  }
  return std::move(rec).done();
}

CheckReport check_t_routes(std::size_t order, const VerifyContext& ctx) {
  Recorder rec("t-transform", "recursion vs log/exp, order " + std::to_string(order));
  const std::vector<TruncatedSeries> inputs{
      p_factor(1, order),
      from_function(order, [](std::size_t n) { return Rational(static_cast<long>(n + 1)); }),
      from_function(order, pow2),
      from_function(order, [](std::size_t n) { return catalan(static_cast<long>(n) + 1); }),
  };
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const TruncatedSeries f = ctx.corrupt_t_input(inputs[i]);
    const TruncatedSeries by_recursion = t_transform(f, 1);
    const TruncatedSeries by_power = ell_transform(inputs[i], 2, 1);
    rec.expect(by_recursion == by_power, [&] {
      return "input " + std::to_string(i) + ": recursion " + by_recursion.to_string() + " vs log/exp " +
             by_power.to_string();
    });
  }
  // e^{2t} is a fixed point of T.
  const TruncatedSeries e2t = series_exp(TruncatedSeries::monomial(2, 1, order));
  const TruncatedSeries image = t_transform(ctx.corrupt_t_input(e2t), 1);
  rec.expect(image == e2t, [&] { return "T(e^{2t}) = " + image.to_string(); });
  // l = 2^k in a single step reproduces p_factor(2^k) with even coefficients.
  for (int k = 1; k <= 3; ++k) {
    const int ell = 1 << k;
    const TruncatedSeries g = ell_transform(ctx.corrupt_t_input(p_factor(1, order)), ell, 1);
    bool even = true;
    for (std::size_t n = 1; n <= order; ++n) even = even && is_even_integer(g[n]);
    rec.expect(even && g == p_factor(ell, order),
               [&] { return "l=" + std::to_string(ell) + ": " + g.to_string(); });
  }
  return std::move(rec).done();
}

// ---------------------------------------------------------------------------
// Gamma series

CheckReport check_gamma_specializations(const CoxeterType& t, int n_max, const VerifyContext& ctx) {
  const CoxeterType u = normalize(t);
  if (u.family != Family::A && u.family != Family::C)
    throw Error(ErrorCode::WrongFamily, "closed gamma_n forms exist for A and C types only, got " + u.name());
  if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 1");
  Recorder rec("specializations", u.name());
  const auto order = static_cast<std::size_t>(std::max(n_max, 2));
  const ParameterSet p = ctx.params(u, Profile::Standard);
  const Rational r = R(u.n);

  if (u.family == Family::A) {
    const GammaSeries g = gamma_series(p, 1, order);
    for (int n = 1; n <= n_max; ++n)
      rec.expect_equal(g.series[static_cast<std::size_t>(n)], r.pow(n) + r.pow(n - 1),
                       "p=1 gamma_" + std::to_string(n) + " vs r^n + r^{n-1}");
    return std::move(rec).done();
  }

  const Rational two_r = 2 * r;
  const GammaSeries g1 = gamma_series(p, 1, order);
  for (int n = 1; n <= n_max; ++n) {
    Rational tail;
    for (int j = 0; j <= n - 2; ++j) tail += two_r.pow(j);
    rec.expect_equal(g1.series[static_cast<std::size_t>(n)], two_r.pow(n) - 2 * tail,
                     "p=1 gamma_" + std::to_string(n) + " vs (2r)^n - 2 sum (2r)^j");
  }
  const GammaSeries g2 = gamma_series(p, 2, order);
  for (int n = 1; n <= n_max; ++n) {
    Rational sum;
    for (int j = 0; j <= n / 2; ++j) sum += catalan(j - 1) * two_r.pow(n - 2 * j);
    rec.expect_equal(g2.series[static_cast<std::size_t>(n)], -2 * sum,
                     "p=2 gamma_" + std::to_string(n) + " vs -2 sum C_{j-1} (2r)^{n-2j}");
  }
  return std::move(rec).done();
}

CheckReport check_faulhaber(int n_max, std::int64_t r_max) {
  Recorder rec("specializations", "Faulhaber n<=" + std::to_string(n_max) + ", r<=" + std::to_string(r_max));
  for (int n = 0; n <= n_max; ++n) {
    BigInt direct;
    for (std::int64_t r = 0; r <= r_max; ++r) {
      if (r > 0) {
        BigInt term;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(n));
        direct += term;
      }
      if (!rec.expect_equal(faulhaber(n, r), Rational(direct),
                            "n=" + std::to_string(n) + " r=" + std::to_string(r)))
        return std::move(rec).done();
    }
  }
  return std::move(rec).done();
}

CheckReport check_gamma34(const CoxeterType& t, int p, const VerifyContext& ctx) {
  Recorder rec("gamma34", normalize(t).name() + " p=" + std::to_string(p));
  const ParameterSet ps = ctx.params(t);
  const GammaSeries g = gamma_series(ps, p, 4);
  const Rational h = R(ps.h), gm = R(ps.gamma), P = R(p);
  const Rational& a = ps.alpha;
  const Rational& b = ps.beta;
  const Rational g3 = -h.pow(3) + 2 * h * gm - 2 * gm + Rational(1) / 3 * (2 * P * P + 4) -
                      (h * h - gm - h + 2) * (a + b) - (h - 2) * a * b;
  const Rational g4 = -h.pow(4) + h * h * gm + gm * gm + 3 * h.pow(3) - 6 * h * gm - h * h + 2 * gm +
                      Rational(2) / 3 * h * (P * P + 5) - 2 -
                      (h * h - gm - h + 2) * ((2 * h - 2 + a + b) * (a + b) - a * b) -
                      (h - 2) * (2 * h - 2 + a + b) * a * b;
  rec.expect_equal(g.series[1], h, "gamma_1 vs h");
  rec.expect_equal(g.series[2], gm - h, "gamma_2 vs gamma - h");
  rec.expect_equal(g.series[3], g3, "gamma_3 series vs closed form");
  rec.expect_equal(g.series[4], g4, "gamma_4 series vs closed form");
  return std::move(rec).done();
}

CheckReport check_methods(const CoxeterType& t, int n_max, const std::vector<int>& ps, const VerifyContext& ctx) {
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "n_max must be nonnegative");
  const CoxeterType u = normalize(t);
  Recorder rec("methods", u.name());
  const ParameterSet params = ctx.params(u);
  const ExponentList e = ctx.exponents(u);

  std::vector<Rational> direct;
  for (int n = 0; n <= n_max + 1; ++n) direct.push_back(powersum_direct(e, n));

  for (int p : ps) {
    const std::vector<Rational> todd = powersums_todd(params, n_max, p);
    for (int n = 0; n <= n_max; ++n)
      if (!rec.expect_equal(todd[static_cast<std::size_t>(n)], direct[static_cast<std::size_t>(n)],
                            "S_" + std::to_string(n) + " todd(p=" + std::to_string(p) + ") vs direct"))
        return std::move(rec).done();
    const auto order = static_cast<std::size_t>(std::max(n_max, 2));
    const GammaSeries g = gamma_series(params, p, order);
    const GammaSeries gx = gamma_series_xn(params, p, order);
    rec.expect(g.series == gx.series, [&] {
      return "p=" + std::to_string(p) + ": rational route " + g.series.to_string() + " vs X_n route " +
             gx.series.to_string();
    });
  }

  for (int n = 0; n <= std::min(n_max, 5); ++n)
    rec.expect_equal(powersum_closed(params, n), direct[static_cast<std::size_t>(n)],
                     "S_" + std::to_string(n) + " closed vs direct");

  const int p0 = ps.empty() ? 1 : ps.front();
  for (int n = 0; n <= n_max; ++n) {
    const Rational hd = heightsum_direct(e, n);
    if (n <= 4) rec.expect_equal(heightsum_closed(params, n), hd, "height sum " + std::to_string(n) + " closed vs direct");
    rec.expect_equal(heightsum_todd(params, n, p0), hd, "height sum " + std::to_string(n) + " todd vs direct");
  }

  if (u.family == Family::A || u.family == Family::D || u.family == Family::E) {
    const Rational h = R(params.h);
    rec.expect_equal(R(params.gamma), h * h, "simply-laced gamma vs h^2");
    rec.expect_equal(heightsum_direct(e, 1), R(params.r) * (h * h + h) / 6, "simply-laced height sum vs r(h^2+h)/6");
  }
  return std::move(rec).done();
}

CheckReport check_s4_nonuniversal(const VerifyContext& ctx) {
  Recorder rec("methods", "S4 not r*f(h,gamma): A9 vs D6");
  const CoxeterType a9{Family::A, 9}, d6{Family::D, 6};
  const ParameterSet pa = ctx.params(a9), pd = ctx.params(d6);
  rec.expect(pa.h == pd.h && pa.gamma == pd.gamma, [&] {
    return "A9 (h,gamma)=(" + std::to_string(pa.h) + "," + std::to_string(pa.gamma) + ") vs D6 (" +
           std::to_string(pd.h) + "," + std::to_string(pd.gamma) + ") do not share (h, gamma)";
  });
  const Rational sa = powersum_direct(ctx.exponents(a9), 4) / R(pa.r);
  const Rational sd = powersum_direct(ctx.exponents(d6), 4) / R(pd.r);
  rec.expect(sa != sd, [&] { return "S4/r coincide: " + sa.to_string(); });
  rec.note("S4(A9)/9 = " + sa.to_string() + ", S4(D6)/6 = " + sd.to_string());
  return std::move(rec).done();
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

CheckTask guarded(std::string suite, std::string subject, std::function<CheckReport()> body) {
  return [suite = std::move(suite), subject = std::move(subject), body = std::move(body)]() {
    try {
      return body();
    } catch (const std::exception& ex) {
      CheckReport r;
      r.suite = suite;
      r.subject = subject;
      r.passed = false;
      r.checks = 1;
      r.witness = std::string("exception: ") + ex.what();
      return r;
    }
  };
}

}  // namespace

std::vector<CheckTask> build_tasks(const RunOptions& o) {
  const std::vector<CoxeterType> types = catalog(o.max_rank, o.max_m);
  const std::vector<Suite>& suites = o.suites.empty() ? all_suites() : o.suites;
  const VerifyContext ctx(o.fault);
  const std::vector<int> ps{1, 2, 3};
  std::vector<CheckTask> tasks;

  for (Suite suite : all_suites()) {
    if (std::find(suites.begin(), suites.end(), suite) == suites.end()) continue;
    const std::string name(to_string(suite));
    switch (suite) {
      case Suite::ExpSum:
      case Suite::Multiset:
      case Suite::HRelation:
        for (const auto& t : types)
          for (Profile prof : applicable_profiles(t)) {
            if (suite == Suite::HRelation && !h_relation_asserted(t, prof)) continue;
            tasks.push_back(guarded(name, subject_with_profile(t, prof), [=] {
              if (suite == Suite::ExpSum) return check_expsum(t, prof, ctx);
              if (suite == Suite::Multiset) return check_multiset_laws(t, prof, ctx);
              return check_h_relation(t, prof, ctx);
            }));
          }
        break;
      case Suite::Gamma:
        for (const auto& t : types) tasks.push_back(guarded(name, t.name(), [=] { return check_gamma_formula(t, ctx); }));
        break;
      case Suite::Beta:
        for (const auto& t : types) tasks.push_back(guarded(name, t.name(), [=] { return check_beta_formula(t, ctx); }));
        break;
      case Suite::Symmetry: {
        const int half = std::max(o.n_max / 2, 1);
        for (const auto& t : types)
          tasks.push_back(guarded(name, t.name(), [=] { return check_symmetry_identities(t, half, half, ctx); }));
        break;
      }
      case Suite::ToddSymm:
        for (int total = 0; total <= 8; ++total)
          for (int a = 0; a <= total; ++a) {
            const int b = total - a;
            tasks.push_back(guarded(name, "(a,b)", [=] { return check_todd_symmetry(a, b, o.todd_samples, o.seed, ctx); }));
          }
        for (int n : {3, 5, 7})
          tasks.push_back(guarded(name, "odd", [=] { return check_todd_odd_independence(n, o.todd_samples, o.seed, ctx); }));
        break;
      case Suite::Kostant:
        for (const auto& t : types)
          if (t.family == Family::D || t.family == Family::E)
            tasks.push_back(guarded(name, t.name(), [=] { return check_de_kostant(t, ctx); }));
        break;
      case Suite::TTransform:
        tasks.push_back(guarded(name, "examples", [=] { return check_t_examples(20, ctx); }));
        tasks.push_back(guarded(name, "integrality", [=] { return check_t_integrality(5, 30, ctx); }));
        tasks.push_back(guarded(name, "routes", [=] { return check_t_routes(30, ctx); }));
        break;
      case Suite::Specializations: {
        const int n = std::max(o.n_max, 1);
        for (const auto& t : types)
          if (t.family == Family::A || t.family == Family::C)
            tasks.push_back(guarded(name, t.name(), [=] { return check_gamma_specializations(t, n, ctx); }));
        tasks.push_back(guarded(name, "faulhaber", [] { return check_faulhaber(8, 20); }));
        break;
      }
      case Suite::Gamma34:
        for (const auto& t : types)
          for (int p : ps) tasks.push_back(guarded(name, t.name(), [=] { return check_gamma34(t, p, ctx); }));
        break;
      case Suite::Methods:
        for (const auto& t : types)
          tasks.push_back(guarded(name, t.name(), [=] { return check_methods(t, o.n_max, ps, ctx); }));
        tasks.push_back(guarded(name, "s4", [=] { return check_s4_nonuniversal(ctx); }));
        break;
    }
  }
  return tasks;
}

std::vector<CheckReport> run_all(const RunOptions& options) {
  const std::vector<CheckTask> tasks = build_tasks(options);
  return options.jobs > 1 ? run_tasks_parallel(tasks, options.jobs) : run_tasks_serial(tasks);
}

std::vector<CheckReport> run_all(int max_rank, int max_m, int n_max, std::uint64_t seed) {
  RunOptions o;
  o.max_rank = max_rank;
  o.max_m = max_m;
  o.n_max = n_max;
  o.seed = seed;
  return run_all(o);
}

}  // namespace cox
