#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cox/catalog.hpp"
#include "cox/series.hpp"

namespace cox {

/// Outcome of one suite on one subject. A failed report always carries the
/// first failing instance in `witness`.
struct CheckReport {
  std::string suite;
  std::string subject;
  bool passed = true;
  std::optional<std::string> witness;
  std::string note;
  std::size_t checks = 0;
};

enum class Suite {
  ExpSum,
  Multiset,
  Gamma,
  HRelation,
  Beta,
  Symmetry,
  ToddSymm,
  Kostant,
  TTransform,
  Specializations,
  Gamma34,
  Methods,
};

std::string_view to_string(Suite s);
/// CLI spelling, e.g. "h-relation", "todd-symm".
Suite parse_suite(std::string_view text);
const std::vector<Suite>& all_suites();

enum class FaultField { H, Gamma, D, Nu, Alpha, Beta, A, B, Exponent, ToddLambda, TStart };

/// One corrupted constant. Catalog fields name a target type; ToddLambda
/// replaces lambda_index in the Todd log table, TStart replaces coefficient
/// `index` of every series fed to the T transformation checks.
struct Fault {
  std::optional<CoxeterType> target;
  FaultField field = FaultField::Gamma;
  std::size_t index = 0;
  Rational value;

  /// "E8:gamma=901", "D5:exp2=4", "todd:lambda3=1", "t:a1=4".
  static Fault parse(std::string_view text);
};

/// Data access for the suites. Without a fault it forwards to the catalog.
class VerifyContext {
 public:
  VerifyContext() = default;
  explicit VerifyContext(std::optional<Fault> fault) : fault_(std::move(fault)) {}

  ParameterSet params(const CoxeterType& t, Profile profile) const;
  ParameterSet params(const CoxeterType& t) const { return params(t, default_profile(t)); }
  ExponentList exponents(const CoxeterType& t) const;
  std::vector<Rational> lambda(std::size_t order) const;
  TruncatedSeries corrupt_t_input(TruncatedSeries f) const;

  const std::optional<Fault>& fault() const { return fault_; }

 private:
  std::optional<Fault> fault_;
};

CheckReport check_expsum(const CoxeterType& t, Profile profile, const VerifyContext& ctx = {});
CheckReport check_multiset_laws(const CoxeterType& t, Profile profile, const VerifyContext& ctx = {});
CheckReport check_gamma_formula(const CoxeterType& t, const VerifyContext& ctx = {});
/// h = (d/2)(r + 2 + nu) and the (d, nu) formulas for V+-. Throws
/// ProfileMismatch for the standard odd I2(m), m >= 7, rows where neither holds.
CheckReport check_h_relation(const CoxeterType& t, Profile profile, const VerifyContext& ctx = {});
/// Whether check_h_relation applies to this (type, profile).
bool h_relation_asserted(const CoxeterType& t, Profile profile);
CheckReport check_beta_formula(const CoxeterType& t, const VerifyContext& ctx = {});
CheckReport check_symmetry_identities(const CoxeterType& t, int a_max, int b_max, const VerifyContext& ctx = {});
/// Polynomial identity testing of the Todd symmetry at seeded random
/// rational points (numerators in [-100, 100], denominators in [1, 100]).
CheckReport check_todd_symmetry(int a, int b, int samples, std::uint64_t seed, const VerifyContext& ctx = {});
/// For odd n >= 3, Td_n does not change when gamma_n is perturbed.
CheckReport check_todd_odd_independence(int n, int samples, std::uint64_t seed, const VerifyContext& ctx = {});
/// D and E types only; WrongFamily otherwise.
CheckReport check_de_kostant(const CoxeterType& t, const VerifyContext& ctx = {});

/// f -> sqrt(f(2t)) applied `iterations` times through the coefficient
/// recursion b_n = 2^{n-1} a_n - (1/2) sum_{j=1}^{n-1} b_j b_{n-j}.
TruncatedSeries t_transform(const TruncatedSeries& f, int iterations);
/// f -> f(l t)^{1/l} applied `iterations` times through log/exp.
TruncatedSeries ell_transform(const TruncatedSeries& f, int ell, int iterations);

/// T^k((1+t)/(1-t)) has even integer coefficients beyond the constant and
/// equals p_factor(2^k), for k <= k_max.
CheckReport check_t_integrality(int k_max, std::size_t order, const VerifyContext& ctx = {});
/// The three example rows (n+1 -> 2^n, 2^n -> C(2n,n), C_{n+1} -> 2^n C_n).
CheckReport check_t_examples(std::size_t order, const VerifyContext& ctx = {});
/// Recursion route versus log/exp route (l = 2), plus the e^{2t} fixed point.
CheckReport check_t_routes(std::size_t order, const VerifyContext& ctx = {});

/// Closed gamma_n forms for A_r (p = 1) and C_r (p = 1, 2); WrongFamily otherwise.
CheckReport check_gamma_specializations(const CoxeterType& t, int n_max, const VerifyContext& ctx = {});
/// Bernoulli route against direct summation for n <= n_max, r <= r_max.
CheckReport check_faulhaber(int n_max, std::int64_t r_max);
CheckReport check_gamma34(const CoxeterType& t, int p, const VerifyContext& ctx = {});
/// Direct vs Todd power sums (all p), closed forms, height sums, gamma
/// series route agreement, simply-laced height sum.
CheckReport check_methods(const CoxeterType& t, int n_max, const std::vector<int>& ps, const VerifyContext& ctx = {});
/// S4(A_{h-1}) / (h-1) != S4(D_{(h+2)/2}) / ((h+2)/2) at h = 10.
CheckReport check_s4_nonuniversal(const VerifyContext& ctx = {});

struct RunOptions {
  int max_rank = 12;
  int max_m = 30;
  int n_max = 12;
  std::uint64_t seed = 42;
  int jobs = 1;
  int todd_samples = 50;
  std::vector<Suite> suites;  // empty = all
  std::optional<Fault> fault;
};

using CheckTask = std::function<CheckReport()>;

/// Task list in canonical order: suites in declaration order, subjects in
/// catalog order.
std::vector<CheckTask> build_tasks(const RunOptions& options);

/// Runs build_tasks(options) with options.jobs workers (1 = serial).
std::vector<CheckReport> run_all(const RunOptions& options);
std::vector<CheckReport> run_all(int max_rank, int max_m, int n_max, std::uint64_t seed);

}  // namespace cox
