#pragma once

#include <string_view>
#include <vector>

#include "cox/catalog.hpp"
#include "cox/rational.hpp"

namespace cox {

enum class Method { Direct, Todd, Closed };

std::string_view to_string(Method m);

struct PowerSumResult {
  CoxeterType type;
  int n = 0;
  Rational value;
  Method method = Method::Direct;
};

// Exponent power sums S_n = sum_i m_i^n.

PowerSumResult powersum_direct(const CoxeterType& t, int n);
Rational powersum_direct(const ExponentList& e, int n);

/// n! r Td_n(gamma_1..gamma_n) with the gamma series of the default profile.
PowerSumResult powersum_todd(const CoxeterType& t, int n, int p);
Rational powersum_todd(const ParameterSet& params, int n, int p);
/// S_0..S_{n_max} from a single gamma series of order max(n_max, 2).
std::vector<Rational> powersums_todd(const ParameterSet& params, int n_max, int p);

/// Closed forms in (r, h, gamma, alpha, beta) for n <= 5.
PowerSumResult powersum_closed(const CoxeterType& t, int n);
Rational powersum_closed(const ParameterSet& params, int n);

/// The correction term shared by the fourth and fifth power closed forms
/// and the height cube/quartic closed forms.
Rational r45(const ParameterSet& params);

// Height power sums sum_{phi > 0} ht(phi)^n, from exponents only.

/// Sum of Faulhaber sums over the exponents, cross-checked against the
/// dual partition; InternalMismatch if the two disagree.
PowerSumResult heightsum_direct(const CoxeterType& t, int n);
Rational heightsum_direct(const ExponentList& e, int n);

/// Faulhaber polynomial coefficients applied to Todd power sums.
PowerSumResult heightsum_todd(const CoxeterType& t, int n, int p);
Rational heightsum_todd(const ParameterSet& params, int n, int p);

/// Closed forms for n <= 4.
PowerSumResult heightsum_closed(const CoxeterType& t, int n);
Rational heightsum_closed(const ParameterSet& params, int n);

}  // namespace cox
