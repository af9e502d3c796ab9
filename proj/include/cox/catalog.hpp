#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cox/rational.hpp"

namespace cox {

enum class Family { A, B, C, D, E, F, G, H, I2 };

/// Irreducible finite Coxeter type. `n` is the rank for letter families and
/// the dihedral parameter m for I2(m).
struct CoxeterType {
  Family family = Family::A;
  int n = 1;

  int rank() const { return family == Family::I2 ? 2 : n; }

  /// Display label. C and B share a row and print as "Cr/Br".
  std::string name() const;

  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
  friend auto operator<=>(const CoxeterType&, const CoxeterType&) = default;
};

/// Which row of the parameter tables to read.
///
/// Standard is the main table. RedefinedI2 uses d = m/2, nu = 0 for the
/// dihedral types I2(m), m >= 4 (including C2, H2, G2). H2Original pins
/// d = 2, nu = 1 for H2, which coincides with the H2 standard row.
enum class Profile { Standard, RedefinedI2, H2Original };

std::string_view to_string(Profile p);
/// Accepts "standard", "redefined", "redefined-i2", "h2-original".
Profile parse_profile(std::string_view text);

using ExponentList = std::vector<std::int64_t>;
using DualPartition = std::vector<std::int64_t>;

struct ParameterSet {
  CoxeterType type;
  Profile profile = Profile::Standard;
  std::int64_t r = 0;
  std::int64_t h = 0;
  std::int64_t gamma = 0;
  Rational d;
  std::int64_t nu = 0;
  Rational alpha;
  Rational beta;
  Rational A;
  Rational B;
  /// True when the table leaves beta unconstrained (and B = beta).
  bool beta_free = false;

  /// {A, B}
  std::vector<Rational> v_plus() const { return {A, B}; }
  /// {alpha, beta}
  std::vector<Rational> v_minus() const { return {alpha, beta}; }
};

/// Grammar: <letter><digits> or I2(<digits>), case-insensitive; "Cr/Br" is
/// also accepted. Throws ParseError or RangeError.
CoxeterType parse_type(std::string_view text);

/// Throws RangeError when the type is outside the classification ranges.
void validate(const CoxeterType& t);

/// B_r -> C_r, I2(3) -> A2, I2(4) -> C2, I2(5) -> H2, I2(6) -> G2.
CoxeterType normalize(const CoxeterType& t);

bool is_crystallographic(const CoxeterType& t);

ExponentList exponents(const CoxeterType& t);
std::int64_t coxeter_number(const CoxeterType& t);

Profile default_profile(const CoxeterType& t);
/// Profiles accepted by parameters() for this type, Standard first.
std::vector<Profile> applicable_profiles(const CoxeterType& t);

/// Table row for the type under the profile. The optional override replaces
/// a free beta slot (B = beta = value); throws BetaNotFree otherwise, and
/// ProfileMismatch when the profile does not apply to the type.
ParameterSet parameters(const CoxeterType& t, Profile profile,
                        const std::optional<Rational>& beta_override = std::nullopt);
ParameterSet parameters(const CoxeterType& t);

/// k_j = #{i : m_i >= j} for j = 1..h-1, where h - 1 = max exponent.
DualPartition dual_partition(const ExponentList& e);

/// Sweep domain, deterministic order, normalized, no duplicates.
/// Letter families are bounded by max_rank, I2(m) by max_m.
std::vector<CoxeterType> catalog(int max_rank, int max_m);

/// The 14 rows of the main parameter table, one representative each.
std::vector<CoxeterType> table_representatives();

}  // namespace cox
