#include "cox/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "cox/error.hpp"

namespace cox {

namespace {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
    case Family::H: return 'H';
    case Family::I2: return 'I';
  }
  return '?';
}

std::optional<int> parse_digits(std::string_view s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

CoxeterType parse_single(std::string_view text, std::string_view original) {
  auto fail = [&] {
    return Error(ErrorCode::ParseError, "cannot parse Coxeter type '" + std::string(original) + "'");
  };
  if (text.empty()) throw fail();
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  std::string_view rest = text.substr(1);
  if (letter == 'I') {
    if (rest.size() < 4 || rest.substr(0, 2) != "2(" || rest.back() != ')') throw fail();
    auto m = parse_digits(rest.substr(2, rest.size() - 3));
    if (!m) throw fail();
    return {Family::I2, *m};
  }
  auto n = parse_digits(rest);
  if (!n) throw fail();
  switch (letter) {
    case 'A': return {Family::A, *n};
    case 'B': return {Family::B, *n};
    case 'C': return {Family::C, *n};
    case 'D': return {Family::D, *n};
    case 'E': return {Family::E, *n};
    case 'F': return {Family::F, *n};
    case 'G': return {Family::G, *n};
    case 'H': return {Family::H, *n};
    default: throw fail();
  }
}

ExponentList arithmetic(std::int64_t first, std::int64_t step, std::int64_t count) {
  ExponentList e;
  for (std::int64_t i = 0; i < count; ++i) e.push_back(first + i * step);
  return e;
}

bool is_dihedral_m_ge_4(const CoxeterType& t) {
  return t.family == Family::I2 || (t.family == Family::C && t.n == 2) ||
         (t.family == Family::H && t.n == 2) || t.family == Family::G;
}

int dihedral_m(const CoxeterType& t) {
  switch (t.family) {
    case Family::I2: return t.n;
    case Family::C: return 4;
    case Family::H: return 5;
    case Family::G: return 6;
    default: return 0;
  }
}

ParameterSet dihedral_row(const CoxeterType& t, Profile profile) {
  const std::int64_t m = dihedral_m(t);
  ParameterSet p;
  p.type = t;
  p.profile = profile;
  p.r = 2;
  p.h = m;
  p.gamma = 2 * m * m - 5 * m + 6;
  if (profile == Profile::RedefinedI2) {
    p.d = Rational(BigInt(m), BigInt(2));
    p.nu = 0;
  } else {
    p.d = m / 2;
    p.nu = m % 2;
  }
  p.A = 2 * m - 4;
  p.alpha = m - 2;
  p.beta = Rational(BigInt(m), BigInt(2));
  p.B = p.beta;
  p.beta_free = true;
  return p;
}

struct Row {
  std::int64_t r, h, gamma;
  Rational d;
  std::int64_t nu;
  Rational A, B, alpha, beta;
  bool beta_free;
};

ParameterSet from_row(const CoxeterType& t, Profile profile, const Row& row) {
  ParameterSet p;
  p.type = t;
  p.profile = profile;
  p.r = row.r;
  p.h = row.h;
  p.gamma = row.gamma;
  p.d = row.d;
  p.nu = row.nu;
  p.A = row.A;
  p.B = row.B;
  p.alpha = row.alpha;
  p.beta = row.beta;
  p.beta_free = row.beta_free;
  return p;
}

}  // namespace

std::string CoxeterType::name() const {
  if (family == Family::I2) return "I2(" + std::to_string(n) + ")";
  if (family == Family::C) return "C" + std::to_string(n) + "/B" + std::to_string(n);
  return std::string(1, family_letter(family)) + std::to_string(n);
}

std::string_view to_string(Profile p) {
  switch (p) {
    case Profile::Standard: return "standard";
    case Profile::RedefinedI2: return "redefined";
    case Profile::H2Original: return "h2-original";
  }
  return "?";
}

Profile parse_profile(std::string_view text) {
  std::string s(text);
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "standard") return Profile::Standard;
  if (s == "redefined" || s == "redefined-i2") return Profile::RedefinedI2;
  if (s == "h2-original") return Profile::H2Original;
  throw Error(ErrorCode::ParseError, "unknown profile '" + std::string(text) + "'");
}

CoxeterType parse_type(std::string_view text) {
  // "C5/B5" style labels round-trip: both halves must name the same rank.
  auto slash = text.find('/');
  CoxeterType t;
  if (slash != std::string_view::npos) {
    CoxeterType a = parse_single(text.substr(0, slash), text);
    CoxeterType b = parse_single(text.substr(slash + 1), text);
    if (a.family != Family::C || b.family != Family::B || a.n != b.n)
      throw Error(ErrorCode::ParseError, "only Cr/Br may be written with a slash: '" + std::string(text) + "'");
    t = a;
  } else {
    t = parse_single(text, text);
  }
  validate(t);
  return t;
}

void validate(const CoxeterType& t) {
  const int n = t.n;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B:
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
    case Family::H: ok = n >= 2 && n <= 4; break;
    case Family::I2: ok = n >= 3; break;
  }
  if (!ok) throw Error(ErrorCode::RangeError, t.name() + " is outside the classification");
}

CoxeterType normalize(const CoxeterType& t) {
  validate(t);
  if (t.family == Family::B) return {Family::C, t.n};
  if (t.family == Family::I2) {
    switch (t.n) {
      case 3: return {Family::A, 2};
      case 4: return {Family::C, 2};
      case 5: return {Family::H, 2};
      case 6: return {Family::G, 2};
      default: break;
    }
  }
  return t;
}

bool is_crystallographic(const CoxeterType& t) {
  CoxeterType u = normalize(t);
  return u.family != Family::H && u.family != Family::I2;
}

ExponentList exponents(const CoxeterType& t) {
  CoxeterType u = normalize(t);
  const std::int64_t r = u.n;
  switch (u.family) {
    case Family::A: return arithmetic(1, 1, r);
    case Family::B:
    case Family::C: return arithmetic(1, 2, r);
    case Family::D: {
      ExponentList e = arithmetic(1, 2, r - 1);
      e.push_back(r - 1);
      std::sort(e.begin(), e.end());
      return e;
    }
    case Family::E:
      if (r == 6) return {1, 4, 5, 7, 8, 11};
      if (r == 7) return {1, 5, 7, 9, 11, 13, 17};
      return {1, 7, 11, 13, 17, 19, 23, 29};
    case Family::F: return {1, 5, 7, 11};
    case Family::G: return {1, 5};
    case Family::H:
      if (r == 2) return {1, 4};
      if (r == 3) return {1, 5, 9};
      return {1, 11, 19, 29};
    case Family::I2: return {1, u.n - 1};
  }
  return {};
}

std::int64_t coxeter_number(const CoxeterType& t) { return exponents(t).back() + 1; }

Profile default_profile(const CoxeterType& t) {
  return normalize(t).family == Family::I2 ? Profile::RedefinedI2 : Profile::Standard;
}

std::vector<Profile> applicable_profiles(const CoxeterType& t) {
  CoxeterType u = normalize(t);
  std::vector<Profile> out{Profile::Standard};
  if (is_dihedral_m_ge_4(u)) out.push_back(Profile::RedefinedI2);
  if (u.family == Family::H && u.n == 2) out.push_back(Profile::H2Original);
  return out;
}

ParameterSet parameters(const CoxeterType& t, Profile profile, const std::optional<Rational>& beta_override) {
  const CoxeterType u = normalize(t);
  auto allowed = applicable_profiles(u);
  if (std::find(allowed.begin(), allowed.end(), profile) == allowed.end())
    throw Error(ErrorCode::ProfileMismatch,
                "profile " + std::string(to_string(profile)) + " does not apply to " + u.name());

  const std::int64_t r = u.n;
  ParameterSet p;
  if (profile == Profile::RedefinedI2 || u.family == Family::I2) {
    p = dihedral_row(u, profile);
  } else {
    switch (u.family) {
      case Family::A:
        if (r == 1)
          p = from_row(u, profile, {1, 2, 4, 1, 1, 1, 1, 1, 1, true});
        else
          p = from_row(u, profile, {r, r + 1, (r + 1) * (r + 1), 1, r, r, r, 1, r, true});
        break;
      case Family::B:
      case Family::C:
        p = from_row(u, profile, {r, 2 * r, 4 * r * r + 2 * r - 2, 2, r - 2, 2 * r, r, 2, r, true});
        break;
      case Family::D:
        p = from_row(u, profile,
                     {r, 2 * r - 2, (2 * r - 2) * (2 * r - 2), 2, r - 4, r, 2 * (r - 2), 2, r - 2, false});
        break;
      case Family::E:
        if (r == 6)
          p = from_row(u, profile, {6, 12, 144, 3, 0, 8, 9, 3, 4, false});
        else if (r == 7)
          p = from_row(u, profile, {7, 18, 324, 4, 0, 12, 14, 4, 6, false});
        else
          p = from_row(u, profile, {8, 30, 900, 6, 0, 20, 24, 6, 10, false});
        break;
      case Family::F: p = from_row(u, profile, {4, 12, 162, 4, 0, 8, 12, 4, 6, false}); break;
      case Family::G: p = from_row(u, profile, {2, 6, 48, 3, 0, 8, 3, 4, 3, true}); break;
      case Family::H:
        if (r == 2)
          p = from_row(u, profile, {2, 5, 31, 2, 1, 6, 2, 3, 2, true});
        else if (r == 3)
          p = from_row(u, profile, {3, 10, 124, 4, 0, 12, 6, 4, 6, true});
        else
          p = from_row(u, profile, {4, 30, 1116, 10, 0, 20, 36, 10, 18, false});
        break;
      case Family::I2: break;  // handled above
    }
  }

  if (beta_override) {
    if (!p.beta_free)
      throw Error(ErrorCode::BetaNotFree, "beta is determined by the table for " + u.name());
    if (beta_override->sign() <= 0)
      throw Error(ErrorCode::InvalidArgument, "beta override must be positive");
    p.beta = *beta_override;
    p.B = *beta_override;
  }
  return p;
}

ParameterSet parameters(const CoxeterType& t) { return parameters(t, default_profile(t)); }

DualPartition dual_partition(const ExponentList& e) {
  if (e.empty()) return {};
  const std::int64_t top = *std::max_element(e.begin(), e.end());
  DualPartition k(static_cast<std::size_t>(top), 0);
  for (std::int64_t j = 1; j <= top; ++j)
    k[static_cast<std::size_t>(j - 1)] = std::count_if(e.begin(), e.end(), [j](auto m) { return m >= j; });
  return k;
}

std::vector<CoxeterType> catalog(int max_rank, int max_m) {
  if (max_rank < 1 || max_m < 3)
    throw Error(ErrorCode::InvalidArgument, "catalog needs max_rank >= 1 and max_m >= 3");
  std::vector<CoxeterType> raw;
  for (int r = 1; r <= max_rank; ++r) raw.push_back({Family::A, r});
  for (int r = 2; r <= max_rank; ++r) raw.push_back({Family::C, r});
  for (int r = 4; r <= max_rank; ++r) raw.push_back({Family::D, r});
  for (CoxeterType t : {CoxeterType{Family::E, 6}, CoxeterType{Family::E, 7}, CoxeterType{Family::E, 8},
                        CoxeterType{Family::F, 4}, CoxeterType{Family::G, 2}, CoxeterType{Family::H, 2},
                        CoxeterType{Family::H, 3}, CoxeterType{Family::H, 4}})
    if (t.rank() <= max_rank) raw.push_back(t);
  for (int m = 3; m <= max_m; ++m) raw.push_back({Family::I2, m});

  std::vector<CoxeterType> out;
  for (const auto& t : raw) {
    CoxeterType u = normalize(t);
    if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
  }
  return out;
}

std::vector<CoxeterType> table_representatives() {
  return {{Family::A, 1}, {Family::A, 5}, {Family::C, 4}, {Family::D, 5}, {Family::E, 6},
          {Family::E, 7}, {Family::E, 8}, {Family::F, 4}, {Family::G, 2}, {Family::H, 2},
          {Family::H, 3}, {Family::H, 4}, {Family::I2, 7}, {Family::I2, 8}};
}

}  // namespace cox
