#include <doctest.h>

#include "cox/error.hpp"
#include "cox/powersum.hpp"
#include "support.hpp"

using namespace cox;

namespace {

Rational S(const char* type, int n) { return powersum_direct(parse_type(type), n).value; }

// Positive roots of A_r: r + 1 - k of them have height k.
Rational a_height_oracle(int r, int n) {
  BigInt total = 0;
  for (int k = 1; k <= r; ++k) {
    BigInt v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n));
    total += v * (r + 1 - k);
  }
  return Rational(total);
}

}  // namespace

TEST_CASE("direct power sum spot values") {
  CHECK(S("E8", 2) == 2360);
  CHECK(S("E8", 3) == 52200);
  CHECK(S("G2", 3) == 126);
  CHECK(S("A2", 4) == 17);
  CHECK(S("A2", 5) == 33);
  CHECK(S("E8", 0) == 8);
  CHECK(S("E8", 1) == 120);
  CHECK_THROWS_AS(powersum_direct(parse_type("A2"), -1), Error);
}

TEST_CASE("todd route matches direct sums over the catalog") {
  for (const auto& t : catalog(12, 30)) {
    CAPTURE(t.name());
    const ExponentList e = exponents(t);
    for (Profile prof : applicable_profiles(t)) {
      const ParameterSet params = parameters(t, prof);
      for (int p : {1, 2, 3}) {
        const auto todd = powersums_todd(params, 12, p);
        for (int n = 0; n <= 12; ++n) CHECK(todd[static_cast<std::size_t>(n)] == powersum_direct(e, n));
      }
    }
  }
  const PowerSumResult r = powersum_todd(parse_type("E8"), 5, 2);
  CHECK(r.method == Method::Todd);
  CHECK(r.value == S("E8", 5));
}

TEST_CASE("a free beta slot does not change the power sums") {
  for (const char* name : {"A4", "C5", "G2", "H3", "I2(9)"}) {
    CAPTURE(name);
    const CoxeterType t = parse_type(name);
    const ParameterSet params = parameters(t, default_profile(t), cox::testing::frac(17, 5));
    for (int n = 0; n <= 8; ++n) CHECK(powersum_todd(params, n, 1) == S(name, n));
  }
}

TEST_CASE("closed forms match for n <= 5") {
  for (const auto& t : catalog(12, 30)) {
    CAPTURE(t.name());
    for (int n = 0; n <= 5; ++n) CHECK(powersum_closed(t, n).value == powersum_direct(t, n).value);
  }
  try {
    powersum_closed(parse_type("E8"), 6);
    FAIL("expected UnsupportedDegree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedDegree);
  }
}

TEST_CASE("height sums") {
  const CoxeterType a2 = parse_type("A2");
  CHECK(heightsum_direct(a2, 0).value == 3);
  CHECK(heightsum_direct(a2, 1).value == 4);
  CHECK(heightsum_direct(a2, 2).value == 6);
  CHECK(heightsum_direct(a2, 3).value == 10);
  CHECK(heightsum_direct(a2, 4).value == 18);
  CHECK(heightsum_direct(parse_type("E8"), 1).value == 1240);
  CHECK(heightsum_direct(parse_type("H3"), 1).value == 61);

  for (int r = 1; r <= 9; ++r)
    for (int n = 0; n <= 6; ++n)
      CHECK(heightsum_direct(CoxeterType{Family::A, r}, n).value == a_height_oracle(r, n));

  for (const auto& t : catalog(10, 20)) {
    CAPTURE(t.name());
    for (int n = 0; n <= 4; ++n) CHECK(heightsum_closed(t, n).value == heightsum_direct(t, n).value);
    for (int n = 0; n <= 6; ++n)
      for (int p : {1, 2}) CHECK(heightsum_todd(t, n, p).value == heightsum_direct(t, n).value);
  }
  CHECK_THROWS_AS(heightsum_closed(a2, 5), Error);
}

TEST_CASE("r45 vanishes on A1") {
  // A1: h^2 - gamma - h + 2 = 0 and h - 2 = 0
  CHECK(r45(parameters(parse_type("A1"))) == 0);
}
