#include <doctest.h>

#include <algorithm>
#include <set>

#include "cox/catalog.hpp"
#include "cox/error.hpp"
#include "support.hpp"

using namespace cox;
using cox::testing::frac;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("parse_type") {
  CHECK(parse_type("E8") == CoxeterType{Family::E, 8});
  CHECK(parse_type("e8") == CoxeterType{Family::E, 8});
  CHECK(parse_type("I2(7)") == CoxeterType{Family::I2, 7});
  CHECK(parse_type("i2(12)") == CoxeterType{Family::I2, 12});
  CHECK(parse_type("C5/B5") == CoxeterType{Family::C, 5});
  CHECK(code_of([] { parse_type("D3"); }) == ErrorCode::RangeError);
  CHECK(code_of([] { parse_type("E9"); }) == ErrorCode::RangeError);
  CHECK(code_of([] { parse_type("I2(2)"); }) == ErrorCode::RangeError);
  CHECK(code_of([] { parse_type("A0"); }) == ErrorCode::RangeError);
  CHECK(code_of([] { parse_type("B1"); }) == ErrorCode::RangeError);
  CHECK(code_of([] { parse_type("F5"); }) == ErrorCode::RangeError);
  CHECK(code_of([] { parse_type("X3"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_type("I7"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_type("E"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_type("E8x"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_type(""); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_type("C5/B4"); }) == ErrorCode::ParseError);
}

TEST_CASE("normalize") {
  CHECK(normalize(parse_type("B5")).name() == "C5/B5");
  CHECK(normalize(parse_type("I2(6)")).name() == "G2");
  CHECK(normalize(parse_type("I2(5)")).name() == "H2");
  CHECK(normalize(parse_type("I2(4)")).name() == "C2/B2");
  CHECK(normalize(parse_type("I2(3)")).name() == "A2");
  CHECK(normalize(parse_type("E7")).name() == "E7");
  CHECK(normalize(parse_type("I2(9)")).name() == "I2(9)");
}

TEST_CASE("exponents") {
  CHECK(exponents(parse_type("E8")) == ExponentList{1, 7, 11, 13, 17, 19, 23, 29});
  CHECK(exponents(parse_type("D5")) == ExponentList{1, 3, 4, 5, 7});
  CHECK(exponents(parse_type("D4")) == ExponentList{1, 3, 3, 5});
  CHECK(exponents(parse_type("I2(7)")) == ExponentList{1, 6});
  CHECK(exponents(parse_type("B3")) == ExponentList{1, 3, 5});
  CHECK(coxeter_number(parse_type("H4")) == 30);
}

TEST_CASE("exponent invariants over the catalog") {
  for (const auto& t : catalog(12, 30)) {
    CAPTURE(t.name());
    const ExponentList e = exponents(t);
    const std::int64_t h = coxeter_number(t);
    REQUIRE(static_cast<int>(e.size()) == t.rank());
    CHECK(e.front() == 1);
    CHECK(std::is_sorted(e.begin(), e.end()));
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      CHECK(e[i] + e[e.size() - 1 - i] == h);
      sum += e[i];
    }
    CHECK(2 * sum == t.rank() * h);
    const DualPartition k = dual_partition(e);
    CHECK(static_cast<std::int64_t>(k.size()) == h - 1);
    CHECK(std::is_sorted(k.rbegin(), k.rend()));
    std::int64_t total = 0;
    for (auto x : k) total += x;
    CHECK(2 * total == t.rank() * h);
  }
}

TEST_CASE("dual_partition") {
  CHECK(dual_partition({1, 5}) == DualPartition{2, 1, 1, 1, 1});
  CHECK(dual_partition({1, 2}) == DualPartition{2, 1});
  CHECK(dual_partition({1}) == DualPartition{1});
}

TEST_CASE("parameters match the table rows") {
  const ParameterSet e8 = parameters(parse_type("E8"));
  CHECK(e8.r == 8);
  CHECK(e8.h == 30);
  CHECK(e8.gamma == 900);
  CHECK(e8.d == 6);
  CHECK(e8.nu == 0);
  CHECK(sorted(e8.v_plus()) == std::vector<Rational>{20, 24});
  CHECK(sorted(e8.v_minus()) == std::vector<Rational>{6, 10});

  const ParameterSet h4 = parameters(parse_type("H4"));
  CHECK(h4.r == 4);
  CHECK(h4.h == 30);
  CHECK(h4.gamma == 1116);
  CHECK(h4.d == 10);
  CHECK(sorted(h4.v_plus()) == std::vector<Rational>{20, 36});
  CHECK(sorted(h4.v_minus()) == std::vector<Rational>{10, 18});

  // gamma = 2*49 - 35 + 6; V+- from d = 7/2, nu = 0
  const ParameterSet i7 = parameters(parse_type("I2(7)"), Profile::RedefinedI2);
  CHECK(i7.r == 2);
  CHECK(i7.h == 7);
  CHECK(i7.gamma == 69);
  CHECK(i7.d == frac(7, 2));
  CHECK(i7.nu == 0);
  CHECK(sorted(i7.v_plus()) == std::vector<Rational>{frac(7, 2), 10});
  CHECK(sorted(i7.v_minus()) == std::vector<Rational>{frac(7, 2), 5});

  const ParameterSet i7s = parameters(parse_type("I2(7)"), Profile::Standard);
  CHECK(i7s.d == 3);
  CHECK(i7s.nu == 1);

  const ParameterSet a1 = parameters(parse_type("A1"));
  CHECK(a1.alpha == 1);
  CHECK(a1.beta == 1);
  CHECK(a1.gamma == 4);

  CHECK(parameters(parse_type("C4")).gamma == 4 * 16 + 8 - 2);
  CHECK(parameters(parse_type("D6")).gamma == 100);
  CHECK(parameters(parse_type("G2")).beta == 3);
  CHECK(parameters(parse_type("H2")).beta == 2);
  CHECK(parameters(parse_type("H3")).beta == 6);
  CHECK(parameters(parse_type("A5")).beta == 5);
  CHECK(parameters(parse_type("B5")).beta == 5);
}

TEST_CASE("profiles") {
  CHECK(default_profile(parse_type("I2(9)")) == Profile::RedefinedI2);
  CHECK(default_profile(parse_type("H2")) == Profile::Standard);
  CHECK(default_profile(parse_type("E8")) == Profile::Standard);
  CHECK(code_of([] { parameters(parse_type("E8"), Profile::RedefinedI2); }) == ErrorCode::ProfileMismatch);
  CHECK(code_of([] { parameters(parse_type("G2"), Profile::H2Original); }) == ErrorCode::ProfileMismatch);
  CHECK(parameters(parse_type("H2"), Profile::H2Original).d == 2);
  CHECK(parameters(parse_type("H2"), Profile::RedefinedI2).d == frac(5, 2));
  CHECK(parse_profile("redefined") == Profile::RedefinedI2);
  CHECK(parse_profile("h2-original") == Profile::H2Original);

  // For C2 and G2 the dihedral row and the letter row coincide.
  for (const char* name : {"C2", "G2"}) {
    const ParameterSet a = parameters(parse_type(name), Profile::Standard);
    const ParameterSet b = parameters(parse_type(name), Profile::RedefinedI2);
    CHECK(a.h == b.h);
    CHECK(a.gamma == b.gamma);
    CHECK(a.d == b.d);
    CHECK(a.nu == b.nu);
    CHECK(sorted(a.v_plus()) == sorted(b.v_plus()));
    CHECK(sorted(a.v_minus()) == sorted(b.v_minus()));
  }
}

TEST_CASE("beta override") {
  const ParameterSet a3 = parameters(parse_type("A3"), Profile::Standard, frac(7, 3));
  CHECK(a3.beta == frac(7, 3));
  CHECK(a3.B == frac(7, 3));
  CHECK(code_of([] { parameters(parse_type("E8"), Profile::Standard, Rational(3)); }) == ErrorCode::BetaNotFree);
  CHECK(code_of([] { parameters(parse_type("A3"), Profile::Standard, Rational(-1)); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("multiset product law and alpha = m2 - 1 over the catalog") {
  for (const auto& t : catalog(12, 30)) {
    for (Profile prof : applicable_profiles(t)) {
      CAPTURE(t.name());
      const ParameterSet p = parameters(t, prof);
      CHECK(p.A * p.B == Rational(static_cast<long>(p.r)) * p.alpha * p.beta);
      if (p.r >= 2) {
        const auto e = exponents(t);
        CHECK((p.alpha == e[1] - 1 || p.beta == e[1] - 1));
      }
    }
  }
}

TEST_CASE("catalog") {
  auto names = [](const std::vector<CoxeterType>& v) {
    std::vector<std::string> out;
    for (const auto& t : v) out.push_back(t.name());
    return out;
  };
  CHECK(names(catalog(1, 3)) == std::vector<std::string>{"A1", "A2"});
  const auto c46 = names(catalog(4, 6));
  for (const char* want : {"D4", "F4", "H4", "G2", "H2", "C2/B2"})
    CHECK(std::find(c46.begin(), c46.end(), want) != c46.end());
  const auto big = catalog(12, 30);
  CHECK(std::set<CoxeterType>(big.begin(), big.end()).size() == big.size());
  CHECK(big.front().name() == "A1");
  CHECK(big.back().name() == "I2(30)");
  CHECK(code_of([] { catalog(0, 3); }) == ErrorCode::InvalidArgument);
  CHECK(table_representatives().size() == 14);
}
