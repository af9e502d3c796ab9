#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "cox");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cox::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("info") {
  const Outcome e8 = run({"info", "E8", "--format", "json"});
  CHECK(e8.code == 0);
  const auto j = nlohmann::ordered_json::parse(e8.out);
  CHECK(j["h"] == 30);
  CHECK(j["gamma"] == 900);
  CHECK(j["V_plus"] == nlohmann::ordered_json::parse("[20,24]"));
  CHECK(j.dump() + "\n" == e8.out);

  const Outcome i9 = run({"info", "I2(9)", "--profile", "redefined", "--format", "json"});
  CHECK(i9.code == 0);
  CHECK(nlohmann::ordered_json::parse(i9.out)["d"] == "9/2");

  CHECK(run({"info", "E9"}).code == 2);
  CHECK(run({"info", "E8", "--profile", "redefined"}).code == 2);
  CHECK(run({"info", "E8", "--beta", "3"}).code == 2);
  CHECK(run({"info", "A3", "--beta", "7/3", "--format", "json"}).out.find("\"beta\":\"7/3\"") != std::string::npos);
  CHECK(run({"info", "E8", "--format", "yaml"}).code == 2);
}

TEST_CASE("powersum and heights") {
  const Outcome all = run({"powersum", "E8", "-n", "2", "--method", "all", "--format", "csv"});
  CHECK(all.code == 0);
  CHECK(count(all.out, ",2360") == 3);
  CHECK(run({"powersum", "A2", "-n", "5", "--method", "closed", "--format", "csv"}).out.find(",33") !=
        std::string::npos);
  CHECK(run({"powersum", "F4", "-n", "0", "--format", "csv"}).out.find(",4\n") != std::string::npos);
  CHECK(run({"powersum", "E8", "-n", "6", "--method", "closed"}).code == 2);
  CHECK(run({"powersum", "E8", "-n", "-1"}).code == 2);
  CHECK(run({"powersum", "E8", "-n", "3", "--p", "0"}).code == 2);
  CHECK(run({"powersum", "E8"}).code == 2);

  const Outcome h3 = run({"heights", "H3", "-n", "1", "--format", "json"});
  CHECK(h3.code == 0);
  CHECK(h3.out.find("formal height sum") != std::string::npos);
  CHECK(h3.out.find("\"value\":61") != std::string::npos);
  const Outcome e8 = run({"heights", "E8", "-n", "1", "--method", "all"});
  CHECK(e8.code == 0);
  CHECK(count(e8.out, "1240") == 3);
  CHECK(e8.out.find("formal") == std::string::npos);
  CHECK(run({"heights", "A2", "-n", "2", "--format", "csv"}).out.find(",6,") != std::string::npos);
}

TEST_CASE("table formats") {
  const Outcome csv = run({"table", "--all", "--max-rank", "8", "--n-max", "3", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.substr(0, csv.out.find('\n')) == "type,r,h,gamma,d,nu,alpha,beta,A,B,S0,S1,S2,S3");

  const Outcome tex = run({"table", "--types", "E6,E7,E8", "--format", "latex"});
  CHECK(tex.code == 0);
  CHECK(count(tex.out, "\\begin{tabular}") == 1);
  CHECK(count(tex.out, "\\end{tabular}") == 1);
  CHECK(count(tex.out, "\\\\\n") == 4);
  CHECK(tex.out.find("type & $r$ & $h$ & $\\gamma$ & $d$ & $A$ & $B$ & $\\alpha$ & $\\beta$ & $\\nu$") !=
        std::string::npos);

  const Outcome json = run({"table", "--types", "A1", "--n-max", "1", "--format", "json"});
  CHECK(json.out ==
        "[{\"type\":\"A1\",\"r\":1,\"h\":2,\"gamma\":4,\"d\":1,\"nu\":1,\"alpha\":1,\"beta\":1,\"A\":1,\"B\":1,"
        "\"S0\":1,\"S1\":1}]\n");
  CHECK(run({"table", "--types", "E8,X2"}).code == 2);
  CHECK(run({"table", "--n-max", "-2"}).code == 2);

  const Outcome big = run({"table", "--types", "E8", "--n-max", "13", "--method", "direct", "--format", "json"});
  const auto row = nlohmann::ordered_json::parse(big.out)[0];
  // 29^13 overflows int64, so S13 is a string
  CHECK(row["S12"].is_number_integer());
  CHECK(row["S13"].is_string());
  CHECK(run({"table", "--types", "E8", "--n-max", "13", "--format", "json"}).out == big.out);
}

TEST_CASE("verify") {
  const Outcome all = run({"verify", "--max-rank", "6", "--max-m", "10", "--n-max", "6"});
  CHECK(all.code == 0);
  CHECK(all.out.find("all suites passed") != std::string::npos);

  const Outcome expsum = run({"verify", "--suite", "expsum", "--max-rank", "4", "--max-m", "4"});
  CHECK(expsum.code == 0);
  // A1-A4, C2-C4 plus redefined C2, D4, F4, G2 x2, H2 x3, H3, H4
  CHECK(count(expsum.out, "PASS  ") == 17);

  const Outcome bad = run({"verify", "--suite", "gamma", "--inject-fault", "E8:gamma=901"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("901 != 900") != std::string::npos);

  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"verify", "--inject-fault", "E8:zeta=1"}).code == 2);
  CHECK(run({"verify", "--jobs", "0"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify output is byte-identical across seeds, env and jobs") {
  const std::vector<std::string> base{"verify", "--suite", "todd-symm", "--format", "json"};
  auto with = [&](std::vector<std::string> extra) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return run(args).out;
  };
  const std::string a = with({"--seed", "7"});
  CHECK(a == with({"--seed", "7"}));
  CHECK(a == with({"--seed", "7", "--jobs", "3"}));

  CHECK(a != with({"--seed", "8"}));
  CHECK(a.find("\"seed\": 7") != std::string::npos);

  ::setenv("COX_SEED", "7", 1);
  CHECK(with({}) == a);
  const std::string flag_wins = with({"--seed", "42"});
  ::unsetenv("COX_SEED");
  CHECK(flag_wins == with({"--seed", "42"}));
  CHECK(flag_wins.find("\"seed\": 42") != std::string::npos);
  ::setenv("COX_SEED", "oops", 1);
  CHECK(run(base).code == 2);
  ::unsetenv("COX_SEED");
}
