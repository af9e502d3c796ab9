#include "cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "cox/error.hpp"
#include "cox/verify.hpp"

namespace cox::cli {

namespace {

Json list_json(const std::vector<std::int64_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json list_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

std::string cell_text(const Json& v, const char* sep) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + cell_text(v[i], sep);
    return s;
  }
  return v.dump();
}

std::string latex_header(const std::string& key) {
  static const std::map<std::string, std::string> names{
      {"gamma", "$\\gamma$"}, {"alpha", "$\\alpha$"}, {"beta", "$\\beta$"}, {"nu", "$\\nu$"},
      {"r", "$r$"},           {"h", "$h$"},           {"d", "$d$"},         {"A", "$A$"},
      {"B", "$B$"},           {"n", "$n$"},           {"p", "$p$"}};
  if (auto it = names.find(key); it != names.end()) return it->second;
  if (key.size() > 1 && key[0] == 'S' && std::all_of(key.begin() + 1, key.end(), ::isdigit))
    return "$S_{" + key.substr(1) + "}$";
  std::string s;
  for (char c : key) s += (c == '_') ? std::string("\\_") : std::string(1, c);
  return s;
}

void render_latex(const Document& doc, std::ostream& out) {
  const auto& cols = doc.latex_columns.empty() ? doc.columns : doc.latex_columns;
  out << "\\begin{tabular}{l";
  for (std::size_t i = 1; i < cols.size(); ++i) out << 'r';
  out << "}\n";
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? " & " : "") << latex_header(cols[i]);
  out << " \\\\\n\\hline\n";
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? " & " : "") << cell_text(row[cols[i]], ", ");
    out << " \\\\\n";
  }
  out << "\\end{tabular}\n";
}

void render_pretty(const Document& doc, std::ostream& out) {
  if (doc.single && doc.rows.size() == 1) {
    std::size_t w = 0;
    for (const auto& c : doc.columns) w = std::max(w, c.size());
    for (const auto& c : doc.columns)
      out << c << std::string(w - c.size(), ' ') << "  " << cell_text(doc.rows[0][c], " ") << '\n';
    return;
  }
  std::vector<std::size_t> width;
  for (const auto& c : doc.columns) width.push_back(c.size());
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : doc.rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < doc.columns.size(); ++i) {
      line.push_back(cell_text(row[doc.columns[i]], " "));
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string s;
    for (std::size_t i = 0; i < line.size(); ++i) {
      s += line[i];
      if (i + 1 < line.size()) s += std::string(width[i] - line[i].size() + 2, ' ');
    }
    out << s << '\n';
  };
  emit(doc.columns);
  for (const auto& line : cells) emit(line);
}

bool is_formal(const CoxeterType& t) { return !is_crystallographic(t); }

// ---------------------------------------------------------------------------

struct Options {
  std::string type_text;
  std::string profile_text;
  std::string beta_text;
  std::string method_text = "todd";
  std::string format_text = "pretty";
  std::string suite_text = "all";
  std::string fault_text;
  std::vector<std::string> types;
  bool all = false;
  int n = 0;
  int p = 1;
  int max_rank = 12;
  int max_m = 30;
  int n_max = 12;
  std::uint64_t seed = 42;
  int jobs = 1;
};

CoxeterType read_type(const Options& o) { return normalize(parse_type(o.type_text)); }

Profile read_profile(const Options& o, const CoxeterType& t) {
  return o.profile_text.empty() ? default_profile(t) : parse_profile(o.profile_text);
}

std::optional<Rational> read_beta(const Options& o) {
  if (o.beta_text.empty()) return std::nullopt;
  return Rational::parse(o.beta_text);
}

std::vector<Method> read_methods(const std::string& text, bool closed_ok) {
  if (text == "direct") return {Method::Direct};
  if (text == "todd") return {Method::Todd};
  if (text == "closed") return {Method::Closed};
  if (text == "all") {
    if (closed_ok) return {Method::Direct, Method::Todd, Method::Closed};
    return {Method::Direct, Method::Todd};
  }
  throw Error(ErrorCode::ParseError, "unknown method '" + text + "'");
}

int cmd_info(const Options& o, std::ostream& out) {
  const CoxeterType t = read_type(o);
  render(info_document(t, read_profile(o, t), read_beta(o)), parse_format(o.format_text), out);
  return 0;
}

int cmd_exponents(const Options& o, std::ostream& out) {
  render(exponents_document(read_type(o)), parse_format(o.format_text), out);
  return 0;
}

int finish_methods(Document& doc, const Options& o, std::ostream& out, std::ostream& err) {
  render(doc, parse_format(o.format_text), out);
  for (const auto& row : doc.rows)
    if (row["value"] != doc.rows.front()["value"]) {
      err << "error: methods disagree for " << o.type_text << " n=" << o.n << '\n';
      return 1;
    }
  return 0;
}

int cmd_powersum(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n < 0) throw Error(ErrorCode::InvalidArgument, "n must be nonnegative");
  const CoxeterType t = read_type(o);
  const ParameterSet params = parameters(t, read_profile(o, t), read_beta(o));
  Document doc;
  doc.columns = {"type", "n", "method", "p", "value"};
  for (Method m : read_methods(o.method_text, o.n <= 5)) {
    Rational v;
    switch (m) {
      case Method::Direct: v = powersum_direct(exponents(t), o.n); break;
      case Method::Todd: v = powersum_todd(params, o.n, o.p); break;
      case Method::Closed: v = powersum_closed(params, o.n); break;
    }
    doc.rows.push_back(Json{{"type", t.name()},
                            {"n", o.n},
                            {"method", std::string(to_string(m))},
                            {"p", m == Method::Todd ? Json(o.p) : Json()},
                            {"value", to_json(v)}});
  }
  return finish_methods(doc, o, out, err);
}

int cmd_heights(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n < 0) throw Error(ErrorCode::InvalidArgument, "n must be nonnegative");
  const CoxeterType t = read_type(o);
  const ParameterSet params = parameters(t, read_profile(o, t), read_beta(o));
  const std::string label = is_formal(t) ? "formal height sum" : "height sum";
  Document doc;
  doc.columns = {"type", "n", "method", "value", "label"};
  for (Method m : read_methods(o.method_text, o.n <= 4)) {
    Rational v;
    switch (m) {
      case Method::Direct: v = heightsum_direct(exponents(t), o.n); break;
      case Method::Todd: v = heightsum_todd(params, o.n, o.p); break;
      case Method::Closed: v = heightsum_closed(params, o.n); break;
    }
    doc.rows.push_back(Json{{"type", t.name()},
                            {"n", o.n},
                            {"method", std::string(to_string(m))},
                            {"value", to_json(v)},
                            {"label", label}});
  }
  return finish_methods(doc, o, out, err);
}

int cmd_table(const Options& o, std::ostream& out) {
  if (o.n_max < 0) throw Error(ErrorCode::InvalidArgument, "n-max must be nonnegative");
  std::vector<CoxeterType> types;
  if (o.all || o.types.empty()) {
    types = catalog(o.max_rank, o.max_m);
  } else {
    for (const auto& s : o.types) types.push_back(normalize(parse_type(s)));
  }
  const auto methods = read_methods(o.method_text, false);
  if (methods.size() != 1) throw Error(ErrorCode::InvalidArgument, "table takes --method direct or todd");
  render(table_document(types, o.n_max, methods.front(), o.p), parse_format(o.format_text), out);
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  RunOptions run;
  run.max_rank = o.max_rank;
  run.max_m = o.max_m;
  run.n_max = o.n_max;
  run.seed = o.seed;
  run.jobs = o.jobs;
  if (o.suite_text != "all") run.suites = {parse_suite(o.suite_text)};
  if (!o.fault_text.empty()) run.fault = Fault::parse(o.fault_text);
  if (o.max_rank < 1 || o.max_m < 3 || o.n_max < 0 || o.jobs < 1)
    throw Error(ErrorCode::InvalidArgument, "need max-rank >= 1, max-m >= 3, n-max >= 0, jobs >= 1");

  const std::vector<CheckReport> reports = run_all(run);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });

  if (o.format_text == "json") {
    Json a = Json::array();
    for (const auto& r : reports)
      a.push_back(Json{{"suite", r.suite},
                       {"subject", r.subject},
                       {"passed", r.passed},
                       {"checks", r.checks},
                       {"witness", r.witness ? Json(*r.witness) : Json()},
                       {"note", r.note}});
    out << Json{{"seed", o.seed}, {"passed", ok}, {"reports", a}}.dump(2) << '\n';
    return ok ? 0 : 1;
  }
  if (o.format_text != "pretty") throw Error(ErrorCode::InvalidArgument, "verify supports --format pretty or json");
  out << "seed " << o.seed << '\n';

  if (!run.suites.empty()) {
    std::size_t passed = 0;
    for (const auto& r : reports) {
      out << (r.passed ? "PASS  " : "FAIL  ") << r.subject;
      if (!r.note.empty()) out << "  (" << r.note << ')';
      if (!r.passed && r.witness) out << "  witness: " << *r.witness;
      out << '\n';
      passed += r.passed;
    }
    out << o.suite_text << ": " << passed << '/' << reports.size() << " passed\n";
    return ok ? 0 : 1;
  }

  for (Suite s : all_suites()) {
    const std::string name(to_string(s));
    std::size_t total = 0, passed = 0;
    const CheckReport* first_bad = nullptr;
    for (const auto& r : reports) {
      if (r.suite != name) continue;
      ++total;
      if (r.passed) ++passed;
      else if (!first_bad) first_bad = &r;
    }
    out << name << std::string(name.size() < 16 ? 16 - name.size() : 1, ' ') << (first_bad ? "FAIL  " : "PASS  ")
        << passed << '/' << total;
    if (first_bad) out << "  first witness: " << first_bad->subject << ": " << first_bad->witness.value_or("");
    out << '\n';
  }
  out << (ok ? "all suites passed" : "verification failed") << '\n';
  return ok ? 0 : 1;
}

}  // namespace

Json to_json(const Rational& v) {
  if (auto i = v.to_int64()) return *i;
  return v.to_string();
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "latex") return Format::Latex;
  if (text == "pretty") return Format::Pretty;
  throw Error(ErrorCode::ParseError, "unknown format '" + text + "'");
}

void render(const Document& doc, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json: {
      if (doc.single && doc.rows.size() == 1) {
        out << doc.rows.front().dump() << '\n';
      } else {
        Json a = Json::array();
        for (const auto& r : doc.rows) a.push_back(r);
        out << a.dump() << '\n';
      }
      break;
    }
    case Format::Csv:
      for (std::size_t i = 0; i < doc.columns.size(); ++i) out << (i ? "," : "") << doc.columns[i];
      out << '\n';
      for (const auto& row : doc.rows) {
        for (std::size_t i = 0; i < doc.columns.size(); ++i) out << (i ? "," : "") << cell_text(row[doc.columns[i]], " ");
        out << '\n';
      }
      break;
    case Format::Latex: render_latex(doc, out); break;
    case Format::Pretty: render_pretty(doc, out); break;
  }
}

Document info_document(const CoxeterType& t, Profile profile, const std::optional<Rational>& beta) {
  const CoxeterType u = normalize(t);
  const ParameterSet p = parameters(u, profile, beta);
  Document doc;
  doc.single = true;
  doc.columns = {"type",  "profile", "r",      "h",         "gamma",     "d",        "nu",
                 "alpha", "beta",    "A",      "B",         "beta_free", "V_plus",   "V_minus",
                 "exponents", "dual_partition"};
  doc.latex_columns = {"type", "r", "h", "gamma", "d", "A", "B", "alpha", "beta", "nu"};
  doc.rows.push_back(Json{{"type", u.name()},
                          {"profile", std::string(to_string(profile))},
                          {"r", to_json(p.r)},
                          {"h", to_json(p.h)},
                          {"gamma", to_json(p.gamma)},
                          {"d", to_json(p.d)},
                          {"nu", to_json(p.nu)},
                          {"alpha", to_json(p.alpha)},
                          {"beta", to_json(p.beta)},
                          {"A", to_json(p.A)},
                          {"B", to_json(p.B)},
                          {"beta_free", p.beta_free},
                          {"V_plus", list_json(p.v_plus())},
                          {"V_minus", list_json(p.v_minus())},
                          {"exponents", list_json(exponents(u))},
                          {"dual_partition", list_json(dual_partition(exponents(u)))}});
  return doc;
}

Document exponents_document(const CoxeterType& t) {
  const CoxeterType u = normalize(t);
  Document doc;
  doc.single = true;
  doc.columns = {"type", "exponents", "dual_partition"};
  doc.rows.push_back(Json{{"type", u.name()},
                          {"exponents", list_json(exponents(u))},
                          {"dual_partition", list_json(dual_partition(exponents(u)))}});
  return doc;
}

Document table_document(const std::vector<CoxeterType>& types, int n_max, Method method, int p) {
  Document doc;
  doc.columns = {"type", "r", "h", "gamma", "d", "nu", "alpha", "beta", "A", "B"};
  doc.latex_columns = {"type", "r", "h", "gamma", "d", "A", "B", "alpha", "beta", "nu"};
  for (int n = 0; n <= n_max; ++n) {
    doc.columns.push_back("S" + std::to_string(n));
    doc.latex_columns.push_back("S" + std::to_string(n));
  }
  for (const auto& t : types) {
    const CoxeterType u = normalize(t);
    const ParameterSet ps = parameters(u);
    Json row{{"type", u.name()},       {"r", to_json(ps.r)},         {"h", to_json(ps.h)},
             {"gamma", to_json(ps.gamma)}, {"d", to_json(ps.d)},      {"nu", to_json(ps.nu)},
             {"alpha", to_json(ps.alpha)}, {"beta", to_json(ps.beta)}, {"A", to_json(ps.A)},
             {"B", to_json(ps.B)}};
    if (method == Method::Todd) {
      const auto s = powersums_todd(ps, n_max, p);
      for (int n = 0; n <= n_max; ++n) row["S" + std::to_string(n)] = to_json(s[static_cast<std::size_t>(n)]);
    } else {
      const ExponentList e = exponents(u);
      for (int n = 0; n <= n_max; ++n) row["S" + std::to_string(n)] = to_json(powersum_direct(e, n));
    }
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power sums of Coxeter exponents and root heights, in exact arithmetic", "cox"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format_text, "json, csv, latex or pretty")
        ->check(CLI::IsMember({"json", "csv", "latex", "pretty"}));
  };
  auto add_type = [&](CLI::App* sub) {
    sub->add_option("type", o.type_text, "Coxeter type, e.g. E8, C5/B5, I2(7)")->required();
    sub->add_option("--profile", o.profile_text, "standard, redefined or h2-original")
        ->check(CLI::IsMember({"standard", "redefined", "redefined-i2", "h2-original"}));
    sub->add_option("--beta", o.beta_text, "value for a free beta slot");
  };
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("-n,--n", o.n, "power")->required();
    sub->add_option("--method", o.method_text, "direct, todd, closed or all")
        ->check(CLI::IsMember({"direct", "todd", "closed", "all"}));
    sub->add_option("--p", o.p, "root factor parameter")->check(CLI::PositiveNumber);
  };

  CLI::App* info = app.add_subcommand("info", "Table parameters of a type");
  add_type(info);
  add_format(info);
  CLI::App* exps = app.add_subcommand("exponents", "Exponents and dual partition");
  exps->add_option("type", o.type_text)->required();
  add_format(exps);
  CLI::App* ps = app.add_subcommand("powersum", "Power sum of exponents");
  add_type(ps);
  add_method(ps);
  add_format(ps);
  CLI::App* hs = app.add_subcommand("heights", "Power sum of positive root heights");
  add_type(hs);
  add_method(hs);
  add_format(hs);
  CLI::App* table = app.add_subcommand("table", "Parameters and power sums for many types");
  table->add_option("--types", o.types, "comma-separated types")->delimiter(',');
  table->add_flag("--all", o.all, "every type in catalog(max-rank, max-m)");
  table->add_option("--max-rank", o.max_rank);
  table->add_option("--max-m", o.max_m);
  table->add_option("--n-max", o.n_max);
  table->add_option("--method", o.method_text, "direct or todd")->check(CLI::IsMember({"direct", "todd"}));
  table->add_option("--p", o.p)->check(CLI::PositiveNumber);
  o.method_text = "todd";
  add_format(table);
  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", o.suite_text, "all or one suite name");
  verify->add_option("--max-rank", o.max_rank);
  verify->add_option("--max-m", o.max_m);
  verify->add_option("--n-max", o.n_max);
  verify->add_option("--seed", o.seed)->envname("COX_SEED");
  verify->add_option("--jobs", o.jobs);
  verify->add_option("--inject-fault", o.fault_text)->group("");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*info) return cmd_info(o, out);
    if (*exps) return cmd_exponents(o, out);
    if (*ps) return cmd_powersum(o, out, err);
    if (*hs) return cmd_heights(o, out, err);
    if (*table) return cmd_table(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InternalMismatch ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace cox::cli
