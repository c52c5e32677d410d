#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "polycf/analysis.hpp"
#include "polycf/json_io.hpp"
#include "polycf/transforms.hpp"

namespace polycf::cli {

namespace {

using json_io::Json;

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

// ---- Output ---------------------------------------------------------------------

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void print_rows(const Json& rows, std::ostream& out, const std::string& indent) {
  std::vector<std::string> cols;
  for (const auto& row : rows) {
    for (const auto& [key, _] : row.items()) {
      if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
    }
  }
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    width[c] = cols[c].size();
    for (const auto& row : rows) {
      if (row.contains(cols[c])) width[c] = std::max(width[c], cell(row[cols[c]]).size());
    }
  }
  auto line = [&](auto&& text_of) {
    std::string s = indent;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::string t = text_of(c);
      if (c + 1 < cols.size()) t.resize(width[c] + 2, ' ');
      s += t;
    }
    out << s << '\n';
  };
  line([&](std::size_t c) { return cols[c]; });
  for (const auto& row : rows) {
    line([&](std::size_t c) { return row.contains(cols[c]) ? cell(row[cols[c]]) : std::string("-"); });
  }
}

bool is_table(const Json& j) {
  return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& r) { return r.is_object(); });
}

void print_table(const Json& j, std::ostream& out, const std::string& indent = "") {
  if (is_table(j)) {
    print_rows(j, out, indent);
    return;
  }
  if (!j.is_object()) {
    out << indent << cell(j) << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [key, _] : j.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : j.items()) {
    if (is_table(value) || (value.is_object() && !value.empty())) {
      out << indent << key << ":\n";
      print_table(value, out, indent + "  ");
    } else {
      std::string k = key;
      k.resize(width + 2, ' ');
      out << indent << k << cell(value) << '\n';
    }
  }
}

void emit(const Json& j, const std::string& format, std::ostream& out) {
  if (format == "table") print_table(j, out);
  else out << j.dump(2) << '\n';
}

// ---- Inputs ---------------------------------------------------------------------

struct Common {
  long terms = 64;
  std::string tol = "1e-10";
  long bits = 128;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::string preset;
  std::string input;
  bool allow_unverified = false;
};

Params extra_params(const std::vector<std::string>& extras) {
  Params params;
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& arg = extras[i];
    if (arg.rfind("--", 0) != 0 || arg.size() < 3) malformed("unexpected argument \"" + arg + "\"");
    std::string key = arg.substr(2);
    std::string value;
    if (auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key.resize(eq);
    } else {
      if (i + 1 >= extras.size()) malformed("parameter --" + key + " needs a value");
      value = extras[++i];
    }
    params[key] = value;
  }
  return params;
}

std::string read_input(const std::string& source) {
  if (!source.empty() && source.front() == '{') return source;
  std::stringstream ss;
  if (source == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(source);
    if (!in) malformed("cannot read input \"" + source + "\"");
    ss << in.rdbuf();
  }
  return ss.str();
}

FamilyMember load_member(const Common& c, const Params& params) {
  if (c.preset.empty()) malformed("--preset is required");
  return make_preset(c.preset, params, c.allow_unverified ? Check::Lenient : Check::Strict);
}

CFSpec load_cf(const Common& c, const Params& params) {
  if (!c.input.empty() && !c.preset.empty()) malformed("give either --input or --preset, not both");
  if (!c.input.empty()) {
    if (!params.empty()) malformed("preset parameters given without --preset");
    return json_io::parse_cf(read_input(c.input));
  }
  if (c.preset.empty()) malformed("one of --input or --preset is required");
  return load_member(c, params).cf;
}

Real parse_tol(const Common& c) {
  Real tol = Real::from_string(c.tol, std::max(c.bits, 64L));
  if (tol.sign() < 0) malformed("--tol must be non-negative");
  return tol;
}

// Values of an expression in n for n = from..to, or an explicit comma list.
std::vector<Rational> sequence(const std::string& expr, const std::string& values, long from, long to,
                               const char* what) {
  std::vector<Rational> out;
  if (!values.empty()) {
    std::stringstream ss(values);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
  }
  if (expr.empty()) malformed(std::string("missing ") + what);
  const RationalFunction f = parse_ratfn(expr);
  for (long n = from; n <= to; ++n) out.push_back(f(n));
  return out;
}

// ---- reproduce-paper --------------------------------------------------------------

struct SuiteCase {
  std::string criterion;
  std::string preset;
  Params params;
  long terms;
  std::string tol;
  long bits;
};

std::vector<SuiteCase> paper_suite() {
  std::vector<SuiteCase> s;
  // |4/v - pi| < 1e-3 follows from |v - 4/pi| < 1e-3 v/pi, and v/pi > 0.405.
  s.push_back({"2a", "brouncker", {}, 10000, "4e-4", 128});
  for (const char* f : {"1", "n", "n^2"}) {
    for (const char* m : {"1", "2", "3"}) s.push_back({"2b", "ex1.1", {{"f", f}, {"m", m}}, 100, "1e-8", 128});
  }
  for (const char* id : {"ex2.2", "ex2.4", "ex2.5"}) s.push_back({"2c", id, {}, 100, "1e-8", 128});
  for (int A = 1; A <= 5; ++A) s.push_back({"2d", "ex3.3", {{"A", std::to_string(A)}}, 10000, "1e-3", 128});
  for (int A = 1; A <= 3; ++A) s.push_back({"2e", "ex3.4", {{"k", "2"}, {"A", std::to_string(A)}}, 200, "1e-4", 128});
  for (int A = 1; A <= 3; ++A) s.push_back({"2e", "ex3.4", {{"k", "3"}, {"A", std::to_string(A)}}, 400, "1e-6", 128});
  for (int A = 1; A <= 3; ++A) {
    s.push_back({"2e", "ex3.4", {{"k", "11"}, {"A", std::to_string(A)}}, 200, "1e-20", 192});
  }
  for (int A = 1; A <= 3; ++A) s.push_back({"2f", "ex3.5", {{"A", std::to_string(A)}}, 120, "1e-12", 128});
  for (int A = -1; A <= 1; ++A) s.push_back({"2g", "ex4.2", {{"A", std::to_string(A)}}, 10000, "1e-3", 128});
  for (int A = 0; A <= 3; ++A) s.push_back({"2h", "ex5.6", {{"A", std::to_string(A)}}, 60, "1e-10", 128});
  s.push_back({"2i", "entry13", {}, 200, "1e-6", 128});
  return s;
}

std::string report_file_name(const SuiteCase& c) {
  std::string name = c.criterion + "_" + c.preset;
  for (const auto& [k, v] : c.params) name += "_" + k + "=" + v;
  for (char& ch : name) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '=' && ch != '.' && ch != '-') ch = '_';
  }
  return name + ".json";
}

int reproduce_paper(long jobs, const std::string& out_dir, const std::string& format, std::ostream& out) {
  const auto suite = paper_suite();
  std::vector<Json> reports(suite.size());
  std::vector<std::exception_ptr> errors(suite.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < suite.size(); i = next++) {
      const SuiteCase& c = suite[i];
      try {
        const FamilyMember m = make_preset(c.preset, c.params);
        const Real tol = Real::from_string(c.tol, c.bits);
        const auto rep = verify_limit(m, c.terms, c.bits, tol);
        reports[i] = json_io::to_json(rep);
        // The criteria bound the discrepancy itself, not just its consistency with the error bound.
        reports[i]["within_tolerance"] = rep.abs_err <= tol;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const long n_threads = std::clamp<long>(jobs, 1, static_cast<long>(suite.size()));
  std::vector<std::thread> pool;
  for (long t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < suite.size(); ++i) {
      std::ofstream f(std::filesystem::path(out_dir) / report_file_name(suite[i]), std::ios::trunc);
      f << reports[i].dump(2) << '\n';
    }
  }

  Json criteria = Json::array();
  bool all_pass = true;
  for (std::size_t i = 0; i < suite.size();) {
    Json entry{{"criterion", suite[i].criterion}, {"verdict", "Pass"}, {"reports", Json::array()}};
    for (; i < suite.size() && suite[i].criterion == entry["criterion"]; ++i) {
      if (reports[i]["verdict"] != "Pass" || reports[i]["within_tolerance"] != true) entry["verdict"] = "Fail";
      entry["reports"].push_back(reports[i]);
    }
    all_pass = all_pass && entry["verdict"] == "Pass";
    criteria.push_back(std::move(entry));
  }

  if (format == "table") {
    Json rows = Json::array();
    for (std::size_t i = 0; i < suite.size(); ++i) {
      std::string params;
      for (const auto& [k, v] : suite[i].params) params += (params.empty() ? "" : ",") + k + "=" + v;
      rows.push_back(Json{{"criterion", suite[i].criterion},
                          {"preset", suite[i].preset},
                          {"params", params.empty() ? "-" : params},
                          {"terms", suite[i].terms},
                          {"abs_err", reports[i]["abs_err"]},
                          {"tolerance", reports[i]["tolerance"]},
                          {"within", reports[i]["within_tolerance"] == true ? "yes" : "no"},
                          {"verdict", reports[i]["verdict"]}});
    }
    print_rows(rows, out, "");
    out << "overall: " << (all_pass ? "Pass" : "Fail") << '\n';
  } else {
    out << Json{{"criteria", criteria}, {"verdict", all_pass ? "Pass" : "Fail"}}.dump(2) << '\n';
  }
  return all_pass ? kOk : kNotVerified;
}

// ---- Dispatch ---------------------------------------------------------------------

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::MalformedInput || kind == ErrorKind::InvalidArgument ? kMalformedInput
                                                                                  : kHypothesisViolation;
}

void add_common(CLI::App* cmd, Common& c, bool with_input) {
  cmd->add_option("--terms", c.terms, "Number of terms")->capture_default_str();
  cmd->add_option("--tol", c.tol, "Tolerance")->capture_default_str();
  cmd->add_option("--precision-bits", c.bits, "Working precision in bits")->capture_default_str();
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  cmd->add_option("--seed", c.seed, "Seed for randomized commands");
  cmd->add_option("--preset", c.preset, "Preset id; extra --key value pairs set its parameters");
  if (with_input) cmd->add_option("--input", c.input, "CF JSON: a file, '-' for stdin, or inline text");
  cmd->add_flag("--allow-unverified", c.allow_unverified, "Build presets whose hypotheses fail");
  cmd->allow_extras();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  set_constant_cache_dir(constant_cache_dir_from_env());

  CLI::App app{"Polynomial continued fractions: evaluate, transform, certify and verify", "polycf"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "polycf 1.0.0");
  Common c;

  auto* eval = app.add_subcommand("eval", "Evaluate a fraction to tolerance");
  add_common(eval, c, true);
  auto* conv = app.add_subcommand("convergents", "Exact canonical numerators and denominators");
  add_common(conv, c, true);

  auto* transform = app.add_subcommand("transform", "Apply a transform and print the resulting CF JSON");
  add_common(transform, c, true);
  std::string op, series, values, perturbation, perturbation_values, w_expr, w_values;
  transform->add_option("--op", op, "Transform")
      ->required()
      ->check(CLI::IsMember(
          {"bernoulli", "euler", "gen-euler", "product", "gen-product", "even", "odd", "bauer-muir", "extend"}));
  transform->add_option("--series", series, "Series or product term as an expression in n");
  transform->add_option("--values", values, "Explicit comma-separated terms");
  transform->add_option("--perturbation", perturbation, "Perturbation b_n as an expression in n");
  transform->add_option("--perturbation-values", perturbation_values, "Explicit perturbation values b_0, b_1, ...");
  transform->add_option("--w", w_expr, "Modifying sequence w_n as an expression in n");
  transform->add_option("--w-values", w_values, "Explicit w_0, w_1, ...");

  auto* family = app.add_subcommand("family", "Build a family member from a preset");
  add_common(family, c, false);
  auto* presets = app.add_subcommand("presets", "List presets with their default parameters");
  add_common(presets, c, false);
  auto* tietze = app.add_subcommand("tietze", "Tietze irrationality check; --terms is the scan limit");
  add_common(tietze, c, true);
  auto* growth = app.add_subcommand("growth", "Empirical growth constant of the denominators");
  add_common(growth, c, true);
  auto* verify = app.add_subcommand("verify", "Compare a preset's value with its claimed limit");
  add_common(verify, c, false);
  auto* reproduce = app.add_subcommand("reproduce-paper", "Verify every reference identity");
  add_common(reproduce, c, false);
  long jobs = static_cast<long>(std::max(1u, std::thread::hardware_concurrency()));
  std::string out_dir;
  reproduce->add_option("--jobs", jobs, "Parallel workers");
  reproduce->add_option("--out-dir", out_dir, "Also write one JSON report per case here");

  std::vector<std::string> argv{"polycf"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<const char*> raw;
  for (const auto& a : argv) raw.push_back(a.c_str());

  try {
    try {
      app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kOk;
    } catch (const CLI::CallForVersion&) {
      out << app.version() << '\n';
      return kOk;
    } catch (const CLI::ParseError& e) {
      malformed(e.what());
    }
    CLI::App* cmd = app.get_subcommands().front();
    const Params params = extra_params(cmd->remaining());
    if (c.terms < 0) malformed("--terms must be non-negative");
    if (c.bits < 2) malformed("--precision-bits must be at least 2");

    if (cmd == eval) {
      emit(json_io::to_json(evaluate(load_cf(c, params), parse_tol(c), c.terms, c.bits)), c.format, out);
    } else if (cmd == conv) {
      emit(json_io::to_json(convergents(load_cf(c, params), c.terms)), c.format, out);
    } else if (cmd == transform) {
      const long N = c.terms;
      CFSpec result;
      if (op == "bernoulli") {
        const auto K = sequence(series, values, 0, N, "--series or --values");
        result = bernoulli_from_sequence(K);
      } else if (op == "euler" || op == "gen-euler") {
        SeriesSpec s{sequence(series, values, 0, N, "--series or --values"), {}};
        if (op == "gen-euler") {
          s.perturbation = sequence(perturbation, perturbation_values, 0, static_cast<long>(s.terms.size()) - 1,
                                    "--perturbation");
        }
        result = op == "euler" ? euler_from_series(s) : generalized_euler(s);
      } else if (op == "product" || op == "gen-product") {
        ProductSpec p{sequence(series, values, 1, N, "--series or --values"), {}};
        if (op == "gen-product") {
          p.perturbation = sequence(perturbation, perturbation_values, 0, static_cast<long>(p.factors.size()),
                                    "--perturbation");
        }
        result = op == "product" ? product_to_cf(p) : generalized_product(p);
      } else {
        const CFSpec cf = load_cf(c, params);
        if (op == "even") result = even_part(cf, N);
        else if (op == "odd") result = odd_part(cf, N);
        else {
          const auto w = sequence(w_expr, w_values, 0, N, "--w or --w-values");
          result = op == "bauer-muir" ? bauer_muir(cf, w, N).cf : extension_bmoe(cf, w, N);
        }
      }
      emit(json_io::to_json(result), c.format, out);
    } else if (cmd == family) {
      emit(json_io::to_json(load_member(c, params)), c.format, out);
    } else if (cmd == presets) {
      Json list = Json::array();
      for (const auto& id : preset_ids()) list.push_back(Json{{"id", id}, {"defaults", preset_defaults(id)}});
      emit(list, c.format, out);
    } else if (cmd == tietze) {
      emit(json_io::to_json(tietze_check(load_cf(c, params), std::max(c.terms, 1L))), c.format, out);
    } else if (cmd == growth) {
      emit(json_io::to_json(growth_diagnostics(load_cf(c, params), c.terms, 1, c.bits)), c.format, out);
    } else if (cmd == verify) {
      const auto report = verify_limit(load_member(c, params), c.terms, c.bits, parse_tol(c));
      emit(json_io::to_json(report), c.format, out);
      return report.verdict == VerificationReport::Verdict::Pass ? kOk : kNotVerified;
    } else if (cmd == reproduce) {
      if (!params.empty() || !c.preset.empty()) malformed("reproduce-paper takes no preset");
      return reproduce_paper(jobs, out_dir, c.format, out);
    }
    return kOk;
  } catch (const Error& e) {
    err << json_io::to_json(e).dump() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    err << Json{{"error", "MalformedInput"}, {"message", e.what()}, {"index", nullptr}}.dump() << '\n';
    return kMalformedInput;
  }
}

}  // namespace polycf::cli
