#pragma once

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qhh/parse.hpp"
#include "qhh/proptest.hpp"
#include "qhh/report.hpp"

namespace qhh {

namespace detail {

// Human output: one line per leaf of the report, dotted keys.
inline void flatten_json(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten_json(v, prefix.empty() ? k : prefix + "." + k, os);
    return;
  }
  if (j.is_array()) {
    bool scalars = true;
    for (const auto& v : j)
      if (v.is_object() || v.is_array()) scalars = false;
    if (!scalars) {
      for (size_t i = 0; i < j.size(); ++i)
        flatten_json(j[i], prefix + "[" + std::to_string(i) + "]", os);
      return;
    }
  }
  os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

inline void emit(const Json& j, bool as_json, const std::string& output, std::ostream& out) {
  std::ostringstream body;
  if (as_json)
    body << j.dump(2) << "\n";
  else
    flatten_json(j, "", body);
  if (output.empty()) {
    out << body.str();
    return;
  }
  std::ofstream f(output);
  if (!f) throw ValidationError("cannot open output file '" + output + "'");
  f << body.str();
}

inline ParsedInput load_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open input file '" + path + "'");
  return parse_input(f);
}

template <class Fn>
void with_field(const FieldSpec& fs, Fn&& fn) {
  if (fs.kind == FieldSpec::Kind::rationals)
    fn.template operator()<Rational>();
  else
    fn.template operator()<Fp>();
}

inline uint64_t seed_from_env(uint64_t fallback) {
  const char* s = std::getenv("QHH_SEED");
  if (!s || !*s) return fallback;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw ValidationError("QHH_SEED is not an unsigned integer");
  }
}

}  // namespace detail

inline constexpr uint64_t kDefaultSeed = 23u;

// Runs the command line against the given streams; returns the process exit
// code.  0: success; 2: bad input (parse or validation); 3: a verification or
// property-test failure.
inline int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"degree-one Hochschild cohomology of monomial path algebras"};
  app.require_subcommand(1);

  std::string field_str = "rationals";
  std::string output;
  bool as_json = false;
  app.add_option("--field", field_str, "coefficient field: rationals or fp:<p>")
      ->capture_default_str();
  app.add_option("--output", output, "write the report to this file instead of stdout");
  app.add_flag("--json", as_json, "emit the report as JSON");

  std::string in_path, in_path_b, gen_name, suite = "all";
  int basepoint = 0;
  bool has_basepoint = false;
  int cases = 50;
  uint64_t seed = 0;
  bool has_seed = false;

  CLI::App* c_basis = app.add_subcommand("basis", "basis paths and input echo");
  CLI::App* c_hh1 = app.add_subcommand("hh1", "degree-one cohomology of the algebra");
  CLI::App* c_hh1rel = app.add_subcommand("hh1rel", "degree-one cohomology relative to the subalgebra");
  CLI::App* c_lie = app.add_subcommand("lie", "Lie structure of the degree-one cohomology");
  CLI::App* c_radzero = app.add_subcommand("radzero", "radical-square-zero closed form and cross-check");
  CLI::App* c_dualext = app.add_subcommand("dualext", "dual extension of two directed algebras");
  CLI::App* c_pi1 = app.add_subcommand("pi1", "contracted fundamental group and its pullback");
  CLI::App* c_theta = app.add_subcommand("theta", "image of one free generator in relative cohomology");
  CLI::App* c_prop = app.add_subcommand("proptest", "randomized property suites");

  for (CLI::App* c :
       {c_basis, c_hh1, c_hh1rel, c_lie, c_radzero, c_dualext, c_pi1, c_theta, c_prop})
    c->fallthrough();
  for (CLI::App* c : {c_basis, c_hh1, c_hh1rel, c_lie, c_radzero, c_pi1, c_theta})
    c->add_option("input", in_path, "algebra description file")->required();
  c_dualext->add_option("input_b", in_path_b, "directed algebra B")->required();
  c_dualext->add_option("input_a", in_path, "directed algebra A")->required();
  c_theta->add_option("--generator", gen_name, "arrow name of the free generator")->required();
  c_theta->add_option("--basepoint", basepoint, "basepoint vertex id");
  c_prop->add_option("suite", suite, "suite name or 'all'")->capture_default_str();
  c_prop->add_option("--cases", cases, "cases per suite")->capture_default_str();
  CLI::Option* seed_opt = c_prop->add_option("--seed", seed, "base seed (overrides QHH_SEED)");

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }
  has_basepoint = c_theta->count("--basepoint") > 0;
  has_seed = seed_opt->count() > 0;

  try {
    FieldSpec fs = FieldSpec::parse(field_str);

    if (c_prop->parsed()) {
      uint64_t base = has_seed ? seed : detail::seed_from_env(kDefaultSeed);
      bool any_failed = false, matched = false;
      Json report = Json::array();
      for (const auto& [name, fn] : proptest_suites()) {
        if (suite != "all" && suite != name) continue;
        matched = true;
        SuiteResult r = run_suite(name, fn, base, cases);
        Json js;
        js["suite"] = r.name;
        js["cases"] = r.cases;
        js["passed"] = r.passed;
        js["skipped"] = r.skipped;
        js["failed"] = r.failed;
        if (!r.ok()) js["first_failure"] = r.first_failure;
        report.push_back(js);
        if (!as_json) {
          out << "suite " << r.name << ": " << r.cases << " cases, " << r.passed << " passed, "
              << r.skipped << " skipped, " << r.failed << " failed\n";
          if (!r.ok()) out << r.first_failure;
        }
        any_failed = any_failed || !r.ok();
      }
      if (!matched) throw ValidationError("unknown suite '" + suite + "'");
      if (as_json) detail::emit(report, true, output, out);
      return any_failed ? 3 : 0;
    }

    if (c_dualext->parsed()) {
      ParsedInput ib = detail::load_input(in_path_b);
      ParsedInput ia = detail::load_input(in_path);
      Json j;
      detail::with_field(fs, [&]<class F>() {
        MonomialAlgebra b(ib.quiver, ib.relations, fs);
        MonomialAlgebra a(ia.quiver, ia.relations, fs);
        DualExtResult r = analyze_dual_extension<F>(b, a);
        j = dualext_report(r);
      });
      j["field"] = fs.str();
      detail::emit(j, as_json, output, out);
      return 0;
    }

    ParsedInput in = detail::load_input(in_path);
    Json j;
    detail::with_field(fs, [&]<class F>() {
      SubalgebraPair pair = build_pair(in, fs);
      if (c_basis->parsed()) {
        j = basis_report(pair, in.algebra_name);
        return;
      }
      CochainComplex<F> cx = build_complex<F>(pair.a);
      Hh1<F> abs = hh1(cx);
      if (c_hh1->parsed()) {
        j = hh1_report(cx, abs);
        return;
      }
      if (c_lie->parsed()) {
        j = lie_report(cx, abs);
        return;
      }
      RelativeHh1<F> rel = relative_hh1(cx, pair, abs);
      if (c_hh1rel->parsed()) {
        RelativeEmbedding<F> emb = build_embedding(cx, rel, abs);
        j = hh1rel_report(cx, abs, rel, emb);
        return;
      }
      if (c_radzero->parsed()) {
        j = radzero_report(pair, cx, rel);
        return;
      }
      RelativeEmbedding<F> emb = build_embedding(cx, rel, abs);
      FundGroup fg = build_fundgroup(pair);
      ThetaResult<F> th = theta_map(cx, pair, fg, rel, abs, emb);
      if (c_pi1->parsed()) {
        j = pi1_report(pair, fg, th);
        return;
      }
      auto gi = pair.a.quiver().arrow_index(gen_name);
      if (!gi) throw ValidationError("unknown arrow '" + gen_name + "'");
      bool is_gen = false;
      for (int g : fg.generators) is_gen = is_gen || g == *gi;
      if (!is_gen)
        throw ValidationError("arrow '" + gen_name + "' is not a free generator (it lies in the tree or the subalgebra)");
      int bp = has_basepoint ? basepoint : default_basepoint_id(pair.a.quiver(), fg, *gi);
      j = theta_report(pair, fg, th, *gi, bp);
    });
    j["field"] = fs.str();
    detail::emit(j, as_json, output, out);
    return 0;
  } catch (const VerificationError& e) {
    err << "verification failure: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

inline int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.push_back(argv[i]);
  return cli_run(std::move(args), out, err);
}

struct CliCapture {
  int code = 0;
  std::string out;
  std::string err;
};

// In-process invocation for tests: arguments in natural order.
inline CliCapture run_capture(const std::vector<std::string>& natural_args) {
  std::vector<std::string> rev(natural_args.rbegin(), natural_args.rend());
  std::ostringstream out, err;
  CliCapture c;
  c.code = cli_run(std::move(rev), out, err);
  c.out = out.str();
  c.err = err.str();
  return c;
}

}  // namespace qhh
