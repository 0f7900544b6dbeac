#pragma once

#include "agl/expr.hpp"
#include "agl/generators.hpp"
#include "agl/gt.hpp"
#include "agl/json.hpp"
#include "agl/relations.hpp"
#include "agl/toy.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace agl::cli {

enum ExitCode { ok = 0, check_failed = 1, usage_error = 2 };

struct Options {
  int n = 3;
  std::string suite = "all";
  std::string top;
  std::string signs = "all-plus";
  int window = 2;
  std::string point;
  bool generic = false;
  bool check = false;
  std::string f;
  std::string target;
  std::string json;
  std::string expr;
  bool timing = false;
};

inline std::vector<long> parse_top(const std::string& text)
{
  std::vector<long> top;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      top.push_back(std::stol(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos)
        throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad top-row entry '" + item + "'");
    }
  }
  if (top.empty())
    throw std::invalid_argument("--top needs a comma-separated weight, e.g. 2,1,0");
  return top;
}

/// "a,b,c; d,e; f" (top row first) -> pattern
inline GTPattern parse_point(const std::string& text)
{
  std::vector<std::vector<Rational>> rows_top_first;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<Rational> entries;
    std::stringstream rs(row);
    std::string item;
    while (std::getline(rs, item, ','))
      entries.push_back(parse_rational(item));
    rows_top_first.push_back(std::move(entries));
  }
  std::vector<std::vector<Rational>> rows(rows_top_first.rbegin(), rows_top_first.rend());
  return GTPattern(std::move(rows));
}

inline void write_json(const Json& j, const std::string& path, std::ostream& out)
{
  if (path.empty())
    return;
  if (path == "-") {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream file(path);
  if (!file)
    throw std::invalid_argument("cannot open '" + path + "' for writing");
  file << j.dump(2) << "\n";
}

inline void print_report(const VerificationReport& report, bool timing, std::ostream& out)
{
  std::size_t width = 0;
  for (const auto& r : report.results)
    width = std::max(width, r.id.size());
  for (const auto& r : report.results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.id << "  "
        << r.anchor;
    if (timing)
      out << "  (" << std::fixed << std::setprecision(4) << r.seconds << " s)";
    out << "\n";
    if (r.witness)
      out << "      residual: " << r.witness->to_string() << "\n";
    if (r.matrix_witness)
      out << "      residual matrix nonzero (" << r.matrix_witness->dim() << "x" << r.matrix_witness->dim() << ")\n";
  }
  out << report.suite << ": " << report.results.size() << " checks, " << report.failures() << " failures\n";
}

inline std::string join(const std::vector<Rational>& vals)
{
  std::string s;
  for (const auto& v : vals)
    s += (s.empty() ? "" : ", ") + to_string(v);
  return s;
}

inline int cmd_verify(const Options& o, std::ostream& out)
{
  VerificationReport report = run_suite(o.suite, o.n);
  print_report(report, o.timing, out);
  write_json(to_json(report), o.json, out);
  return report.passed() ? ok : check_failed;
}

inline std::optional<SkewElement> resolve_name(const TriangleContext& ctx, const std::string& name)
{
  return lookup_element(ctx, name);
}

inline int cmd_compute(const Options& o, std::ostream& out)
{
  if (o.expr.empty())
    throw std::invalid_argument("compute needs --expr");
  TriangleContext ctx(o.n);
  SkewElement u = parse_expression(o.expr, [&](const std::string& name) { return resolve_name(ctx, name); });
  out << "left:  " << u.to_string() << "\n";
  out << "right: " << u.to_string_right() << "\n";
  std::vector<std::string> names;
  for (int k = 1; k < ctx.n(); ++k)
    for (int i = 1; i <= k; ++i)
      for (char s : {'+', '-'})
        names.push_back("A" + std::to_string(k) + std::to_string(i) + s);
  for (const auto& [name, g] : algebra_generators(ctx))
    names.push_back(name);
  for (const auto& name : names) {
    auto g = lookup_element(ctx, name);
    if (!u.is_zero() && g && *g == u)
      out << "equals " << name << "\n";
    else if (!u.is_zero() && g && -*g == u)
      out << "equals -" << name << "\n";
  }
  write_json(to_json(u), o.json, out);
  return ok;
}

inline int cmd_gt_generic(const Options& o, std::ostream& out)
{
  if (o.point.empty())
    throw std::invalid_argument("gt --generic needs --point \"row n; ...; row 1\"");
  GTPattern point = parse_point(o.point);
  const int n = point.n();
  ModuleRealization mod = build_generic_module(point, o.window);
  out << "generic module at " << point.to_string() << ", window " << o.window << "\n";
  out << "dimension " << mod.dim() << "\n";
  int rc = ok;
  if (o.check) {
    auto rels = ugl_relations<Matrix>(n);
    auto v = vandermonde_relations<Matrix>(n);
    rels.insert(rels.end(), v.begin(), v.end());
    if (n == 3) {
      auto a = agl3_relations<Matrix>();
      rels.insert(rels.end(), a.begin(), a.end());
    }
    VerificationReport report = check_module("generic", mod, rels);
    print_report(report, o.timing, out);
    rc = report.passed() ? ok : check_failed;
  }
  write_json(to_json(mod), o.json, out);
  return rc;
}

inline int cmd_gt(const Options& o, std::ostream& out)
{
  if (o.generic)
    return cmd_gt_generic(o, out);
  if (o.top.empty())
    throw std::invalid_argument("gt needs --top (or --generic --point)");
  const std::vector<long> top = parse_top(o.top);
  const int n = static_cast<int>(top.size());
  const SignData signs = parse_signs(top, o.signs);
  ModuleRealization mod = build_module(top, signs);
  out << "module top (" << o.top << "), signs " << signs.to_string() << "\n";
  out << "dimension " << mod.dim() << "\n";
  for (int k = 1; k <= n; ++k)
    out << "r[" << k << "] = " << count_row_fillings(top, k) << "\n";
  for (int k = 2; k <= n; ++k)
    out << "spectrum V" << k << ": " << join(diagonal_spectrum(mod["V" + std::to_string(k)])) << "\n";
  for (int k = 1; k <= n; ++k) {
    const std::string h = "X" + std::to_string(k) + std::to_string(k);
    out << "spectrum " << h << ": " << join(diagonal_spectrum(mod[h])) << "\n";
  }
  int rc = ok;
  if (o.check) {
    VerificationReport report = check_finite_module(mod, n, n == 3);
    print_report(report, o.timing, out);
    rc = report.passed() ? ok : check_failed;
  }
  write_json(to_json(mod), o.json, out);
  return rc;
}

inline int cmd_toy(const Options& o, std::ostream& out)
{
  if (o.f.empty())
    throw std::invalid_argument("toy needs --f");
  const ToySpec spec = ToySpec::parse(o.f);
  const auto g = build_toy(spec);
  out << "f = " << spec.f().to_string() << "\n";
  out << "X = " << g.X.to_string_right() << "\n";
  out << "Y = " << g.Y.to_string() << "\n";
  const bool generates = toy_supports_generate(spec);
  out << "supports of {X, Y} generate Z: " << (generates ? "yes" : "no") << "\n";
  std::vector<long> targets;
  if (o.target.empty())
    targets = {0, -1, 1, 2, -2, -3};
  else
    targets = {parse_toy_target(o.target)};
  bool all = generates;
  Json witnesses = Json::array();
  for (long k : targets) {
    ToyWitness w = witness_inverse(spec, k);
    const std::string target = "1/(" + LinearFactor::shifted_var(VarId::toy(), k).to_string() + ")";
    out << target << " = " << w.expression << "  [" << (w.verified ? "verified" : "NOT VERIFIED") << "]\n";
    for (const auto& line : w.trace)
      out << "    " << line << "\n";
    all = all && w.verified;
    witnesses.push_back({{"target", target}, {"expression", w.expression}, {"verified", w.verified}});
  }
  write_json(Json{{"f", spec.f().to_string()}, {"generates", generates}, {"witnesses", witnesses}}, o.json, out);
  return all ? ok : check_failed;
}

inline int cmd_export(const Options& o, std::ostream& out)
{
  const int given = (o.expr.empty() ? 0 : 1) + (o.top.empty() && !o.generic ? 0 : 1);
  if (given > 1)
    throw std::invalid_argument("export takes one of --expr, --top/--generic, --suite");
  const std::string path = o.json.empty() ? "-" : o.json;
  if (!o.expr.empty()) {
    TriangleContext ctx(o.n);
    SkewElement u = parse_expression(o.expr, [&](const std::string& name) { return resolve_name(ctx, name); });
    write_json(to_json(u), path, out);
    return ok;
  }
  if (o.generic) {
    write_json(to_json(build_generic_module(parse_point(o.point), o.window)), path, out);
    return ok;
  }
  if (!o.top.empty()) {
    const std::vector<long> top = parse_top(o.top);
    write_json(to_json(build_module(top, parse_signs(top, o.signs))), path, out);
    return ok;
  }
  VerificationReport report = run_suite(o.suite, o.n);
  write_json(to_json(report), path, out);
  return report.passed() ? ok : check_failed;
}

/// Entry point; args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  Options o;
  CLI::App app{"Exact computations in the skew group ring realization of U(gl_n) and A(gl_n)", "agl"};
  app.require_subcommand(1);
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "rank n of gl_n")->check(CLI::Range(1, 9)); };
  auto add_json = [&](CLI::App* sub) { sub->add_option("--json", o.json, "write JSON to this path ('-' for stdout)"); };

  CLI::App* verify = app.add_subcommand("verify", "run a relation suite");
  add_n(verify);
  verify->add_option("--suite", o.suite, "gl2, gl3, localized, invariants or all")
      ->check(CLI::IsMember({"gl2", "gl3", "localized", "invariants", "all"}));
  add_json(verify);
  verify->add_flag("--timing", o.timing, "show per-check timings");

  CLI::App* compute = app.add_subcommand("compute", "evaluate an expression in named elements");
  add_n(compute);
  compute->add_option("--expr", o.expr, "e.g. \"[V2, A21+]\"")->required();
  add_json(compute);

  CLI::App* gt = app.add_subcommand("gt", "build a Gelfand-Tsetlin module");
  gt->add_option("--top", o.top, "dominant top row, e.g. 2,1,0");
  gt->add_option("--signs", o.signs, "all-plus, all-minus, or signs per row 2..n");
  gt->add_flag("--generic", o.generic, "generic module around --point");
  gt->add_option("--point", o.point, "pattern rows, top first: \"a,b,c; d,e; f\"");
  gt->add_option("--window", o.window, "window radius for --generic")->check(CLI::NonNegativeNumber);
  gt->add_flag("--check", o.check, "verify relations on the module");
  add_json(gt);
  gt->add_flag("--timing", o.timing, "show per-check timings");

  CLI::App* toy = app.add_subcommand("toy", "one-variable ring U_f: inverse witnesses");
  toy->add_option("--f", o.f, "polynomial in x with f(0) != 0")->required();
  toy->add_option("--target", o.target, "1/(x + k); default runs k in {0, -1, 1, 2, -2, -3}");
  add_json(toy);

  CLI::App* exp = app.add_subcommand("export", "write JSON for an element, module or report");
  add_n(exp);
  exp->add_option("--expr", o.expr, "element expression");
  exp->add_option("--top", o.top, "module top row");
  exp->add_option("--signs", o.signs, "module signs");
  exp->add_flag("--generic", o.generic, "generic module around --point");
  exp->add_option("--point", o.point, "generic point");
  exp->add_option("--window", o.window, "generic window radius")->check(CLI::NonNegativeNumber);
  exp->add_option("--suite", o.suite, "report suite")
      ->check(CLI::IsMember({"gl2", "gl3", "localized", "invariants", "all"}));
  add_json(exp);

  std::vector<std::string> storage = {"agl"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage)
    argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }

  try {
    if (verify->parsed())
      return cmd_verify(o, out);
    if (compute->parsed())
      return cmd_compute(o, out);
    if (gt->parsed())
      return cmd_gt(o, out);
    if (toy->parsed())
      return cmd_toy(o, out);
    return cmd_export(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return check_failed;
  }
}

}  // namespace agl::cli
