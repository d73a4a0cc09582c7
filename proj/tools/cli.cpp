#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chow/derivations.hpp"
#include "chow/errors.hpp"
#include "chow/expr_parser.hpp"
#include "chow/models.hpp"
#include "chow/rewrite.hpp"
#include "chow/verify.hpp"

namespace chow::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string model;
  std::string expr;
  std::string format = "text";
  std::string curve;
  std::string out_path;
  bool top = false;
  int g = 0;
  int n = 0;
  int m = 0;
  int gmax = 8;
  int nmax = 3;
  int mmax = 4;
};

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

int emit_number(const std::string& name, const DerivedNumber& value, json params, const Options& o,
                std::ostream& out, std::ostream& err) {
  if (o.format == "json") {
    json doc = std::move(params);
    doc["value"] = value.computed.str();
    doc["expected"] = value.expected.str();
    doc["pass"] = value.matches();
    out << doc.dump() << '\n';
  } else {
    out << value.computed << '\n';
  }
  if (!value.matches()) {
    err << name << " mismatch: computed " << value.computed << ", closed form " << value.expected << '\n';
    return kAssertionFailed;
  }
  return kOk;
}

int cmd_eval(const Options& o, bool allow_top, std::ostream& out) {
  const RingModel model = parse_model_descriptor(o.model);
  const ClassExpr reduced = parse_expr(o.expr, model, LowerMode::reduced);
  const bool top = allow_top && o.top;
  std::string result;
  if (top) {
    result = model.render(evaluate_top(model, reduced));
  } else {
    result = model.render(reduced);
  }
  if (o.format == "json") {
    json doc;
    doc["model"] = model.descriptor();
    doc["expr"] = o.expr;
    doc[top ? "top" : "normal_form"] = result;
    out << doc.dump() << '\n';
  } else {
    out << result << '\n';
  }
  return kOk;
}

int cmd_solve_theta(const Options& o, std::ostream& out) {
  const ThetaSolution sol = solve_theta_coefficients(o.g, o.n);
  if (o.format == "json") {
    json doc;
    doc["c_xi"] = sol.c_xi.str();
    doc["c_mu"] = sol.c_mu.str();
    doc["c_alpha"] = sol.c_alpha.str();
    doc["c_eta"] = sol.c_eta.str();
    out << doc.dump() << '\n';
  } else {
    out << "c_xi=" << sol.c_xi << "\nc_mu=" << sol.c_mu << "\nc_alpha=" << sol.c_alpha
        << "\nc_eta=" << sol.c_eta << '\n';
  }
  return kOk;
}

int cmd_pair(const Options& o, std::ostream& out) {
  const RingModel model = parse_model_descriptor(o.model);
  const ClassExpr x = parse_expr(o.expr, model, LowerMode::reduced);
  TestCurve curve = TestCurve::mu_star;
  if (o.curve == "eta_star") curve = TestCurve::eta_star;
  if (o.curve == "delta_star") curve = TestCurve::delta_star;
  const Rational value = pair_with_curve(model, x, curve);
  if (o.format == "json") {
    json doc;
    doc["model"] = model.descriptor();
    doc["curve"] = std::string(to_string(curve));
    doc["value"] = value.str();
    out << doc.dump() << '\n';
  } else {
    out << value << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyConfig cfg;
  cfg.gmax = o.gmax;
  cfg.nmax = o.nmax;
  cfg.mmax = o.mmax;
  const VerificationReport report = run_verification(cfg);
  const std::string text = o.format == "json" ? to_json(report) : to_text(report);
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path);
    if (!file) throw Error("cannot open report file '" + o.out_path + "'");
    file << text;
    out << report.records.size() << " checks, " << report.failures() << " failures\n";
  }
  return report.failures() == 0 ? kOk : kAssertionFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact intersection numbers on semiabelian theta divisor families", "chowcalc"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Parse an expression and print its normal form or top intersection");
  eval->add_option("--model", o.model, "Model descriptor, e.g. poincare(g=4,n=1)")->required();
  eval->add_flag("--top", o.top, "Apply the top-degree evaluation");
  add_format(eval, o);
  eval->add_option("expr", o.expr, "Class expression")->required();

  auto* nf = app.add_subcommand("nf", "Print the canonical normal form of an expression");
  nf->add_option("--model", o.model, "Model descriptor")->required();
  add_format(nf, o);
  nf->add_option("expr", o.expr, "Class expression")->required();

  auto* solve = app.add_subcommand("solve-theta", "Solve for the theta divisor coefficients");
  solve->add_option("--g", o.g, "Dimension parameter g >= 2")->required();
  solve->add_option("--n", o.n, "Curve degree n >= 1")->required();
  add_format(solve, o);

  auto* mumford = app.add_subcommand("mumford", "Boundary ramification number D^{g+1}");
  mumford->add_option("--g", o.g, "Dimension parameter g >= 2")->required();
  mumford->add_option("--n", o.n, "Curve degree n >= 1")->required();
  add_format(mumford, o);

  auto* level = app.add_subcommand("level-branch", "Branch number summed over level-m components");
  level->add_option("--g", o.g, "Dimension parameter g >= 2")->required();
  level->add_option("--n", o.n, "Curve degree n >= 1")->required();
  level->add_option("--m", o.m, "Level m >= 1")->required();
  add_format(level, o);

  auto* pair = app.add_subcommand("pair", "Intersect a divisor class with a test curve");
  pair->add_option("--model", o.model, "Model descriptor")->required();
  pair->add_option("--curve", o.curve, "Test curve")
      ->required()
      ->check(CLI::IsMember({"mu_star", "eta_star", "delta_star"}));
  add_format(pair, o);
  pair->add_option("expr", o.expr, "Divisor class over mu, eta, alpha")->required();

  auto* verify = app.add_subcommand("verify", "Run the invariant sweep and print a summary table");
  verify->add_option("--gmax", o.gmax, "Largest g swept (>= 2)");
  verify->add_option("--nmax", o.nmax, "Largest n swept (>= 1)");
  verify->add_option("--mmax", o.mmax, "Largest level m swept (>= 1)");
  verify->add_option("--out", o.out_path, "Write the report to this file");
  add_format(verify, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, true, out);
    if (nf->parsed()) return cmd_eval(o, false, out);
    if (solve->parsed()) return cmd_solve_theta(o, out);
    if (mumford->parsed()) {
      return emit_number("boundary number", mumford_boundary_number(o.g, o.n), json{{"g", o.g}, {"n", o.n}},
                         o, out, err);
    }
    if (level->parsed()) {
      return emit_number("level branch number", level_branch_number(o.g, o.n, o.m),
                         json{{"g", o.g}, {"n", o.n}, {"m", o.m}}, o, out, err);
    }
    if (pair->parsed()) return cmd_pair(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const SolverError& e) {
    err << "error: " << e.what() << '\n';
    return kAssertionFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace chow::cli
