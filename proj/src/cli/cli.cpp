#include "f4prolong/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "f4prolong/cli/report_io.hpp"
#include "f4prolong/cli/suites.hpp"
#include "f4prolong/control/integrator.hpp"
#include "f4prolong/exactalg/json_io.hpp"
#include "f4prolong/f4roots/f4roots.hpp"
#include "f4prolong/nullflag/nullflag.hpp"
#include "f4prolong/prolong/prolong.hpp"

namespace f4prolong {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

RatVector parse_sized(const std::string& csv, std::size_t n, const char* what) {
  RatVector v = parse_rational_list(csv);
  if (v.size() != n)
    throw UsageError(std::string(what) + " needs " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  return v;
}

std::string vector_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

nlohmann::json string_vector(const RatVector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

int cmd_integrate(bool json, double step, double tmax, const std::string& base, const std::string& covector,
                  const std::string& controls, const std::string& csv_path, std::ostream& out) {
  ExtremalInit init = standard_initial_data();
  ControlVector w = standard_controls();
  if (!base.empty()) init.base = parse_sized(base, 15, "--base");
  if (!covector.empty()) init.covector = parse_sized(covector, 15, "--covector");
  if (!controls.empty()) {
    const RatVector c = parse_sized(controls, 8, "--controls");
    for (std::size_t k = 0; k < 4; ++k) {
      w.u[k] = c[k];
      w.v[k] = c[k + 4];
    }
  }
  const ControlSystem sys(build_model());
  IntegrationResult res;
  try {
    res = integrate_extremal(sys, init, w, step, tmax);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!csv_path.empty()) {
    std::ofstream f(csv_path);
    if (!f) throw UsageError("cannot write " + csv_path);
    f << trajectory_csv(res.trajectory);
  }
  if (json) {
    nlohmann::json j = drift_json(res.drift);
    j["samples"] = res.trajectory.samples.size();
    const auto& last = res.trajectory.samples.back();
    j["final_state"] = {{"base", last.state.base}, {"covector", last.state.covector}, {"t", last.state.t}};
    out << j.dump(2) << '\n';
  } else {
    out << "steps " << res.trajectory.samples.size() - 1 << ", step " << step << ", t_max " << tmax << '\n';
    out << "Q(controls) = " << to_string(res.drift.q_value) << '\n';
    out << "max constraint drift " << res.drift.max_constraint_drift << '\n';
    out << "max (s, r_ij) drift " << res.drift.max_sr_drift << '\n';
  }
  return 0;
}

int cmd_flag(bool json, const std::string& coords, std::ostream& out) {
  const auto c = LambdaFlagCoords::from_point(parse_sized(coords, 9, "--coords"));
  const LambdaFlagFrame frame = complete_null_flag(c);
  const VFlagFrame v = lambda_to_v(frame);
  const Report nullity = verify_flag_nullity(v);
  const char* dep[] = {"z17", "z26", "z27", "z35", "z36", "z37"};
  if (json) {
    nlohmann::json j;
    j["schema"] = kSchema;
    j["coords"] = string_vector(c.point());
    nlohmann::json d;
    for (std::size_t k = 0; k < 6; ++k) d[dep[k]] = to_string(frame.dependent[k]);
    j["dependent"] = d;
    for (std::size_t k = 0; k < 3; ++k) j["f"].push_back(string_vector(frame.f[k]));
    for (std::size_t k = 0; k < 4; ++k) j["eta"].push_back(string_vector(v.eta[k]));
    j["null"] = nullity.passed();
    out << j.dump(2) << '\n';
  } else {
    for (std::size_t k = 0; k < 6; ++k) out << dep[k] << " = " << to_string(frame.dependent[k]) << '\n';
    for (std::size_t k = 0; k < 3; ++k) out << "f" << k + 1 << " = " << vector_string(frame.f[k]) << '\n';
    for (std::size_t k = 0; k < 4; ++k) out << "eta" << k + 1 << " = " << vector_string(v.eta[k]) << '\n';
    out << "null flag: " << (nullity.passed() ? "yes" : "no") << '\n';
  }
  return nullity.passed() ? 0 : 1;
}

int cmd_export_model(std::ostream& out) {
  const CartanModel m = build_model();
  nlohmann::json j;
  j["schema"] = kSchema;
  j["chart"] = m.chart->variables();
  for (std::size_t a = 0; a < m.frame.size(); ++a) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : m.frame[a].components()) comps.push_back(poly_terms_json(c));
    j["frame"].push_back({{"name", m.frame_names[a]}, {"components", comps}});
  }
  for (std::size_t a = 0; a < m.coframe.size(); ++a) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : m.coframe[a].coefficients()) coeffs.push_back(poly_terms_json(c));
    j["coframe"].push_back({{"name", m.coframe_names[a]}, {"coefficients", coeffs}});
  }
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_roots(bool json, bool list, std::ostream& out) {
  const RootSystem rs = generate_positive_roots(f4_cartan_matrix());
  if (json) {
    nlohmann::json j = roots_json(rs);
    if (!list) j.erase("roots");
    out << j.dump(2) << '\n';
    return 0;
  }
  out << rs.positive_roots.size() << " positive roots, highest " << root_string(rs.highest()) << '\n';
  if (list)
    for (const Root& r : rs.positive_roots)
      out << "height " << height(r) << "  a4 " << r[3] << "  " << root_string(r) << '\n';
  return 0;
}

int cmd_prolong(bool json, bool table, std::ostream& out) {
  ZetaSystem z = build_zeta_generators();
  const BracketTable t = compute_bracket_table(z);
  if (!table) {
    const Report r = compare_bracket_table(t);
    if (json) {
      out << report_to_json(r).dump(2) << '\n';
    } else {
      print_report(out, r);
    }
    return r.passed() ? 0 : 1;
  }
  const nlohmann::json rows = bracket_table_json(t);
  if (json) {
    out << nlohmann::json{{"schema", kSchema}, {"entries", rows}}.dump(2) << '\n';
  } else {
    for (const auto& r : rows)
      out << r["entry"].get<std::string>() << " = " << r["computed"].get<std::string>() << "  [" << r["status"].get<std::string>()
          << "; printed " << r["printed"].get<std::string>() << "]\n";
  }
  return 0;
}

}  // namespace

RatVector parse_rational_list(const std::string& csv) {
  RatVector out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty entry in '" + csv + "'");
    out.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  if (out.empty() || (!csv.empty() && csv.back() == ',')) throw std::invalid_argument("malformed list '" + csv + "'");
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the (8,15)-distribution of type F4 and its null-flag prolongation", "f4prolong"};
  app.require_subcommand(1);
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t samples = 0;
  std::string point;
  app.add_flag("--json", json, "JSON output");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--samples", samples, "sample count for randomized checks (0: suite default)");
  app.add_option("--point", point, "evaluation point as comma-separated rationals n/d");

  auto* verify = app.add_subcommand("verify", "run a verification suite")->fallthrough();
  std::string suite;
  verify->add_option("suite", suite, "cartan | control | nullflag | prolong | roots | all")
      ->required()
      ->check(CLI::IsMember(suite_names()));

  auto* integrate = app.add_subcommand("integrate", "RK4 along an abnormal extremal")->fallthrough();
  double step = 1e-3, tmax = 1.0;
  std::string base, covector, controls, csv_path;
  integrate->add_option("--step", step, "step size");
  integrate->add_option("--tmax", tmax, "final time");
  integrate->add_option("--base", base, "15 base coordinates");
  integrate->add_option("--covector", covector, "s, p1..p4, q1..q4, r12..r34");
  integrate->add_option("--controls", controls, "u1..u4, v1..v4");
  integrate->add_option("--trajectory", csv_path, "write the trajectory as CSV");

  auto* flag = app.add_subcommand("flag", "complete a null flag and its V-flag")->fallthrough();
  std::string coords;
  flag->add_option("--coords", coords, "z11, z13, z14, z15, z16, z21, z24, z25, z31")->required();

  app.add_subcommand("export-model", "frame and coframe as JSON")->fallthrough();

  auto* roots = app.add_subcommand("roots", "positive roots of F4")->fallthrough();
  bool list = false;
  roots->add_flag("--list", list, "list every positive root");

  auto* prolong = app.add_subcommand("prolong", "bracket table of the prolonged distribution")->fallthrough();
  bool table = false;
  prolong->add_flag("--table", table, "full table with printed comparison");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      SuiteOptions opt;
      opt.seed = seed;
      opt.samples = samples;
      if (!point.empty()) opt.point = parse_rational_list(point);
      const Report r = run_suite(suite, opt);
      if (json) {
        out << report_to_json(r, false).dump(2) << '\n';
      } else {
        print_report(out, r);
      }
      return r.passed() ? 0 : 1;
    }
    if (integrate->parsed()) return cmd_integrate(json, step, tmax, base, covector, controls, csv_path, out);
    if (flag->parsed()) return cmd_flag(json, coords, out);
    if (roots->parsed()) return cmd_roots(json, list, out);
    if (prolong->parsed()) return cmd_prolong(json, table, out);
    return cmd_export_model(out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace f4prolong
