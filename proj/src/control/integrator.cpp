#include "f4prolong/control/integrator.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "f4prolong/cli/report_io.hpp"

namespace f4prolong {

namespace {

/// Compiled right-hand side: 30 equations on the flow chart, controls
/// appended to the state before evaluation.
struct CompiledFlow {
  CompiledFlow(const ControlSystem& sys, const ControlVector& w) {
    for (const auto& e : sys.equations) rhs.emplace_back(e);
    for (const auto& h : sys.lifts) constraints.emplace_back(h);
    for (const auto& x : w.stacked()) controls.push_back(x.get_d());
  }
  std::vector<DoublePoly> rhs;
  /// on the cotangent chart
  std::vector<DoublePoly> constraints;
  std::vector<double> controls;

  void operator()(const std::vector<double>& y, std::vector<double>& dy) const {
    std::vector<double> point(y);
    point.insert(point.end(), controls.begin(), controls.end());
    dy.resize(rhs.size());
    for (std::size_t k = 0; k < rhs.size(); ++k) dy[k] = rhs[k](point);
  }
};

TrajectorySample make_sample(const CompiledFlow& f, const std::vector<double>& y, double t) {
  TrajectorySample s;
  s.state.t = t;
  for (std::size_t k = 0; k < 15; ++k) {
    s.state.base[k] = y[k];
    s.state.covector[k] = y[k + 15];
  }
  for (std::size_t k = 0; k < 8; ++k) s.constraints[k] = f.constraints[k](y);
  return s;
}

void require_step(double step, double t_max) {
  if (!(step > 0) || !std::isfinite(step)) throw std::invalid_argument("integrate: step must be positive");
  if (!(t_max >= 0) || !std::isfinite(t_max)) throw std::invalid_argument("integrate: t_max must be non-negative");
}

RatVector exact_state(const ExtremalInit& init) {
  if (init.base.size() != 15 || init.covector.size() != 15)
    throw std::invalid_argument("integrate: base and covector need 15 entries each");
  RatVector y(init.base);
  y.insert(y.end(), init.covector.begin(), init.covector.end());
  return y;
}

/// Indices of s and r_ij in the 30-vector.
const std::array<std::size_t, 7>& sr_slots() {
  static const std::array<std::size_t, 7> slots{15, 24, 25, 26, 27, 28, 29};
  return slots;
}

}  // namespace

std::vector<double> rk4_step(const OdeRhs& f, const std::vector<double>& y, double h) {
  const std::size_t n = y.size();
  std::vector<double> k1, k2, k3, k4, tmp(n);
  f(y, k1);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
  f(tmp, k2);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
  f(tmp, k3);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
  f(tmp, k4);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

ExtremalInit standard_initial_data() {
  ExtremalInit init;
  init.base.assign(15, Rational(0));
  init.covector.assign(15, Rational(0));
  init.covector[9] = 1;  // r12
  return init;
}

ControlVector standard_controls() {
  ControlVector w;
  w.u[2] = 1;
  w.v[0] = 1;
  return w;
}

IntegrationResult integrate_hamiltonian(const ControlSystem& sys, const ExtremalInit& init, const ControlVector& w,
                                        double step, double t_max) {
  require_step(step, t_max);
  const RatVector y0 = exact_state(init);
  const CompiledFlow f(sys, w);
  std::vector<double> y;
  for (const auto& x : y0) y.push_back(x.get_d());

  IntegrationResult res;
  res.trajectory.controls = w;
  res.trajectory.step = step;
  const auto steps = static_cast<std::size_t>(std::llround(t_max / step));
  res.trajectory.samples.reserve(steps + 1);
  res.trajectory.samples.push_back(make_sample(f, y, 0.0));
  const TrajectorySample& first = res.trajectory.samples.front();
  const std::vector<double> sr0{y[15], y[24], y[25], y[26], y[27], y[28], y[29]};

  const OdeRhs rhs = [&f](const std::vector<double>& a, std::vector<double>& da) { f(a, da); };
  DriftReport& d = res.drift;
  for (std::size_t k = 1; k <= steps; ++k) {
    y = rk4_step(rhs, y, step);
    res.trajectory.samples.push_back(make_sample(f, y, static_cast<double>(k) * step));
    const TrajectorySample& s = res.trajectory.samples.back();
    for (std::size_t c = 0; c < 8; ++c)
      d.max_constraint_drift = std::max(d.max_constraint_drift, std::abs(s.constraints[c] - first.constraints[c]));
    for (std::size_t c = 0; c < 7; ++c)
      d.max_sr_drift = std::max(d.max_sr_drift, std::abs(y[sr_slots()[c]] - sr0[c]));
  }
  d.q_value = form_Q(w);
  d.step = step;
  d.t_max = t_max;
  return res;
}

IntegrationResult integrate_extremal(const ControlSystem& sys, const ExtremalInit& init, const ControlVector& w,
                                     double step, double t_max) {
  require_step(step, t_max);
  const RatVector y0 = exact_state(init);
  bool nonzero = false;
  for (const auto& x : init.covector)
    if (x != 0) nonzero = true;
  if (!nonzero) throw std::invalid_argument("integrate: covector must be nonzero");

  for (std::size_t k = 0; k < 8; ++k) {
    const Rational h = sys.lifts[k].eval(y0);
    if (abs(h) > Rational(1, 1000000000000)) {
      throw std::invalid_argument("integrate: initial constraint " + std::to_string(k + 1) + " is " + to_string(h) +
                                  ", not within 1e-12 of 0");
    }
  }
  CovectorFiber c;
  c.s = init.covector[0];
  for (std::size_t k = 0; k < 6; ++k) c.r[k] = init.covector[9 + k];
  const RatMatrix a = build_A(c);
  const RatVector wv = w.stacked();
  for (std::size_t i = 0; i < 8; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < 8; ++j) acc += a(i, j) * wv[j];
    if (acc != 0)
      throw std::invalid_argument("integrate: controls are not in Ker A(s, r): row " + std::to_string(i + 1) + " gives " +
                                  to_string(acc));
  }
  return integrate_hamiltonian(sys, init, w, step, t_max);
}

FlowLemmaNumeric verify_flow_lemma(const ControlSystem& sys, const Trajectory& traj) {
  if (traj.samples.size() < 3) throw std::invalid_argument("verify_flow_lemma: need at least 3 samples");
  const ChartPtr& cc = sys.cot.chart;
  const auto gens = sys.model.generators();
  const RatVector w = traj.controls.stacked();
  // sum_j w_j H_[xi_j, xi_i], with the printed sign as the negative
  std::vector<DoublePoly> h, rhs;
  for (std::size_t i = 0; i < 8; ++i) {
    MultiPoly acc(cc);
    for (std::size_t j = 0; j < 8; ++j)
      if (w[j] != 0) acc += w[j] * hamiltonian_lift(sys.cot, lie_bracket(gens[j], gens[i]));
    h.emplace_back(sys.lifts[i]);
    rhs.emplace_back(acc);
  }
  auto flat = [](const ExtremalState& s) {
    std::vector<double> y(s.base.begin(), s.base.end());
    y.insert(y.end(), s.covector.begin(), s.covector.end());
    return y;
  };
  FlowLemmaNumeric out;
  for (std::size_t k = 1; k + 1 < traj.samples.size(); ++k) {
    const auto& prev = traj.samples[k - 1];
    const auto& next = traj.samples[k + 1];
    const double dt = next.state.t - prev.state.t;
    const std::vector<double> y = flat(traj.samples[k].state);
    for (std::size_t i = 0; i < 8; ++i) {
      const double fd = (next.constraints[i] - prev.constraints[i]) / dt;
      const double r = rhs[i](y);
      out.max_deviation = std::max(out.max_deviation, std::abs(fd - r));
      out.max_deviation_printed = std::max(out.max_deviation_printed, std::abs(fd + r));
    }
    ++out.points;
  }
  return out;
}

std::string trajectory_csv(const Trajectory& traj) {
  std::ostringstream os;
  os.precision(17);
  os << "t";
  for (const auto& v : cartan_variables()) os << ',' << v;
  for (const auto& v : fiber_variables()) os << ',' << v;
  for (const char* n : {"H_X1", "H_X2", "H_X3", "H_X4", "H_Y1", "H_Y2", "H_Y3", "H_Y4"}) os << ',' << n;
  os << '\n';
  for (const auto& s : traj.samples) {
    os << s.state.t;
    for (double x : s.state.base) os << ',' << x;
    for (double x : s.state.covector) os << ',' << x;
    for (double x : s.constraints) os << ',' << x;
    os << '\n';
  }
  return os.str();
}

nlohmann::json trajectory_json(const Trajectory& traj) {
  nlohmann::json j;
  j["schema"] = kSchema;
  j["step"] = traj.step;
  std::vector<std::string> controls;
  for (const auto& x : traj.controls.stacked()) controls.push_back(to_string(x));
  j["controls"] = controls;
  std::vector<std::string> columns = cartan_variables();
  columns.insert(columns.end(), fiber_variables().begin(), fiber_variables().end());
  j["columns"] = columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& s : traj.samples) {
    std::vector<double> state(s.state.base.begin(), s.state.base.end());
    state.insert(state.end(), s.state.covector.begin(), s.state.covector.end());
    rows.push_back({{"t", s.state.t}, {"state", state}, {"constraints", s.constraints}});
  }
  j["samples"] = rows;
  return j;
}

nlohmann::json drift_json(const DriftReport& d) {
  return {{"schema", kSchema},   {"max_constraint_drift", d.max_constraint_drift},
          {"max_sr_drift", d.max_sr_drift}, {"step", d.step},
          {"t_max", d.t_max},    {"seed", d.seed},
          {"q", to_string(d.q_value)}};
}

Report verify_integrator(const ControlSystem& sys, double step, double t_max) {
  Report rep;
  rep.suite = "control.integrator";
  const char* ref = "constrained Hamiltonian equation";
  auto sci = [](double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
  };
  const ExtremalInit init = standard_initial_data();
  const ControlVector w = standard_controls();
  const IntegrationResult full = integrate_extremal(sys, init, w, step, t_max);
  const IntegrationResult half = integrate_extremal(sys, init, w, step / 2, t_max);
  const DriftReport& d = full.drift;
  rep.check("control.integrator.constraint_drift", "max drift of the 8 constraints on the standard data",
            d.max_constraint_drift < 1e-8, sci(d.max_constraint_drift), "< 1e-8", ref);
  rep.check("control.integrator.sr_drift", "max drift of s and r_ij on the standard data", d.max_sr_drift < 1e-8,
            sci(d.max_sr_drift), "< 1e-8", ref);
  const double before = std::max(d.max_constraint_drift, d.max_sr_drift);
  const double after = std::max(half.drift.max_constraint_drift, half.drift.max_sr_drift);
  rep.check("control.integrator.halving", "halving the step: drift(h/2) <= drift(h)/8", after <= before / 8,
            sci(before) + " -> " + sci(after) + (before == 0 ? " (trajectory is polynomial, RK4 exact)" : ""),
            "ratio >= 8", ref);
  const auto& last = full.trajectory.samples.back().state;
  const bool endpoint = std::abs(last.base[3] - t_max) < 1e-12 && std::abs(last.base[5] - t_max) < 1e-12;
  rep.check("control.integrator.endpoint", "standard trajectory ends at x3 = y1 = t_max", endpoint,
            "x3 = " + std::to_string(last.base[3]) + ", y1 = " + std::to_string(last.base[5]), "x3 = y1 = t_max", ref);

  // Off-kernel controls exercise the flow lemma with nonzero right-hand sides.
  ControlVector off;
  off.u[0] = 1;
  off.v[1] = 1;
  const IntegrationResult o = integrate_hamiltonian(sys, init, off, step, t_max);
  const FlowLemmaNumeric f = verify_flow_lemma(sys, o.trajectory);
  rep.check("control.integrator.flow_lemma", "central differences of H_xi match sum_j w_j H_[xi_j, xi_i]",
            f.max_deviation < 1e-6, sci(f.max_deviation), "< 1e-6", "flow lemma");
  rep.check("control.integrator.flow_lemma_printed_sign", "the opposite sign is far off along the same trajectory",
            f.max_deviation_printed > 1, sci(f.max_deviation_printed), "> 1", "flow lemma");

  bool rejected = false;
  std::string message;
  try {
    integrate_extremal(sys, init, off, step, t_max);
  } catch (const std::invalid_argument& e) {
    rejected = true;
    message = e.what();
  }
  rep.check("control.integrator.rejects_off_kernel", "controls outside Ker A(s, r) are rejected", rejected,
            rejected ? message : "accepted", "rejected", ref);
  return rep;
}

}  // namespace f4prolong
