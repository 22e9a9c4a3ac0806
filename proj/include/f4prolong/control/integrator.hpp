#ifndef F4PROLONG_CONTROL_INTEGRATOR_HPP
#define F4PROLONG_CONTROL_INTEGRATOR_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "f4prolong/control/control.hpp"

namespace f4prolong {

/// Exact initial data; validated before anything is cast to double.
struct ExtremalInit {
  /// 15 base coordinates
  Point base;
  /// s, p1..p4, q1..q4, r12..r34
  RatVector covector;
};

struct ExtremalState {
  std::array<double, 15> base{};
  std::array<double, 15> covector{};
  double t = 0;
};

struct TrajectorySample {
  ExtremalState state;
  /// H_X1..H_X4, H_Y1..H_Y4
  std::array<double, 8> constraints{};
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  ControlVector controls;
  double step = 0;
};

struct DriftReport {
  double max_constraint_drift = 0;
  double max_sr_drift = 0;
  /// Q(controls), exact
  Rational q_value;
  double step = 0;
  double t_max = 0;
  std::uint64_t seed = 0;
};

struct IntegrationResult {
  Trajectory trajectory;
  DriftReport drift;
};

using OdeRhs = std::function<void(const std::vector<double>& y, std::vector<double>& dy)>;

/// One classical Runge-Kutta step of size h.
std::vector<double> rk4_step(const OdeRhs& f, const std::vector<double>& y, double h);

/// Origin, s = 0, r12 = 1, all other fiber coordinates 0.
ExtremalInit standard_initial_data();
/// u = e3, v = e1
ControlVector standard_controls();

/// Fixed-step RK4 on the 30 Hamilton equations with constant controls.
/// Throws std::invalid_argument unless step > 0, t_max >= 0, the covector
/// is nonzero, w lies in Ker A(s, r) exactly, and every constraint
/// |H_Xi|, |H_Yj| at the initial point is <= 1e-12 (evaluated exactly).
IntegrationResult integrate_extremal(const ControlSystem& sys, const ExtremalInit& init, const ControlVector& w,
                                     double step, double t_max);

/// Same integration without the abnormality preconditions (step > 0 still
/// required). Used for off-constraint flow checks.
IntegrationResult integrate_hamiltonian(const ControlSystem& sys, const ExtremalInit& init, const ControlVector& w,
                                        double step, double t_max);

struct FlowLemmaNumeric {
  /// max |central difference - sum_j w_j H_[xi_j, xi_i]|
  double max_deviation = 0;
  /// same with the printed sign sum_j w_j H_[xi_i, xi_j]
  double max_deviation_printed = 0;
  std::size_t points = 0;
};

/// Central differences of H_xi along the trajectory against the bracket
/// sums. Throws std::invalid_argument for fewer than 3 samples.
FlowLemmaNumeric verify_flow_lemma(const ControlSystem& sys, const Trajectory& traj);

/// Drift on the standard data at `step` and step/2, the numeric flow lemma
/// on an off-kernel trajectory, and precondition rejections.
Report verify_integrator(const ControlSystem& sys, double step = 1e-3, double t_max = 1);

/// t, 30 state columns, 8 constraint columns.
std::string trajectory_csv(const Trajectory& traj);
nlohmann::json trajectory_json(const Trajectory& traj);
/// {schema, max_constraint_drift, max_sr_drift, step, t_max, seed, q}
nlohmann::json drift_json(const DriftReport& d);

}  // namespace f4prolong

#endif  // F4PROLONG_CONTROL_INTEGRATOR_HPP
