#include <doctest.h>

#include <cmath>

#include "f4prolong/control/control.hpp"
#include "f4prolong/control/integrator.hpp"

using namespace f4prolong;

namespace {

ControlVector controls(std::array<int, 4> u, std::array<int, 4> v) {
  ControlVector w;
  for (std::size_t k = 0; k < 4; ++k) {
    w.u[k] = u[k];
    w.v[k] = v[k];
  }
  return w;
}

RatVector times(const RatMatrix& m, const RatVector& x) {
  RatVector y(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

}  // namespace

TEST_CASE("Hamiltonian lifts and Poisson brackets") {
  const CartanModel m = build_model();
  const CotangentChart t(m.chart);
  CHECK(t.chart->dimension() == 30);
  CHECK(t.flow->dimension() == 38);
  const MultiPoly h1 = hamiltonian_lift(t, m.field("X1"));
  const MultiPoly h2 = hamiltonian_lift(t, m.field("X2"));
  CHECK(is_fiber_linear(t, h1));
  CHECK(poisson_bracket(h1, h2) == hamiltonian_lift(t, lie_bracket(m.field("X1"), m.field("X2"))));
  CHECK(poisson_bracket(h1, h2) == MultiPoly(t.chart, 2) * MultiPoly::variable(t.chart, "r12"));
  CHECK(verify_lifts(m, t).count(Status::fail) == 0);
}

TEST_CASE("constraint matrix rebuilt from brackets") {
  const CartanModel m = build_model();
  const CotangentChart t(m.chart);
  const PolyMatrix a = constraint_matrix_from_brackets(m, t);
  const PolyMatrix printed = build_A_symbolic();
  REQUIRE(a.rows() == 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) CHECK(a(i, j) == printed(i, j).embed(t.chart));
}

TEST_CASE("matrix identities and the singular velocity cone") {
  CHECK(verify_matrix_identities(3, 20).count(Status::fail) == 0);
  CHECK(verify_svc(3, 40).count(Status::fail) == 0);
}

TEST_CASE("rank of U off and on the cone") {
  const ControlVector off = controls({1, 2, -1, 3}, {2, 0, 1, -1});
  CHECK(form_Q(off) == -2);
  CHECK(rank(build_U(off)) == 7);
  // frozen from an independent sympy evaluation
  CHECK(determinant(build_U(off).transpose() * build_U(off)) == 5505024);
  const ControlVector on = controls({1, 0, 0, 0}, {0, 1, 0, 0});
  CHECK(form_Q(on) == 0);
  CHECK(rank(build_U(on)) == 4);
}

TEST_CASE("SVC witnesses are null and annihilate A") {
  const SvcResult r = svc_membership(controls({1, 0, 0, 0}, {0, 1, 0, 0}));
  REQUIRE(r.member);
  REQUIRE(r.witness);
  CHECK(form_R(*r.witness) == 0);
  const RatVector aw = times(build_A(*r.witness), controls({1, 0, 0, 0}, {0, 1, 0, 0}).stacked());
  for (const auto& x : aw) CHECK(x == 0);
  CHECK_FALSE(svc_membership(controls({1, 0, 0, 0}, {1, 0, 0, 0})).member);
  CHECK(svc_membership(controls({0, 0, 0, 0}, {0, 0, 0, 0})).degenerate);
}

TEST_CASE("quadratic forms polarize") {
  const CovectorFiber c{2, {1, 0, 3, -1, 2, 1}};
  CHECK(bilinear_R(c, c) == form_R(c));
  CHECK(form_R(c) == Rational(4) - 4 * (1 - 0 + 3 * -1));
  const ControlVector w = controls({1, 2, 3, 4}, {1, -1, 0, 2});
  CHECK(bilinear_Q(w, w) == form_Q(w));
  CHECK(determinant(gram_R()) != 0);
  CHECK(determinant(gram_Q()) != 0);
}

TEST_CASE("RK4 is fourth order on the harmonic oscillator") {
  const OdeRhs f = [](const std::vector<double>& y, std::vector<double>& dy) {
    dy.resize(2);
    dy[0] = y[1];
    dy[1] = -y[0];
  };
  auto error = [&](double h) {
    std::vector<double> y{1, 0};
    const int n = static_cast<int>(std::lround(1.0 / h));
    for (int k = 0; k < n; ++k) y = rk4_step(f, y, h);
    return std::hypot(y[0] - std::cos(1.0), y[1] + std::sin(1.0));
  };
  const double ratio = error(0.1) / error(0.05);
  CHECK(ratio > 14);
  CHECK(ratio < 18);
}

TEST_CASE("integrator on the standard abnormal data") {
  const ControlSystem sys(build_model());
  const IntegrationResult r = integrate_extremal(sys, standard_initial_data(), standard_controls(), 1e-3, 1);
  CHECK(r.drift.max_constraint_drift < 1e-8);
  CHECK(r.drift.max_sr_drift < 1e-8);
  CHECK(r.drift.q_value == 0);
  const auto& last = r.trajectory.samples.back().state;
  CHECK(last.t == doctest::Approx(1));
  CHECK(last.base[3] == doctest::Approx(1));
  CHECK(last.base[5] == doctest::Approx(1));
  CHECK(verify_integrator(sys).count(Status::fail) == 0);
}

TEST_CASE("integrator preconditions") {
  const ControlSystem sys(build_model());
  CHECK_THROWS_AS(integrate_extremal(sys, standard_initial_data(), standard_controls(), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(integrate_extremal(sys, standard_initial_data(), controls({0, 0, 1, 0}, {0, 0, 1, 0}), 1e-3, 1),
                  std::invalid_argument);
  ExtremalInit zero = standard_initial_data();
  zero.covector.assign(15, Rational(0));
  CHECK_THROWS_AS(integrate_extremal(sys, zero, standard_controls(), 1e-3, 1), std::invalid_argument);
}

TEST_CASE("equations of motion and flow lemma") {
  const ControlSystem sys(build_model());
  CHECK(sys.equations.size() == 30);
  CHECK(verify_equations(sys).count(Status::fail) == 0);
  CHECK(verify_flow_lemma_symbolic(sys).count(Status::fail) == 0);
}
