#ifndef F4PROLONG_CONTROL_CONTROL_HPP
#define F4PROLONG_CONTROL_CONTROL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "f4prolong/cartan_model/cartan_model.hpp"
#include "f4prolong/exactalg/linalg.hpp"
#include "f4prolong/report.hpp"

namespace f4prolong {

/// s, p1..p4, q1..q4, r12, r13, r14, r23, r24, r34; the a-th fiber variable
/// is paired with the a-th base variable.
const std::vector<std::string>& fiber_variables();
/// u1..u4, v1..v4
const std::vector<std::string>& control_variables();

struct CotangentChart {
  explicit CotangentChart(ChartPtr base);
  ChartPtr base;
  /// base variables then fiber variables (30)
  ChartPtr chart;
  /// cotangent variables then controls (38)
  ChartPtr flow;
};

/// <p, field(x)> on the cotangent chart. Throws unless field is on the base chart.
MultiPoly hamiltonian_lift(const CotangentChart& t, const VectorField& field);
/// Every term has fiber degree exactly 1.
bool is_fiber_linear(const CotangentChart& t, const MultiPoly& h);

/// {f,g} = sum_a (df/dp_a dg/dx_a - df/dx_a dg/dp_a), so that
/// {H_X, H_Y} = H_[X,Y]. Works on any chart containing the 30 cotangent
/// names; other variables are parameters.
MultiPoly poisson_bracket(const MultiPoly& f, const MultiPoly& g);

struct CovectorFiber {
  Rational s;
  /// r12, r13, r14, r23, r24, r34
  std::array<Rational, 6> r;
};

struct ControlVector {
  std::array<Rational, 4> u;
  std::array<Rational, 4> v;
  bool is_zero() const;
  RatVector stacked() const;
};

/// Constraint matrix [[A11, -sI], [sI, A22]] in the printed entry layout.
template <typename T>
Matrix<T> build_A_generic(const T& s, const std::array<T, 6>& r, const T& zero) {
  const T &r12 = r[0], &r13 = r[1], &r14 = r[2], &r23 = r[3], &r24 = r[4], &r34 = r[5];
  Matrix<T> a(8, 8, zero);
  auto set = [&](int i, int j, const T& val) { a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = val; };
  auto twice = [](const T& x) { return x + x; };
  set(1, 2, twice(r12)), set(1, 3, twice(r13)), set(1, 4, twice(r14)), set(1, 5, zero - s);
  set(2, 1, zero - twice(r12)), set(2, 3, twice(r23)), set(2, 4, twice(r24)), set(2, 6, zero - s);
  set(3, 1, zero - twice(r13)), set(3, 2, zero - twice(r23)), set(3, 4, twice(r34)), set(3, 7, zero - s);
  set(4, 1, zero - twice(r14)), set(4, 2, zero - twice(r24)), set(4, 3, zero - twice(r34)), set(4, 8, zero - s);
  set(5, 1, s), set(5, 6, twice(r34)), set(5, 7, zero - twice(r24)), set(5, 8, twice(r23));
  set(6, 2, s), set(6, 5, zero - twice(r34)), set(6, 7, twice(r14)), set(6, 8, zero - twice(r13));
  set(7, 3, s), set(7, 5, twice(r24)), set(7, 6, zero - twice(r14)), set(7, 8, twice(r12));
  set(8, 4, s), set(8, 5, zero - twice(r23)), set(8, 6, twice(r13)), set(8, 7, zero - twice(r12));
  return a;
}

/// The 8x7 matrix U(u,v) acting on (s, r12, r13, r14, r23, r24, r34).
template <typename T>
Matrix<T> build_U_generic(const std::array<T, 4>& u, const std::array<T, 4>& v, const T& zero) {
  Matrix<T> m(8, 7, zero);
  auto set = [&](int i, int j, const T& val) { m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = val; };
  auto U = [&](int i) -> const T& { return u[static_cast<std::size_t>(i - 1)]; };
  auto V = [&](int i) -> const T& { return v[static_cast<std::size_t>(i - 1)]; };
  auto twice = [](const T& x) { return x + x; };
  auto neg = [&](const T& x) { return zero - x; };
  set(1, 1, neg(V(1))), set(1, 2, twice(U(2))), set(1, 3, twice(U(3))), set(1, 4, twice(U(4)));
  set(2, 1, neg(V(2))), set(2, 2, neg(twice(U(1)))), set(2, 5, twice(U(3))), set(2, 6, twice(U(4)));
  set(3, 1, neg(V(3))), set(3, 3, neg(twice(U(1)))), set(3, 5, neg(twice(U(2)))), set(3, 7, twice(U(4)));
  set(4, 1, neg(V(4))), set(4, 4, neg(twice(U(1)))), set(4, 6, neg(twice(U(2)))), set(4, 7, neg(twice(U(3))));
  set(5, 1, U(1)), set(5, 5, twice(V(4))), set(5, 6, neg(twice(V(3)))), set(5, 7, twice(V(2)));
  set(6, 1, U(2)), set(6, 3, neg(twice(V(4)))), set(6, 4, twice(V(3))), set(6, 7, neg(twice(V(1))));
  set(7, 1, U(3)), set(7, 2, twice(V(4))), set(7, 4, neg(twice(V(2)))), set(7, 6, twice(V(1)));
  set(8, 1, U(4)), set(8, 2, neg(twice(V(3)))), set(8, 3, twice(V(2))), set(8, 5, neg(twice(V(1))));
  return m;
}

RatMatrix build_A(const CovectorFiber& c);
RatMatrix build_U(const ControlVector& w);

/// Chart s, r12..r34 for the symbolic A.
ChartPtr covector_chart();
/// Chart u1..u4, v1..v4 for the symbolic U.
ChartPtr control_chart();
PolyMatrix build_A_symbolic();
PolyMatrix build_U_symbolic();

/// A rebuilt from the lifts: entry (a,b) = H_[xi_a, xi_b] on the frame
/// X1..X4, Y1..Y4, as polynomials on the cotangent chart.
PolyMatrix constraint_matrix_from_brackets(const CartanModel& m, const CotangentChart& t);

Rational form_Q(const ControlVector& w);
Rational form_R(const CovectorFiber& c);
/// Polarizations: (w, w) = Q(w), (c | c) = R(c).
Rational bilinear_Q(const ControlVector& a, const ControlVector& b);
Rational bilinear_R(const CovectorFiber& a, const CovectorFiber& b);
/// Bilinear form for R exactly as printed, kept to expose its misprint.
Rational printed_bilinear_R(const CovectorFiber& a, const CovectorFiber& b);
/// Gram matrix of (.|.) on (s, r12, ..., r34) as displayed for the (4,3)-metric.
RatMatrix gram_R();
RatMatrix gram_Q();

struct SvcResult {
  bool member = false;
  /// nonzero (s, r) with A(s,r)(u,v) = 0
  std::optional<CovectorFiber> witness;
  /// zero control vector; any covector works
  bool degenerate = false;
};

/// Membership decided by the kernel of U(w), never by evaluating Q.
SvcResult svc_membership(const ControlVector& w);

/// Identities (i)-(vi) for A, U, Q and R. `samples` controls the random
/// parts (rank dichotomy uses that many Q = 0 and Q != 0 draws each).
Report verify_matrix_identities(std::uint64_t seed, std::size_t samples = 50);

/// Membership equals Q = 0 on `samples` seeded control vectors (half on the
/// cone), with witness checks.
Report verify_svc(std::uint64_t seed, std::size_t samples = 200);

/// {H_xi, H_eta} = H_[xi,eta] for the 28 frame pairs, lift formulas and
/// fiber linearity.
Report verify_lifts(const CartanModel& m, const CotangentChart& t);

/// Hamilton's equations for H = sum u_i H_Xi + v_j H_Yj.
struct ControlSystem {
  explicit ControlSystem(const CartanModel& model);
  CartanModel model;
  CotangentChart cot;
  /// H_X1..H_X4, H_Y1..H_Y4 on the cotangent chart
  std::vector<MultiPoly> lifts;
  /// H on the flow chart
  MultiPoly hamiltonian;
  /// d/dt of each of the 30 cotangent variables, on the flow chart
  std::vector<MultiPoly> equations;
  /// chain-rule derivative of f (on the flow chart) along the flow
  MultiPoly flow_derivative(const MultiPoly& f) const;
};

/// The displayed equations of motion against the derived ones.
Report verify_equations(const ControlSystem& sys);

/// Exact statements of the flow lemma in the 38 flow variables.
Report verify_flow_lemma_symbolic(const ControlSystem& sys);

}  // namespace f4prolong

#endif  // F4PROLONG_CONTROL_CONTROL_HPP
