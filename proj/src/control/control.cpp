#include "f4prolong/control/control.hpp"

#include <map>
#include <random>
#include <tuple>
#include <stdexcept>

namespace f4prolong {

namespace {

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names{"X1", "X2", "X3", "X4", "Y1", "Y2", "Y3", "Y4"};
  return names;
}

std::string poly_string(const MultiPoly& p) { return p.is_zero() ? "0" : p.to_string(); }

std::string vector_string(const RatVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out + ")";
}

PolyMatrix poly_zero_matrix(const ChartPtr& c, std::size_t r, std::size_t k) { return PolyMatrix(r, k, MultiPoly(c)); }

PolyMatrix scalar_identity(const MultiPoly& f, std::size_t n) {
  PolyMatrix m = poly_zero_matrix(f.chart(), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f;
  return m;
}

PolyMatrix embed_matrix(const PolyMatrix& m, const ChartPtr& target) {
  PolyMatrix out = poly_zero_matrix(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).embed(target);
  return out;
}

bool matrix_equal(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

/// First differing entry, for report text.
std::string first_difference(const PolyMatrix& a, const PolyMatrix& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j))
        return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + poly_string(a(i, j)) +
               " vs " + poly_string(b(i, j));
  return "equal";
}

RatMatrix product(const RatMatrix& a, const RatMatrix& b) { return a * b; }

RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
  RatVector out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

bool all_zero(const RatVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

CovectorFiber fiber_from(const RatVector& v) {
  CovectorFiber c;
  c.s = v.at(0);
  for (std::size_t k = 0; k < 6; ++k) c.r[k] = v.at(k + 1);
  return c;
}

RatVector fiber_vector(const CovectorFiber& c) {
  RatVector v{c.s};
  v.insert(v.end(), c.r.begin(), c.r.end());
  return v;
}

ControlVector control_from(const RatVector& v) {
  ControlVector w;
  for (std::size_t k = 0; k < 4; ++k) {
    w.u[k] = v.at(k);
    w.v[k] = v.at(k + 4);
  }
  return w;
}

/// Integer entries in [lo, hi].
RatVector random_vector(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  RatVector v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

/// Seeded control vector with Q = 0 (solved for v1) and w != 0.
ControlVector random_cone_point(std::mt19937_64& rng) {
  for (;;) {
    ControlVector w = control_from(random_vector(rng, 8, -3, 3));
    if (w.u[0] == 0) w.u[0] = 1;
    w.v[0] = -(w.u[1] * w.v[1] + w.u[2] * w.v[2] + w.u[3] * w.v[3]) / w.u[0];
    if (!w.is_zero()) return w;
  }
}

ControlVector random_off_cone_point(std::mt19937_64& rng) {
  for (;;) {
    ControlVector w = control_from(random_vector(rng, 8, -3, 3));
    if (form_Q(w) != 0) return w;
  }
}

std::string control_string(const ControlVector& w) { return vector_string(w.stacked()); }

}  // namespace

const std::vector<std::string>& fiber_variables() {
  static const std::vector<std::string> vars{"s",  "p1", "p2",  "p3",  "p4",  "q1",  "q2",  "q3",
                                             "q4", "r12", "r13", "r14", "r23", "r24", "r34"};
  return vars;
}

const std::vector<std::string>& control_variables() {
  static const std::vector<std::string> vars{"u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4"};
  return vars;
}

CotangentChart::CotangentChart(ChartPtr b) : base(std::move(b)) {
  if (base->dimension() != fiber_variables().size())
    throw std::invalid_argument("CotangentChart: base chart must have 15 variables");
  std::vector<std::string> vars = base->variables();
  vars.insert(vars.end(), fiber_variables().begin(), fiber_variables().end());
  chart = Chart::make(base->id() + ".cotangent", vars);
  vars.insert(vars.end(), control_variables().begin(), control_variables().end());
  flow = Chart::make(base->id() + ".flow", vars);
}

MultiPoly hamiltonian_lift(const CotangentChart& t, const VectorField& field) {
  require_same_chart(field.chart(), t.base, "hamiltonian_lift");
  MultiPoly h(t.chart);
  const auto& fiber = fiber_variables();
  for (std::size_t a = 0; a < fiber.size(); ++a) {
    const MultiPoly& c = field.component(a);
    if (c.is_zero()) continue;
    h += MultiPoly::variable(t.chart, fiber[a]) * c.embed(t.chart);
  }
  return h;
}

bool is_fiber_linear(const CotangentChart& t, const MultiPoly& h) {
  std::vector<std::size_t> idx;
  for (const auto& f : fiber_variables()) idx.push_back(t.chart->index(f));
  if (!same_chart(h.chart(), t.chart)) return false;
  const auto range = h.degree_range_in(idx);
  return range && range->first == 1 && range->second == 1;
}

MultiPoly poisson_bracket(const MultiPoly& f, const MultiPoly& g) {
  require_same_chart(f.chart(), g.chart(), "poisson_bracket");
  const ChartPtr& c = f.chart();
  const auto& base = cartan_variables();
  const auto& fiber = fiber_variables();
  MultiPoly out(c);
  for (std::size_t a = 0; a < base.size(); ++a) {
    const std::size_t x = c->index(base[a]);
    const std::size_t p = c->index(fiber[a]);
    const MultiPoly fp = f.diff(p), gp = g.diff(p);
    if (!fp.is_zero()) out += fp * g.diff(x);
    if (!gp.is_zero()) out -= f.diff(x) * gp;
  }
  return out;
}

bool ControlVector::is_zero() const {
  for (std::size_t k = 0; k < 4; ++k)
    if (u[k] != 0 || v[k] != 0) return false;
  return true;
}

RatVector ControlVector::stacked() const {
  RatVector out(u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

RatMatrix build_A(const CovectorFiber& c) { return build_A_generic<Rational>(c.s, c.r, Rational(0)); }

RatMatrix build_U(const ControlVector& w) { return build_U_generic<Rational>(w.u, w.v, Rational(0)); }

ChartPtr covector_chart() {
  static const ChartPtr c = Chart::make("covector", {"s", "r12", "r13", "r14", "r23", "r24", "r34"});
  return c;
}

ChartPtr control_chart() {
  static const ChartPtr c = Chart::make("controls", control_variables());
  return c;
}

PolyMatrix build_A_symbolic() {
  const ChartPtr c = covector_chart();
  std::array<MultiPoly, 6> r{MultiPoly::variable(c, "r12"), MultiPoly::variable(c, "r13"), MultiPoly::variable(c, "r14"),
                             MultiPoly::variable(c, "r23"), MultiPoly::variable(c, "r24"), MultiPoly::variable(c, "r34")};
  return build_A_generic<MultiPoly>(MultiPoly::variable(c, "s"), r, MultiPoly(c));
}

PolyMatrix build_U_symbolic() {
  const ChartPtr c = control_chart();
  auto var = [&](const char* n) { return MultiPoly::variable(c, n); };
  std::array<MultiPoly, 4> u{var("u1"), var("u2"), var("u3"), var("u4")};
  std::array<MultiPoly, 4> v{var("v1"), var("v2"), var("v3"), var("v4")};
  return build_U_generic<MultiPoly>(u, v, MultiPoly(c));
}

PolyMatrix constraint_matrix_from_brackets(const CartanModel& m, const CotangentChart& t) {
  const auto gens = m.generators();
  PolyMatrix a = poly_zero_matrix(t.chart, 8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) a(i, j) = hamiltonian_lift(t, lie_bracket(gens[i], gens[j]));
  return a;
}

Rational form_Q(const ControlVector& w) { return bilinear_Q(w, w); }

Rational form_R(const CovectorFiber& c) {
  const auto& r = c.r;
  return c.s * c.s - 4 * (r[0] * r[5] - r[1] * r[4] + r[2] * r[3]);
}

Rational bilinear_Q(const ControlVector& a, const ControlVector& b) {
  Rational acc = 0;
  for (std::size_t k = 0; k < 4; ++k) acc += a.u[k] * b.v[k] + a.v[k] * b.u[k];
  return acc / 2;
}

Rational bilinear_R(const CovectorFiber& a, const CovectorFiber& b) {
  const auto &r = a.r, &q = b.r;
  return a.s * b.s - 2 * (r[0] * q[5] + r[5] * q[0] - r[1] * q[4] - r[4] * q[1] + r[2] * q[3] + r[3] * q[2]);
}

Rational printed_bilinear_R(const CovectorFiber& a, const CovectorFiber& b) {
  const auto &r = a.r, &q = b.r;
  return a.s * b.s - 2 * (r[0] * q[5] + r[5] * q[0] - r[1] * q[4] + r[4] * q[1] + r[2] * q[3] + r[3] * q[2]);
}

RatMatrix gram_R() {
  return rat_matrix({{1, 0, 0, 0, 0, 0, 0},
                     {0, 0, 0, 0, 0, 0, -2},
                     {0, 0, 0, 0, 0, 2, 0},
                     {0, 0, 0, 0, -2, 0, 0},
                     {0, 0, 0, -2, 0, 0, 0},
                     {0, 0, 2, 0, 0, 0, 0},
                     {0, -2, 0, 0, 0, 0, 0}});
}

RatMatrix gram_Q() {
  RatMatrix g = rat_matrix(8, 8);
  for (std::size_t k = 0; k < 4; ++k) g(k, k + 4) = g(k + 4, k) = Rational(1, 2);
  return g;
}

SvcResult svc_membership(const ControlVector& w) {
  SvcResult out;
  if (w.is_zero()) {
    out.member = true;
    out.degenerate = true;
    CovectorFiber c;
    c.r[0] = 1;
    out.witness = c;
    return out;
  }
  const RankKernel rk = rank_kernel(build_U(w));
  if (rk.kernel.empty()) return out;
  out.member = true;
  out.witness = fiber_from(rk.kernel.front());
  return out;
}

Report verify_matrix_identities(std::uint64_t seed, std::size_t samples) {
  Report rep;
  rep.suite = "control.matrices";
  rep.seed = seed;
  const char* ref_det = "determinants of the diagonal blocks of A";
  const ChartPtr c = covector_chart();
  const MultiPoly one(c, Rational(1));
  const MultiPoly s = MultiPoly::variable(c, "s");
  const MultiPoly P = parse_poly(c, "r12 r34 - r13 r24 + r14 r23");
  const MultiPoly R = s * s - Rational(4) * P;
  const PolyMatrix A = build_A_symbolic();
  const PolyMatrix A11 = A.block(0, 0, 4, 4), A22 = A.block(4, 4, 4, 4);

  rep.check("control.A.skew", "A is skew-symmetric", is_skew_symmetric(A), "A + tA", "0", "constraint matrix display");
  rep.check("control.A.entry12", "A entry (1,2) is 2 r12", A(0, 1) == parse_poly(c, "2 r12"), poly_string(A(0, 1)),
            "2 r12", "constraint matrix display");
  rep.check("control.A.entry15", "A entry (1,5) is -s", A(0, 4) == -s, poly_string(A(0, 4)), "-s",
            "constraint matrix display");

  // (i)
  const MultiPoly want_det = (Rational(4) * P).pow(2);
  const MultiPoly d11 = determinant_expansion(A11, one), d22 = determinant_expansion(A22, one);
  rep.check("control.identity.detA11", "det A11 = (4(r12 r34 - r13 r24 + r14 r23))^2", d11 == want_det,
            poly_string(d11), poly_string(want_det), ref_det);
  rep.check("control.identity.detA22", "det A22 = (4(r12 r34 - r13 r24 + r14 r23))^2", d22 == want_det,
            poly_string(d22), poly_string(want_det), ref_det);
  const MultiPoly pf11 = pfaffian(A11, one), pf22 = pfaffian(A22, one);
  rep.check("control.identity.pfA11", "Pf A11 = 4(r12 r34 - r13 r24 + r14 r23)", pf11 == Rational(4) * P,
            poly_string(pf11), poly_string(Rational(4) * P), ref_det);
  rep.check("control.identity.pfA22", "Pf A22 = 4(r12 r34 - r13 r24 + r14 r23)", pf22 == Rational(4) * P,
            poly_string(pf22), poly_string(Rational(4) * P), ref_det);

  // (ii)
  const PolyMatrix minus4P = scalar_identity(Rational(-4) * P, 4);
  const PolyMatrix p1 = A11 * A22, p2 = A22 * A11;
  rep.check("control.identity.A11A22", "A11 A22 = -4(r12 r34 - r13 r24 + r14 r23) I", matrix_equal(p1, minus4P),
            first_difference(p1, minus4P), "-4P I", "product of the diagonal blocks");
  rep.check("control.identity.A22A11", "A22 A11 = -4(r12 r34 - r13 r24 + r14 r23) I", matrix_equal(p2, minus4P),
            first_difference(p2, minus4P), "-4P I", "product of the diagonal blocks");

  // (iii) K A = R I with K = [[A22, sI], [-sI, A11]]: any (u,v) in ker A has R u = R v = 0.
  PolyMatrix K = poly_zero_matrix(c, 8, 8);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      K(i, j) = A22(i, j);
      K(i + 4, j + 4) = A11(i, j);
    }
    K(i, i + 4) = s;
    K(i + 4, i) = -s;
  }
  const PolyMatrix KA = K * A, RI = scalar_identity(R, 8);
  rep.check("control.identity.R_annihilates", "[[A22, sI], [-sI, A11]] A = R I, so A(u,v) = 0 forces R (u,v) = 0",
            matrix_equal(KA, RI), first_difference(KA, RI), "R I", "consequence R u = R v = 0");

  // (iv) s = 0 and P = 0
  std::mt19937_64 rng(seed);
  std::size_t bad_rank = 0, bad_image = 0, tested = 0;
  std::string detail;
  std::vector<CovectorFiber> fibers;
  {
    CovectorFiber c0;
    c0.r[0] = 1;
    fibers.push_back(c0);
  }
  while (fibers.size() < samples) {
    RatVector r = random_vector(rng, 5, -3, 3);
    if (r[0] == 0) r[0] = 1;
    CovectorFiber cf;
    cf.s = 0;
    for (std::size_t k = 0; k < 5; ++k) cf.r[k] = r[k];
    cf.r[5] = (cf.r[1] * cf.r[4] - cf.r[2] * cf.r[3]) / cf.r[0];
    fibers.push_back(cf);
  }
  for (const auto& cf : fibers) {
    ++tested;
    const RatMatrix a = build_A(cf);
    const RatMatrix a11 = a.block(0, 0, 4, 4), a22 = a.block(4, 4, 4, 4);
    const std::size_t k11 = rank(a11), k22 = rank(a22);
    if (k11 != 2 || k22 != 2) {
      if (bad_rank++ == 0) detail = "rank A11 = " + std::to_string(k11) + ", rank A22 = " + std::to_string(k22);
      continue;
    }
    // Im A22 inside Ker A11 with equal dimensions (and symmetrically).
    const bool zero_products = rank(product(a11, a22)) == 0 && rank(product(a22, a11)) == 0;
    if (!zero_products) ++bad_image;
  }
  rep.check("control.identity.s0.rank", "s = 0, R = 0: rank A11 = rank A22 = 2",
            bad_rank == 0, std::to_string(tested - bad_rank) + "/" + std::to_string(tested) + (detail.empty() ? "" : "; " + detail),
            std::to_string(tested) + "/" + std::to_string(tested), "ranks of the diagonal blocks when s = 0");
  rep.check("control.identity.s0.kernel_image", "s = 0, R = 0: Ker A11 = Im A22 and Im A11 = Ker A22",
            bad_image == 0 && bad_rank == 0, std::to_string(tested - bad_image) + "/" + std::to_string(tested),
            std::to_string(tested) + "/" + std::to_string(tested), "kernel and image of the diagonal blocks");

  // (v) tU U in the displayed sense tU'' U' + tU' U''
  const ChartPtr cc = control_chart();
  const PolyMatrix U = build_U_symbolic();
  const PolyMatrix U1 = U.block(0, 0, 4, 7), U2 = U.block(4, 0, 4, 7);
  const PolyMatrix UU = U2.transpose() * U1 + U1.transpose() * U2;
  const MultiPoly Q = parse_poly(cc, "u1 v1 + u2 v2 + u3 v3 + u4 v4");
  PolyMatrix shape = poly_zero_matrix(cc, 7, 7);
  shape(0, 0) = Rational(-2) * Q;
  for (auto [i, j, k] : std::vector<std::tuple<int, int, int>>{{1, 6, 4}, {2, 5, -4}, {3, 4, 4}}) {
    shape(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(k) * Q;
    shape(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = Rational(k) * Q;
  }
  rep.check("control.UU.shape", "tU U matches the displayed 7x7 matrix", matrix_equal(UU, shape),
            first_difference(UU, shape), "-2Q at (1,1); +-4Q on the anti-diagonal", "tU U display");
  rep.check("control.UU.entry11", "tU U entry (1,1) is -2Q", UU(0, 0) == Rational(-2) * Q, poly_string(UU(0, 0)),
            poly_string(Rational(-2) * Q), "tU U display");
  const MultiPoly dUU = determinant_expansion(UU, MultiPoly(cc, Rational(1)));
  const MultiPoly printed_det = Rational(8192) * Q.pow(8);
  const MultiPoly derived_det = Rational(8192) * Q.pow(7);
  rep.check("control.UU.det", "det tU U = 2^13 Q^7", dUU == derived_det, poly_string(dUU) == poly_string(derived_det) ? "8192 Q^7" : poly_string(dUU),
            "8192 Q^7", "tU U determinant");
  if (dUU != printed_det)
    rep.discrepancy("control.UU.det.printed", "printed determinant of tU U has the wrong power of Q",
                    "2^13 Q^7", "2^13 Q^8", "tU U determinant");

  // (vi) rank dichotomy of U
  std::size_t on_ok = 0, off_ok = 0, null_ok = 0;
  std::string bad_on, bad_off;
  for (std::size_t k = 0; k < samples; ++k) {
    const ControlVector w = random_cone_point(rng);
    const RankKernel rk = rank_kernel(build_U(w));
    bool null = true;
    for (const auto& a : rk.kernel)
      for (const auto& b : rk.kernel)
        if (bilinear_R(fiber_from(a), fiber_from(b)) != 0) null = false;
    if (rk.rank == 4 && rk.kernel.size() == 3) {
      ++on_ok;
    } else if (bad_on.empty()) {
      bad_on = control_string(w) + " has rank " + std::to_string(rk.rank);
    }
    if (null) ++null_ok;
  }
  for (std::size_t k = 0; k < samples; ++k) {
    const ControlVector w = random_off_cone_point(rng);
    const std::size_t rk = rank(build_U(w));
    if (rk == 7) {
      ++off_ok;
    } else if (bad_off.empty()) {
      bad_off = control_string(w) + " has rank " + std::to_string(rk);
    }
  }
  const std::string n = std::to_string(samples);
  rep.check("control.U.rank_on_cone", "Q = 0, w != 0: rank U = 4 and dim Ker U = 3", on_ok == samples,
            std::to_string(on_ok) + "/" + n + (bad_on.empty() ? "" : "; " + bad_on), n + "/" + n, "rank of U on the cone");
  rep.check("control.U.rank_off_cone", "Q != 0: rank U = 7", off_ok == samples,
            std::to_string(off_ok) + "/" + n + (bad_off.empty() ? "" : "; " + bad_off), n + "/" + n, "rank of U off the cone");
  rep.check("control.U.kernel_null", "Q = 0: Ker U is totally null for (.|.)", null_ok == samples,
            std::to_string(null_ok) + "/" + n, n + "/" + n, "Ker U inside the null set of R");
  {
    ControlVector e11, e12;
    e11.u[0] = 1, e11.v[0] = 1;
    e12.u[0] = 1, e12.v[1] = 1;
    const std::size_t r11 = rank(build_U(e11));
    const RankKernel r12 = rank_kernel(build_U(e12));
    rep.check("control.U.rank_e1e1", "U(u = e1, v = e1) has rank 7", r11 == 7, std::to_string(r11), "7",
              "rank of U off the cone");
    rep.check("control.U.rank_e1e2", "U(u = e1, v = e2) has rank 4 with 3-dim kernel",
              r12.rank == 4 && r12.kernel.size() == 3,
              std::to_string(r12.rank) + ", kernel " + std::to_string(r12.kernel.size()), "4, kernel 3",
              "rank of U on the cone");
  }

  // A(s,r)(u,v) = U(u,v)(s,r) in all 15 scalars
  {
    std::vector<std::string> vars = covector_chart()->variables();
    vars.insert(vars.end(), control_variables().begin(), control_variables().end());
    const ChartPtr big = Chart::make("covector+controls", vars);
    const PolyMatrix Ab = embed_matrix(A, big), Ub = embed_matrix(U, big);
    PolyMatrix uv = poly_zero_matrix(big, 8, 1), sr = poly_zero_matrix(big, 7, 1);
    for (std::size_t k = 0; k < 8; ++k) uv(k, 0) = MultiPoly::variable(big, control_variables()[k]);
    for (std::size_t k = 0; k < 7; ++k) sr(k, 0) = MultiPoly::variable(big, covector_chart()->variable(k));
    const PolyMatrix lhs = Ab * uv, rhs = Ub * sr;
    rep.check("control.U.bilinear", "A(s,r)(u,v) = U(u,v)(s,r) identically", matrix_equal(lhs, rhs),
              first_difference(lhs, rhs), "equal", "equivalence of the two constraint displays");
  }

  // quadratic forms
  {
    bool gram_ok = true, diag_ok = true;
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) {
        RatVector ei(7, Rational(0)), ej(7, Rational(0));
        ei[i] = 1, ej[j] = 1;
        if (bilinear_R(fiber_from(ei), fiber_from(ej)) != gram_R()(i, j)) gram_ok = false;
      }
    for (std::size_t k = 0; k < samples; ++k) {
      const CovectorFiber cf = fiber_from(random_vector(rng, 7, -4, 4));
      if (bilinear_R(cf, cf) != form_R(cf)) diag_ok = false;
      const ControlVector w = control_from(random_vector(rng, 8, -4, 4));
      if (bilinear_Q(w, w) != form_Q(w)) diag_ok = false;
    }
    rep.check("control.forms.gram_R", "displayed (4,3) Gram matrix is the polarization of R", gram_ok,
              gram_ok ? "equal" : "differs", "equal", "representation matrix of the (4,3)-metric");
    rep.check("control.forms.polarization", "(c|c) = R(c) and (w,w) = Q(w)", diag_ok, diag_ok ? "equal" : "differs",
              "equal", "quadratic forms Q and R");
    rep.check("control.forms.nondegenerate", "Gram matrices of Q and R are nondegenerate",
              determinant(gram_R()) != 0 && determinant(gram_Q()) != 0,
              "det = " + to_string(determinant(gram_R())) + ", " + to_string(determinant(gram_Q())), "nonzero",
              "canonical conformal metrics");
    CovectorFiber e13, e24;
    e13.r[1] = 1;
    e24.r[4] = 1;
    const Rational a = printed_bilinear_R(e13, e24), b = printed_bilinear_R(e24, e13);
    if (a != b)
      rep.discrepancy("control.forms.printed_bilinear_R",
                      "printed bilinear form of R is not symmetric: the r24 r13' term has the wrong sign",
                      "(e13|e24) = (e24|e13) = " + to_string(bilinear_R(e13, e24)),
                      "(e13|e24) = " + to_string(a) + ", (e24|e13) = " + to_string(b), "bilinear form induced by R");
    rep.check("control.forms.R_example", "R(s = 2, r12 = 1, r34 = 1) = 0",
              [] {
                CovectorFiber x;
                x.s = 2, x.r[0] = 1, x.r[5] = 1;
                return form_R(x) == 0;
              }(),
              "0", "0", "quadratic form R");
  }
  return rep;
}

Report verify_svc(std::uint64_t seed, std::size_t samples) {
  Report rep;
  rep.suite = "control.svc";
  rep.seed = seed;
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  std::size_t agree = 0, witnesses = 0, witness_ok = 0;
  std::string bad;
  auto examine = [&](const ControlVector& w) {
    const SvcResult res = svc_membership(w);
    const bool q0 = form_Q(w) == 0;
    if (res.member == q0) {
      ++agree;
    } else if (bad.empty()) {
      bad = control_string(w) + ": member " + (res.member ? "true" : "false");
    }
    if (res.witness && !res.degenerate) {
      ++witnesses;
      const RatVector aw = mat_vec(build_A(*res.witness), w.stacked());
      if (form_R(*res.witness) == 0 && all_zero(aw) && !all_zero(fiber_vector(*res.witness))) ++witness_ok;
    }
  };
  for (std::size_t k = 0; k < samples; ++k) examine(k % 2 == 0 ? random_cone_point(rng) : random_off_cone_point(rng));
  const std::string n = std::to_string(samples);
  rep.check("control.svc.membership", "kernel-based membership agrees with Q = 0", agree == samples,
            std::to_string(agree) + "/" + n + (bad.empty() ? "" : "; " + bad), n + "/" + n,
            "singular velocity cone is Q = 0");
  rep.check("control.svc.witness", "every witness is nonzero with R = 0 and A(witness) w = 0",
            witnesses > 0 && witness_ok == witnesses, std::to_string(witness_ok) + "/" + std::to_string(witnesses),
            std::to_string(witnesses) + "/" + std::to_string(witnesses), "nontrivial covector forces R = 0");

  ControlVector e12, e11, zero;
  e12.u[0] = 1, e12.v[1] = 1;
  e11.u[0] = 1, e11.v[0] = 1;
  const SvcResult r12 = svc_membership(e12), r11 = svc_membership(e11), r0 = svc_membership(zero);
  rep.check("control.svc.e1e2", "(u,v) = (e1; e2) is in the cone with an R-null witness",
            r12.member && r12.witness && form_R(*r12.witness) == 0,
            r12.witness ? vector_string(fiber_vector(*r12.witness)) : "none", "member", "singular velocity cone");
  rep.check("control.svc.e1e1", "(u,v) = (e1; e1) is not in the cone", !r11.member, r11.member ? "member" : "not member",
            "not member", "singular velocity cone");
  rep.check("control.svc.zero", "zero control is flagged degenerate", r0.member && r0.degenerate,
            r0.degenerate ? "degenerate" : "not degenerate", "degenerate", "singular velocity cone");
  return rep;
}

Report verify_lifts(const CartanModel& m, const CotangentChart& t) {
  Report rep;
  rep.suite = "control.lifts";
  const auto gens = m.generators();
  const auto& names = generator_names();
  std::vector<MultiPoly> lifts;
  for (const auto& g : gens) lifts.push_back(hamiltonian_lift(t, g));

  std::size_t ok = 0, total = 0;
  std::string bad;
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = a + 1; b < 8; ++b) {
      ++total;
      const MultiPoly lhs = poisson_bracket(lifts[a], lifts[b]);
      const MultiPoly rhs = hamiltonian_lift(t, lie_bracket(gens[a], gens[b]));
      if (lhs == rhs) {
        ++ok;
      } else if (bad.empty()) {
        bad = "{H_" + names[a] + ",H_" + names[b] + "} = " + poly_string(lhs) + " vs " + poly_string(rhs);
      }
    }
  rep.check("control.lifts.poisson", "{H_xi, H_eta} = H_[xi,eta] for the 28 frame pairs", ok == total,
            std::to_string(ok) + "/" + std::to_string(total) + (bad.empty() ? "" : "; " + bad),
            std::to_string(total) + "/" + std::to_string(total), "Poisson bracket of lifts");
  const MultiPoly x1x2 = poisson_bracket(lifts[0], lifts[1]);
  rep.check("control.lifts.selftest", "sign convention: {H_X1, H_X2} = 2 r12", x1x2 == parse_poly(t.chart, "2 r12"),
            poly_string(x1x2), "2 r12", "Poisson bracket of lifts");
  const MultiPoly y1x2 = poisson_bracket(lifts[4], lifts[1]);
  rep.check("control.lifts.Y1X2", "{H_Y1, H_X2} = 0", y1x2.is_zero(), poly_string(y1x2), "0",
            "Poisson bracket of lifts");

  const std::vector<std::string> printed{
      "p1 + y1 s - x2 r12 - x3 r13 - x4 r14", "p2 + y2 s + x1 r12 - x3 r23 - x4 r24",
      "p3 + y3 s + x1 r13 + x2 r23 - x4 r34", "p4 + y4 s + x1 r14 + x2 r24 + x3 r34",
      "q1 - y4 r23 + y3 r24 - y2 r34",        "q2 + y4 r13 - y3 r14 - y1 r34",
      "q3 - y4 r12 + y2 r14 - y1 r24",        "q4 + y3 r12 - y2 r13 + y1 r23"};
  // <p, xi> is ground truth; the printed equations of motion are checked
  // against it separately.
  for (std::size_t a = 0; a < 8; ++a) {
    const MultiPoly want = parse_poly(t.chart, printed[a]);
    if (lifts[a] == want) {
      rep.check("control.lifts.H_" + names[a], "H_" + names[a] + " matches the displayed lift", true,
                poly_string(lifts[a]), printed[a], "Hamiltonian lifts display");
      continue;
    }
    rep.discrepancy("control.lifts.H_" + names[a], "displayed H_" + names[a] + " differs from <p, " + names[a] + ">",
                    poly_string(lifts[a]), printed[a], "Hamiltonian lifts display");
  }
  const MultiPoly hz = hamiltonian_lift(t, m.field("Z"));
  rep.check("control.lifts.H_Z", "H_Z = s", hz == MultiPoly::variable(t.chart, "s"), poly_string(hz), "s",
            "Hamiltonian lifts display");

  std::size_t linear = 0;
  for (const auto& f : m.frame)
    if (is_fiber_linear(t, hamiltonian_lift(t, f))) ++linear;
  rep.check("control.lifts.fiber_linear", "every frame lift has fiber degree exactly 1", linear == m.frame.size(),
            std::to_string(linear) + "/" + std::to_string(m.frame.size()),
            std::to_string(m.frame.size()) + "/" + std::to_string(m.frame.size()), "Hamiltonian lifts display");
  return rep;
}

ControlSystem::ControlSystem(const CartanModel& m) : model(m), cot(m.chart), hamiltonian(cot.flow) {
  const auto gens = model.generators();
  const auto& controls = control_variables();
  for (std::size_t a = 0; a < 8; ++a) {
    lifts.push_back(hamiltonian_lift(cot, gens[a]));
    hamiltonian += MultiPoly::variable(cot.flow, controls[a]) * lifts.back().embed(cot.flow);
  }
  const auto& base = cartan_variables();
  const auto& fiber = fiber_variables();
  equations.assign(30, MultiPoly(cot.flow));
  for (std::size_t a = 0; a < base.size(); ++a) {
    equations[a] = hamiltonian.diff(fiber[a]);
    equations[a + base.size()] = -hamiltonian.diff(base[a]);
  }
}

MultiPoly ControlSystem::flow_derivative(const MultiPoly& f) const {
  require_same_chart(f.chart(), cot.flow, "flow_derivative");
  MultiPoly out(cot.flow);
  for (std::size_t k = 0; k < 30; ++k) {
    const MultiPoly d = f.diff(k);
    if (!d.is_zero()) out += d * equations[k];
  }
  return out;
}

Report verify_equations(const ControlSystem& sys) {
  Report rep;
  rep.suite = "control.equations";
  const ChartPtr& fc = sys.cot.flow;
  const char* ref = "constrained Hamiltonian equation display";

  // Base equations against x' = sum u_i X_i + v_j Y_j.
  {
    const auto gens = sys.model.generators();
    std::size_t ok = 0;
    for (std::size_t a = 0; a < 15; ++a) {
      MultiPoly want(fc);
      for (std::size_t k = 0; k < 8; ++k)
        want += MultiPoly::variable(fc, control_variables()[k]) * gens[k].component(a).embed(fc);
      if (want == sys.equations[a]) ++ok;
    }
    rep.check("control.equations.base", "base equations equal sum u_i X_i + v_j Y_j", ok == 15,
              std::to_string(ok) + "/15", "15/15", ref);
  }
  {
    std::size_t zero = 0;
    for (const char* v : {"s", "r12", "r13", "r14", "r23", "r24", "r34"})
      if (sys.equations[fc->index(v)].is_zero()) ++zero;
    rep.check("control.equations.sr_constant", "s and r_ij are constant along the flow", zero == 7,
              std::to_string(zero) + "/7", "7/7", "s and r_ij are locally constant");
  }

  // The display as printed, label by label; s and r_ij rows are checked above.
  const std::vector<std::pair<std::string, std::string>> printed{
      {"z", "u1 y1 + u2 y2 + u3 y3 + u4 u4"},
      {"x1", "u1"}, {"x2", "u2"}, {"x3", "u3"}, {"x4", "u4"},
      {"y1", "v1"}, {"y2", "v2"}, {"y3", "v3"}, {"y4", "v4"},
      {"x12", "- x2 u1 + x1 u2 - y4 v3 + y3 v4"},
      {"x13", "- x3 u1 + x1 u3 + y4 v2 - y2 v4"},
      {"x14", "- x4 u1 + x1 u4 - y3 v2 + y2 v3"},
      {"x23", "- x3 u2 + x2 u3 - y4 v1 + y1 v4"},
      {"x24", "- x4 u2 + x2 u4 + y3 v1 - y1 v3"},
      {"x34", "- x4 u3 + x3 u4 - y2 v1 + y1 v2"},
      {"s", "0"},
      {"p1", "- u2 r12 - u3 r13 - u4 r14"},
      {"p2", "u1 r12 - u3 r23 - u4 r24"},
      {"p3", "u1 r13 + u2 r23 - u4 r34"},
      {"p4", "u1 r14 + u2 r24 + u3 r34"},
      {"q1", "- u1 s - v2 r34 + v3 r24 - v4 r23"},
      {"q2", "- u2 s + v1 r34 - v3 r14 + v4 r13"},
      {"q3", "- u3 s - v1 r24 + v2 r14 - v4 r12"},
      {"q2", "- u4 s + v1 r23 - v2 r13 + v3 r12"},
      {"r12", "0"}, {"r13", "0"}, {"r14", "0"}, {"r23", "0"}, {"r24", "0"}, {"r34", "0"}};

  std::size_t matched = 0;
  for (const auto& [label, rhs] : printed) {
    const MultiPoly p = parse_poly(fc, rhs);
    const std::size_t idx = fc->index(label);
    const MultiPoly& derived = sys.equations[idx];
    if (p == derived) {
      ++matched;
      continue;
    }
    std::string other;
    for (std::size_t k = 0; k < 30; ++k)
      if (k != idx && sys.equations[k] == p) other = fc->variable(k);
    if (!other.empty()) {
      rep.discrepancy("control.equations.label." + label + "->" + other,
                      "printed equation labelled d" + label + "/dt is the derived equation for d" + other + "/dt",
                      "d" + other + "/dt = " + poly_string(p) + ", d" + label + "/dt = " + poly_string(derived),
                      "d" + label + "/dt = " + rhs, ref);
    } else {
      rep.discrepancy("control.equations.rhs." + label, "printed right-hand side of d" + label + "/dt differs from the derived one",
                      poly_string(derived), rhs, ref);
    }
  }
  rep.check("control.equations.printed_matches", "printed rows that agree with the derived equations",
            matched + 2 == printed.size(), std::to_string(matched) + "/" + std::to_string(printed.size()),
            std::to_string(printed.size() - 2) + "/" + std::to_string(printed.size()) + " (two known misprints)", ref);
  return rep;
}

Report verify_flow_lemma_symbolic(const ControlSystem& sys) {
  Report rep;
  rep.suite = "control.flow_lemma";
  const ChartPtr& fc = sys.cot.flow;
  const auto gens = sys.model.generators();
  const auto& controls = control_variables();
  const char* ref = "derivative of H_xi along abnormal bi-extremals";

  auto lift_bracket = [&](std::size_t a, std::size_t b) {
    return hamiltonian_lift(sys.cot, lie_bracket(gens[a], gens[b])).embed(fc);
  };
  std::size_t poisson_ok = 0, chain_ok = 0, printed_agree = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    const MultiPoly hi = sys.lifts[i].embed(fc);
    MultiPoly corrected(fc), printed(fc);
    for (std::size_t j = 0; j < 8; ++j) {
      const MultiPoly uj = MultiPoly::variable(fc, controls[j]);
      corrected += uj * lift_bracket(j, i);
      printed += uj * lift_bracket(i, j);
    }
    if (poisson_bracket(sys.hamiltonian, hi) == corrected) ++poisson_ok;
    if (sys.flow_derivative(hi) == corrected) ++chain_ok;
    if (printed == corrected) ++printed_agree;
  }
  rep.check("control.flow_lemma.poisson", "{H, H_xi} = sum_j w_j H_[xi_j, xi_i] exactly in 38 variables",
            poisson_ok == 8, std::to_string(poisson_ok) + "/8", "8/8", ref);
  rep.check("control.flow_lemma.chain_rule", "chain-rule derivative of H_xi along the flow equals the same sum",
            chain_ok == 8, std::to_string(chain_ok) + "/8", "8/8", ref);
  if (printed_agree != 8)
    rep.discrepancy("control.flow_lemma.printed_sign",
                    "printed form sum_j u_j H_[xi_i, xi_j] has the opposite sign; the last step of its proof swaps the bracket",
                    "dH_xi/dt = sum_j u_j H_[xi_j, xi_i]", "dH_xi/dt = sum_j u_j H_[xi_i, xi_j]", ref);

  {
    const MultiPoly hx1 = sys.lifts[0].embed(fc);
    MultiPoly rhs(fc);
    for (std::size_t j = 0; j < 8; ++j) rhs += MultiPoly::variable(fc, controls[j]) * lift_bracket(0, j);
    const MultiPoly diff = poisson_bracket(hx1, sys.hamiltonian) - rhs;
    rep.check("control.flow_lemma.X1", "{H_X1, H} - sum_j w_j H_[X1, xi_j] = 0", diff.is_zero(), poly_string(diff), "0",
              ref);
  }
  {
    std::map<std::size_t, MultiPoly> zero;
    for (const auto& u : controls) zero.emplace(fc->index(u), MultiPoly(fc));
    std::size_t ok = 0;
    for (std::size_t i = 0; i < 8; ++i) {
      const MultiPoly d = sys.flow_derivative(sys.lifts[i].embed(fc)).substitute(zero, fc);
      if (d.is_zero()) ++ok;
    }
    rep.check("control.flow_lemma.zero_controls", "zero controls give dH_xi/dt = 0", ok == 8, std::to_string(ok) + "/8",
              "8/8", ref);
  }
  return rep;
}

}  // namespace f4prolong
