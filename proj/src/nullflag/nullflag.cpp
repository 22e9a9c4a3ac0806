#include "f4prolong/nullflag/nullflag.hpp"

#include <optional>
#include <stdexcept>

namespace f4prolong {

namespace {

// Slots of (u1..u4, v1..v4).
constexpr std::size_t U1 = 0, U2 = 1, U3 = 2, U4 = 3, V1 = 4, V2 = 5, V3 = 6, V4 = 7;

std::string poly_string(const MultiPoly& p) { return p.is_zero() ? "0" : p.to_string(); }

std::string vector_string(const RatVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out + ")";
}

Rational as_constant(const Rational& q) { return q; }
Rational as_constant(const MultiPoly& p) {
  if (!p.is_constant()) throw std::logic_error("null flag: non-constant coefficient of a dependent coordinate");
  return p.constant_term();
}

/// ss' - 2(r12 r34' + r34 r12' - r13 r24' - r24 r13' + r14 r23' + r23 r14')
template <typename T>
T r_form(const std::vector<T>& a, const std::vector<T>& b) {
  T inner = a[1] * b[6];
  inner += a[6] * b[1];
  inner -= a[2] * b[5];
  inner -= a[5] * b[2];
  inner += a[3] * b[4];
  inner += a[4] * b[3];
  T out = a[0] * b[0];
  out -= inner * Rational(2);
  return out;
}

/// Frame pattern with the six dependent entries; z holds the nine free
/// coordinates in flag_variables() order.
template <typename T>
std::array<std::vector<T>, 3> solve_frame(const std::array<T, 9>& z, const T& zero, const T& one,
                                          std::array<T, 6>& dep) {
  const T &z11 = z[0], &z13 = z[1], &z14 = z[2], &z15 = z[3], &z16 = z[4], &z21 = z[5], &z24 = z[6], &z25 = z[7],
          &z31 = z[8];
  std::array<std::vector<T>, 3> f{std::vector<T>{z11, one, z13, z14, z15, z16, zero},
                                  std::vector<T>{z21, zero, one, z24, z25, zero, zero},
                                  std::vector<T>{z31, zero, zero, one, zero, zero, zero}};
  struct Step {
    std::size_t a, b, row, slot, dep_index;
  };
  // dep order: z17, z26, z27, z35, z36, z37
  const Step order[] = {{2, 2, 2, 4, 3}, {1, 2, 2, 5, 4}, {1, 1, 1, 5, 1},
                        {0, 2, 2, 6, 5}, {0, 1, 1, 6, 2}, {0, 0, 0, 6, 0}};
  for (const Step& s : order) {
    f[s.row][s.slot] = zero;
    const T g0 = r_form(f[s.a], f[s.b]);
    f[s.row][s.slot] = one;
    const T g1 = r_form(f[s.a], f[s.b]);
    f[s.row][s.slot] = one + one;
    const T g2 = r_form(f[s.a], f[s.b]);
    if (!is_zero_value(T(g2 - g1 - g1 + g0))) throw std::logic_error("null flag: equation not linear in its unknown");
    const Rational c = as_constant(T(g1 - g0));
    if (c == 0) throw std::logic_error("null flag: vanishing coefficient");
    T value = g0;
    value *= Rational(-1) / c;
    f[s.row][s.slot] = value;
    dep[s.dep_index] = value;
  }
  return f;
}

/// Gauss-Jordan elimination over Q[z] that only ever divides by nonzero
/// rational constants. rows are augmented [M | b]; nullopt when the system
/// is inconsistent or a pivot would have to be a non-constant polynomial.
std::optional<std::vector<MultiPoly>> solve_constant_pivots(std::vector<std::vector<MultiPoly>> rows, std::size_t n) {
  std::vector<bool> used(rows.size(), false);
  std::vector<std::optional<std::size_t>> pivot_row(n);
  for (;;) {
    bool found = false;
    for (std::size_t r = 0; r < rows.size() && !found; ++r) {
      if (used[r]) continue;
      for (std::size_t c = 0; c < n && !found; ++c) {
        if (pivot_row[c] || rows[r][c].is_zero() || !rows[r][c].is_constant()) continue;
        const Rational inv = Rational(1) / rows[r][c].constant_term();
        for (auto& e : rows[r]) e *= inv;
        for (std::size_t k = 0; k < rows.size(); ++k) {
          if (k == r || rows[k][c].is_zero()) continue;
          const MultiPoly factor = rows[k][c];
          for (std::size_t j = 0; j <= n; ++j)
            if (!rows[r][j].is_zero()) rows[k][j] -= factor * rows[r][j];
        }
        used[r] = true;
        pivot_row[c] = r;
        found = true;
      }
    }
    if (!found) break;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (used[r]) continue;
    for (const auto& e : rows[r])
      if (!e.is_zero()) return std::nullopt;
  }
  std::vector<MultiPoly> x;
  for (std::size_t c = 0; c < n; ++c) {
    if (!pivot_row[c]) return std::nullopt;
    x.push_back(rows[*pivot_row[c]][n]);
  }
  return x;
}

std::vector<MultiPoly> parse_vector(const std::vector<std::string>& entries) {
  std::vector<MultiPoly> out;
  for (const auto& e : entries) out.push_back(parse_poly(flag_chart(), e));
  return out;
}

RatVector eval_vector(const std::vector<MultiPoly>& v, const Point& p) {
  RatVector out;
  for (const auto& e : v) out.push_back(e.eval(p));
  return out;
}

PolyMatrix symbolic_A(const std::vector<MultiPoly>& f) {
  std::array<MultiPoly, 6> r{f[1], f[2], f[3], f[4], f[5], f[6]};
  return build_A_generic<MultiPoly>(f[0], r, MultiPoly(f[0].chart()));
}

RatMatrix numeric_A(const RatVector& f) {
  CovectorFiber c;
  c.s = f[0];
  for (std::size_t k = 0; k < 6; ++k) c.r[k] = f[k + 1];
  return build_A(c);
}

RatMatrix stack(const std::vector<RatMatrix>& blocks) {
  std::size_t rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  RatMatrix m = rat_matrix(rows, 8);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < 8; ++j) m(at + i, j) = b(i, j);
    at += b.rows();
  }
  return m;
}

/// The vector of span(basis) with prescribed values on `slots`.
RatVector normalized(const std::vector<RatVector>& basis, const std::vector<std::size_t>& slots,
                     const RatVector& values, const char* what) {
  RatMatrix a = rat_matrix(slots.size(), basis.size());
  for (std::size_t i = 0; i < slots.size(); ++i)
    for (std::size_t k = 0; k < basis.size(); ++k) a(i, k) = basis[k][slots[i]];
  if (rank(a) != basis.size()) throw std::runtime_error(std::string("lambda_to_v: normalization of ") + what + " is not unique");
  const auto c = solve(a, values);
  if (!c) throw std::runtime_error(std::string("lambda_to_v: normalization of ") + what + " is not attainable");
  RatVector v(8, Rational(0));
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t j = 0; j < 8; ++j) v[j] += (*c)[k] * basis[k][j];
  return v;
}

bool in_span(const std::vector<RatVector>& basis, const RatVector& v) {
  IncrementalSpan s(v.size());
  for (const auto& b : basis) s.add(b);
  return s.contains(v);
}

/// Printed solved forms: dependent slot = sum of coefficient * parameter slot.
struct SolvedForm {
  int space;
  std::size_t dependent;
  std::vector<std::pair<std::size_t, std::string>> terms;
  const char* label;
};

const std::vector<SolvedForm>& printed_solved_forms() {
  static const std::vector<SolvedForm> forms{
      {4, U1, {{U3, "z15"}, {U4, "z16"}, {V2, "-1/2 z11"}}, "V4.u1"},
      {4, U2, {{U3, "-z13"}, {U4, "-z14"}, {V1, "1/2 z11"}}, "V4.u2"},
      {4, V3, {{U4, "1/2 z11"}, {V2, "-z15"}, {V2, "z13"}}, "V4.v3"},
      {4, V4, {{U3, "-1/2 z11"}, {V1, "-z16"}, {V2, "z14"}}, "V4.v4"},
      {2, U1, {{U4, "-z15 z24 + z16 + 1/4 z11 z21"}, {V1, "1/2 z15 z21 - 1/2 z11 z25"}}, "V2.u1"},
      {2, U2, {{U4, "z13 z24 - z14"}, {V1, "-1/2 z13 z21 + 1/2 z11"}}, "V2.u2"},
      {2, U3, {{U4, "-z24"}, {V1, "1/2 z21"}}, "V2.u3"},
      {2, V2, {{U4, "-1/2 z21"}, {V1, "1/2 z21"}}, "V2.v2"},
      {2, V3, {{U4, "1/2 z11 - 1/2 z13 z21"}, {V1, "-z15 + z13 z25"}}, "V2.v3"},
      {2, V4, {{U4, "1/2 z11 z24 - 1/2 z14 z21"}, {V1, "-1/4 z11 z21 - z16 + z14 z25"}}, "V2.v4"}};
  return forms;
}

const char* kSlotNames[] = {"u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4"};

}  // namespace

const std::vector<std::string>& flag_variables() {
  static const std::vector<std::string> vars{"z11", "z13", "z14", "z15", "z16", "z21", "z24", "z25", "z31"};
  return vars;
}

ChartPtr flag_chart() {
  static const ChartPtr c = Chart::make("flag", flag_variables());
  return c;
}

Rational QuadraticSpace::pair(const RatVector& a, const RatVector& b) const {
  Rational acc = 0;
  for (std::size_t i = 0; i < dimension; ++i)
    for (std::size_t j = 0; j < dimension; ++j)
      if (gram(i, j) != 0) acc += a[i] * gram(i, j) * b[j];
  return acc;
}

QuadraticSpace q_space() { return {8, gram_Q()}; }
QuadraticSpace r_space() { return {7, gram_R()}; }

LambdaFlagCoords LambdaFlagCoords::from_point(const Point& p) {
  if (p.size() != 9) throw std::invalid_argument("flag coordinates need 9 entries");
  LambdaFlagCoords c;
  for (std::size_t k = 0; k < 9; ++k) c.z[k] = p[k];
  return c;
}

Point LambdaFlagCoords::point() const { return Point(z.begin(), z.end()); }

LambdaFlagFrame complete_null_flag(const LambdaFlagCoords& c) {
  LambdaFlagFrame out;
  const auto f = solve_frame<Rational>(c.z, Rational(0), Rational(1), out.dependent);
  for (std::size_t k = 0; k < 3; ++k) out.f[k] = f[k];
  return out;
}

std::array<std::vector<MultiPoly>, 3> null_flag_symbolic() {
  const ChartPtr c = flag_chart();
  std::array<MultiPoly, 9> z{MultiPoly(c), MultiPoly(c), MultiPoly(c), MultiPoly(c), MultiPoly(c),
                             MultiPoly(c), MultiPoly(c), MultiPoly(c), MultiPoly(c)};
  for (std::size_t k = 0; k < 9; ++k) z[k] = MultiPoly::variable(c, k);
  std::array<MultiPoly, 6> dep{MultiPoly(c), MultiPoly(c), MultiPoly(c), MultiPoly(c), MultiPoly(c), MultiPoly(c)};
  return solve_frame<MultiPoly>(z, MultiPoly(c), MultiPoly(c, Rational(1)), dep);
}

VFlagFrame lambda_to_v(const LambdaFlagFrame& frame) {
  const QuadraticSpace r = r_space();
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a; b < 3; ++b)
      if (r.pair(frame.f[a], frame.f[b]) != 0) throw std::invalid_argument("lambda_to_v: frame is not R-null");
  const RatMatrix a1 = numeric_A(frame.f[0]), a2 = numeric_A(frame.f[1]), a3 = numeric_A(frame.f[2]);
  VFlagFrame v;
  v.v4 = rank_kernel(a1).kernel;
  v.v2 = rank_kernel(stack({a1, a2})).kernel;
  v.v1 = rank_kernel(stack({a1, a2, a3})).kernel;
  if (v.v4.size() != 4 || v.v2.size() != 2 || v.v1.size() != 1)
    throw std::runtime_error("lambda_to_v: kernel dimensions " + std::to_string(v.v1.size()) + ", " +
                             std::to_string(v.v2.size()) + ", " + std::to_string(v.v4.size()) + " instead of 1, 2, 4");
  v.eta[0] = normalized(v.v1, {V1}, {1}, "eta1");
  v.eta[1] = normalized(v.v2, {U4, V1}, {1, 0}, "eta2");
  v.eta[2] = normalized(v.v4, {U3, U4, V1, V2}, {1, 0, 0, 0}, "eta3");
  v.eta[3] = normalized(v.v4, {U3, U4, V1, V2}, {0, 0, 0, 1}, "eta4");
  return v;
}

std::array<std::vector<MultiPoly>, 4> eta_symbolic() {
  const ChartPtr c = flag_chart();
  const auto f = null_flag_symbolic();
  const PolyMatrix A1 = symbolic_A(f[0]), A2 = symbolic_A(f[1]), A3 = symbolic_A(f[2]);
  auto system = [&](std::vector<const PolyMatrix*> blocks, const std::vector<std::size_t>& slots, const RatVector& vals) {
    std::vector<std::vector<MultiPoly>> rows;
    for (const PolyMatrix* b : blocks)
      for (std::size_t i = 0; i < 8; ++i) {
        std::vector<MultiPoly> row = b->row(i);
        row.push_back(MultiPoly(c));
        rows.push_back(std::move(row));
      }
    for (std::size_t k = 0; k < slots.size(); ++k) {
      std::vector<MultiPoly> row(9, MultiPoly(c));
      row[slots[k]] = MultiPoly(c, Rational(1));
      row[8] = MultiPoly(c, vals[k]);
      rows.push_back(std::move(row));
    }
    auto x = solve_constant_pivots(std::move(rows), 8);
    if (!x) throw std::runtime_error("eta_symbolic: elimination needs a non-constant pivot");
    return *x;
  };
  return {system({&A1, &A2, &A3}, {V1}, {1}), system({&A1, &A2}, {U4, V1}, {1, 0}),
          system({&A1}, {U3, U4, V1, V2}, {1, 0, 0, 0}), system({&A1}, {U3, U4, V1, V2}, {0, 0, 0, 1})};
}

std::array<std::vector<MultiPoly>, 4> eta_printed() {
  return {parse_vector({"-1/2 z11 z25 + 1/2 z16 z31 + 1/8 z11 z21 z31 - 1/2 z15 z24 z31 + 1/2 z15 z21",
                        "1/2 z11 - 1/2 z13 z21 - 1/2 z14 z31 + 1/2 z13 z24 z31", "1/2 z21 - 1/2 z24 z31",
                        "1/2 z31", "1", "z25 - 1/4 z21 z31", "-z15 + 1/4 z11 z31 + z13 z25 - 1/4 z13 z21 z31",
                        "-z16 - 1/4 z11 z21 + z14 z25 + 1/4 z11 z24 z31 - 1/4 z14 z21 z31"}),
          parse_vector({"z16 + 1/4 z11 z21 - z15 z24", "-z14 + z13 z24", "-z24", "1", "0", "-1/2 z21",
                        "1/2 z11 - 1/2 z13 z21", "1/2 z11 z24 - 1/2 z14 z21"}),
          parse_vector({"z15", "-z13", "1", "0", "0", "0", "0", "-1/2 z11"}),
          parse_vector({"-1/2 z11", "0", "0", "0", "0", "1", "z13", "z14"})};
}

Report verify_flag_nullity(const VFlagFrame& v) {
  Report rep;
  rep.suite = "nullflag.nullity";
  const QuadraticSpace q = q_space();
  std::size_t zero = 0;
  std::string bad;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a; b < 4; ++b) {
      const Rational x = q.pair(v.eta[a], v.eta[b]);
      if (x == 0) {
        ++zero;
      } else if (bad.empty()) {
        bad = "(eta" + std::to_string(a + 1) + ", eta" + std::to_string(b + 1) + ") = " + to_string(x);
      }
    }
  rep.check("nullflag.nullity.pairings", "all 10 pairings (eta_a, eta_b) vanish", zero == 10,
            std::to_string(zero) + "/10" + (bad.empty() ? "" : "; " + bad), "10/10", "null 4-space V4 in D");
  bool nested = in_span(v.v2, v.eta[0]) && in_span(v.v4, v.eta[0]) && in_span(v.v2, v.eta[1]) &&
                in_span(v.v4, v.eta[1]) && in_span(v.v4, v.eta[2]) && in_span(v.v4, v.eta[3]);
  for (const auto& b : v.v1) nested = nested && in_span(v.v2, b);
  for (const auto& b : v.v2) nested = nested && in_span(v.v4, b);
  rep.check("nullflag.nullity.nested", "V1 in V2 in V4 and eta frames lie in their spaces", nested,
            nested ? "nested" : "not nested", "nested", "null flag V1 in V2 in V4");
  IncrementalSpan s(8);
  for (const auto& e : v.eta) s.add(e);
  rep.check("nullflag.nullity.independent", "eta1..eta4 are independent", s.rank() == 4, std::to_string(s.rank()), "4",
            "null flag V1 in V2 in V4");
  return rep;
}

Report verify_null_flags(std::uint64_t seed, std::size_t samples) {
  Report rep;
  rep.suite = "nullflag";
  rep.seed = seed;
  const char* ref_frame = "null flag frame f1, f2, f3";
  const char* ref_eta = "closed forms of eta1..eta4";
  const QuadraticSpace r = r_space(), q = q_space();

  // base point and the two worked examples
  {
    const LambdaFlagFrame base = complete_null_flag({});
    bool ok = true;
    for (const auto& d : base.dependent) ok = ok && d == 0;
    rep.check("nullflag.base_point", "zero free coordinates give (eps2, eps3, eps4)",
              ok && base.f[0] == RatVector{0, 1, 0, 0, 0, 0, 0} && base.f[1] == RatVector{0, 0, 1, 0, 0, 0, 0} &&
                  base.f[2] == RatVector{0, 0, 0, 1, 0, 0, 0},
              vector_string(base.f[0]) + " " + vector_string(base.f[1]) + " " + vector_string(base.f[2]),
              "eps2, eps3, eps4", "base point of the null flag manifold");
    LambdaFlagCoords c31, c21;
    c31.z[8] = 2;
    c21.z[5] = 2;
    const Rational z35 = complete_null_flag(c31).dependent[3], z26 = complete_null_flag(c21).dependent[1];
    rep.check("nullflag.example.z35", "z31 = 2 gives z35 = 1", z35 == 1, to_string(z35), "1", ref_frame);
    rep.check("nullflag.example.z26", "z21 = 2 gives z26 = -1", z26 == -1, to_string(z26), "-1", ref_frame);
    const VFlagFrame v0 = lambda_to_v(complete_null_flag({}));
    rep.check("nullflag.example.eta1", "eta1 at the base point is the Y1 direction",
              v0.eta[0] == RatVector{0, 0, 0, 0, 1, 0, 0, 0}, vector_string(v0.eta[0]), "(0, 0, 0, 0, 1, 0, 0, 0)", ref_eta);
    rep.check("nullflag.example.eta3", "eta3 at the base point is the X3 direction",
              v0.eta[2] == RatVector{0, 0, 1, 0, 0, 0, 0, 0}, vector_string(v0.eta[2]), "(0, 0, 1, 0, 0, 0, 0, 0)", ref_eta);
    VFlagFrame bad = v0;
    bad.eta[3][U1] += 1;
    rep.check("nullflag.negative_control", "adding X1 to eta4 is detected", !verify_flag_nullity(bad).passed(),
              verify_flag_nullity(bad).passed() ? "not detected" : "detected", "detected", "null 4-space V4 in D");
  }

  // printed expansions of (fi|fj) against the form, on all fifteen z's
  {
    const ChartPtr c15 = Chart::make("flag15", {"z11", "z13", "z14", "z15", "z16", "z17", "z21", "z24", "z25", "z26",
                                                 "z27", "z31", "z35", "z36", "z37"});
    auto v = [&](const char* n) { return MultiPoly::variable(c15, n); };
    const MultiPoly o(c15), one(c15, Rational(1));
    const std::array<std::vector<MultiPoly>, 3> f{
        std::vector<MultiPoly>{v("z11"), one, v("z13"), v("z14"), v("z15"), v("z16"), v("z17")},
        std::vector<MultiPoly>{v("z21"), o, one, v("z24"), v("z25"), v("z26"), v("z27")},
        std::vector<MultiPoly>{v("z31"), o, o, one, v("z35"), v("z36"), v("z37")}};
    struct Printed {
      std::size_t a, b;
      const char* text;
    };
    for (const Printed& p : {Printed{0, 0, "z11 - 4 z17 + 4 z13 z16 - 4 z14 z15"},
                             Printed{0, 1, "z11 z21 - 2 z27 + 2 z13 z26 - 2 z14 z25 - 2 z15 z24 + 2 z16"},
                             Printed{0, 2, "z11 z31 - 2 z37 + 2 z13 z36 - 2 z14 z35 - 2 z15"},
                             Printed{1, 1, "z21^2 + 4 z26 - 4 z24 z25"},
                             Printed{1, 2, "z21 z31 + 2 z36 - 2 z24 z35 - 2 z25"}, Printed{2, 2, "z31^2 - 4 z35"}}) {
      const MultiPoly computed = r_form(f[p.a], f[p.b]);
      const std::string id = "nullflag.printed.f" + std::to_string(p.a + 1) + "f" + std::to_string(p.b + 1);
      const std::string desc = "printed (f" + std::to_string(p.a + 1) + "|f" + std::to_string(p.b + 1) + ")";
      if (computed == parse_poly(c15, p.text)) {
        rep.check(id, desc + " equals the form", true, poly_string(computed), p.text, ref_frame);
      } else {
        rep.discrepancy(id, desc + " differs from the bilinear form of R", poly_string(computed), p.text, ref_frame);
      }
    }
  }

  // random flags
  const auto points = random_rational_points(9, samples, seed);
  std::size_t r_null = 0, profile = 0, q_null = 0, kernel_null = 0, nullity = 0;
  std::size_t eta_mismatch = 0, eta_coeffs = 0;
  std::string bad_profile;
  const auto printed = eta_printed();
  std::vector<std::size_t> form_mismatch(printed_solved_forms().size(), 0);
  for (const Point& p : points) {
    const LambdaFlagFrame frame = complete_null_flag(LambdaFlagCoords::from_point(p));
    bool null = true;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a; b < 3; ++b) null = null && r.pair(frame.f[a], frame.f[b]) == 0;
    if (null) ++r_null;
    VFlagFrame v;
    try {
      v = lambda_to_v(frame);
      ++profile;
    } catch (const std::exception& e) {
      if (bad_profile.empty()) bad_profile = e.what();
      continue;
    }
    bool kn = true;
    for (const auto* basis : {&v.v1, &v.v2, &v.v4})
      for (const auto& w : *basis) kn = kn && q.pair(w, w) == 0;
    if (kn) ++kernel_null;
    if (verify_flag_nullity(v).passed()) ++nullity;
    bool qn = true;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) qn = qn && q.pair(v.eta[a], v.eta[b]) == 0;
    if (qn) ++q_null;
    for (std::size_t k = 0; k < 4; ++k) {
      const RatVector closed = eval_vector(printed[k], p);
      for (std::size_t j = 0; j < 8; ++j) {
        ++eta_coeffs;
        if (closed[j] != v.eta[k][j]) ++eta_mismatch;
      }
    }
    const auto& forms = printed_solved_forms();
    for (std::size_t fi = 0; fi < forms.size(); ++fi) {
      const auto& basis = forms[fi].space == 4 ? v.v4 : v.v2;
      for (const auto& w : basis) {
        Rational rhs = 0;
        for (const auto& [slot, coeff] : forms[fi].terms) rhs += parse_poly(flag_chart(), coeff).eval(p) * w[slot];
        if (rhs != w[forms[fi].dependent]) {
          ++form_mismatch[fi];
          break;
        }
      }
    }
  }
  const std::string n = std::to_string(samples);
  auto frac = [&](std::size_t k) { return std::to_string(k) + "/" + n; };
  rep.check("nullflag.random.r_null", "completed frames are R-null", r_null == samples, frac(r_null), n + "/" + n, ref_frame);
  rep.check("nullflag.random.profile", "kernel dimensions (1, 2, 4)", profile == samples,
            frac(profile) + (bad_profile.empty() ? "" : "; " + bad_profile), n + "/" + n, "dim V_k = k, k = 1, 2, 4");
  rep.check("nullflag.random.q_null", "eta frames are Q-null", q_null == samples, frac(q_null), n + "/" + n,
            "null 4-space V4 in D");
  rep.check("nullflag.random.kernel_null", "every kernel vector has Q = 0", kernel_null == samples, frac(kernel_null),
            n + "/" + n, "null 4-space V4 in D");
  rep.check("nullflag.random.nullity", "nullity, nesting and independence of the V-flag", nullity == samples,
            frac(nullity), n + "/" + n, "null flag V1 in V2 in V4");
  if (eta_mismatch == 0) {
    rep.check("nullflag.eta.closed_form", "closed-form eta1..eta4 agree with the kernel frames coefficientwise", true,
              "0 mismatches in " + std::to_string(eta_coeffs), "0 mismatches", ref_eta);
  } else {
    rep.discrepancy("nullflag.eta.closed_form", "closed-form eta1..eta4 disagree with the kernel frames",
                    std::to_string(eta_mismatch) + " mismatches in " + std::to_string(eta_coeffs), "0 mismatches", ref_eta);
  }
  const auto& forms = printed_solved_forms();
  for (std::size_t fi = 0; fi < forms.size(); ++fi) {
    const std::string id = std::string("nullflag.solved.") + forms[fi].label;
    const std::string desc = std::string("printed solved form for ") + kSlotNames[forms[fi].dependent] + " on V" +
                             std::to_string(forms[fi].space);
    if (form_mismatch[fi] == 0) {
      rep.check(id, desc + " holds on the kernel", true, "0/" + n + " samples violate", "0", "solutions of the constraint system");
    } else {
      rep.discrepancy(id, desc + " is violated by kernel vectors", std::to_string(form_mismatch[fi]) + "/" + n + " samples violate",
                      "0", "solutions of the constraint system");
    }
  }

  // symbolic derivation of eta against the printed closed forms
  {
    const auto derived = eta_symbolic();
    for (std::size_t k = 0; k < 4; ++k) {
      std::size_t diff = 0;
      std::string first;
      for (std::size_t j = 0; j < 8; ++j)
        if (derived[k][j] != printed[k][j]) {
          if (diff++ == 0)
            first = std::string(kSlotNames[j]) + ": " + poly_string(derived[k][j]) + " vs " + poly_string(printed[k][j]);
        }
      const std::string id = "nullflag.eta" + std::to_string(k + 1) + ".symbolic";
      const std::string desc = "eta" + std::to_string(k + 1) + " by elimination over Q[z]";
      if (diff == 0) {
        rep.check(id, desc + " equals the printed closed form", true, "8/8 coefficients", "8/8", ref_eta);
      } else {
        rep.discrepancy(id, desc + " differs from the printed closed form",
                        std::to_string(8 - diff) + "/8 coefficients; " + first, "8/8", ref_eta);
      }
    }
    // printed V4 and V2 bases lie in the kernels identically
    const auto f = null_flag_symbolic();
    const PolyMatrix A1 = symbolic_A(f[0]), A2 = symbolic_A(f[1]);
    auto annihilated = [](const PolyMatrix& a, const std::vector<MultiPoly>& w) {
      for (std::size_t i = 0; i < a.rows(); ++i) {
        MultiPoly acc(w[0].chart());
        for (std::size_t j = 0; j < 8; ++j) acc += a(i, j) * w[j];
        if (!acc.is_zero()) return false;
      }
      return true;
    };
    const std::vector<std::vector<MultiPoly>> v4_basis{
        parse_vector({"z15", "-z13", "1", "0", "0", "0", "0", "-1/2 z11"}),
        parse_vector({"z16", "-z14", "0", "1", "0", "0", "1/2 z11", "0"}),
        parse_vector({"0", "1/2 z11", "0", "0", "1", "0", "-z15", "-z16"}),
        parse_vector({"-1/2 z11", "0", "0", "0", "0", "1", "z13", "z14"})};
    const std::vector<std::vector<MultiPoly>> v2_basis{
        parse_vector({"-z15 z24 + z16 + 1/4 z11 z21", "z13 z24 - z14", "-z24", "1", "0", "-1/2 z21",
                      "1/2 z11 - 1/2 z13 z21", "1/2 z11 z24 - 1/2 z14 z21"}),
        parse_vector({"1/2 z15 z21 - 1/2 z11 z25", "-1/2 z13 z21 + 1/2 z11", "1/2 z21", "0", "1", "z25",
                      "-z15 + z13 z25", "-1/4 z11 z21 - z16 + z14 z25"})};
    std::size_t ok4 = 0, ok2 = 0;
    for (const auto& w : v4_basis) ok4 += annihilated(A1, w) ? 1 : 0;
    for (const auto& w : v2_basis) ok2 += (annihilated(A1, w) && annihilated(A2, w)) ? 1 : 0;
    rep.check("nullflag.printed.V4_basis", "printed V4 basis solves A(f1) w = 0 identically", ok4 == 4,
              std::to_string(ok4) + "/4", "4/4", "null 4-space V4");
    rep.check("nullflag.printed.V2_basis", "printed V2 generators solve A(f1) w = A(f2) w = 0 identically", ok2 == 2,
              std::to_string(ok2) + "/2", "2/2", "null 2-plane V2");
  }

  // dimension counts of the two echelon normal forms
  {
    // Lambda: 15 frame entries minus the rank of the six null equations.
    const ChartPtr c15 = Chart::make("flag15", {"z11", "z13", "z14", "z15", "z16", "z17", "z21", "z24", "z25", "z26",
                                                 "z27", "z31", "z35", "z36", "z37"});
    auto v = [&](const char* nm) { return MultiPoly::variable(c15, nm); };
    const MultiPoly o(c15), one(c15, Rational(1));
    const std::array<std::vector<MultiPoly>, 3> f{
        std::vector<MultiPoly>{v("z11"), one, v("z13"), v("z14"), v("z15"), v("z16"), v("z17")},
        std::vector<MultiPoly>{v("z21"), o, one, v("z24"), v("z25"), v("z26"), v("z27")},
        std::vector<MultiPoly>{v("z31"), o, o, one, v("z35"), v("z36"), v("z37")}};
    std::vector<MultiPoly> eqs;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a; b < 3; ++b) eqs.push_back(r_form(f[a], f[b]));
    const Point p9 = points.empty() ? Point(9, Rational(0)) : points.front();
    const LambdaFlagFrame fr = complete_null_flag(LambdaFlagCoords::from_point(p9));
    Point p15{p9[0], p9[1], p9[2], p9[3], p9[4], fr.dependent[0], p9[5], p9[6], p9[7], fr.dependent[1],
              fr.dependent[2], p9[8], fr.dependent[3], fr.dependent[4], fr.dependent[5]};
    RatMatrix jac = rat_matrix(eqs.size(), 15);
    for (std::size_t i = 0; i < eqs.size(); ++i)
      for (std::size_t j = 0; j < 15; ++j) jac(i, j) = eqs[i].diff(j).eval(p15);
    const std::size_t lambda_dim = 15 - rank(jac);

    // V: V4 as a graph over the (u3, u4, v1, v2) slots, 16 entries minus the
    // rank of the 10 isotropy equations, plus Gr(2,4) and P^1 for V2, V1.
    std::vector<std::string> names;
    const std::size_t dep_slots[] = {U1, U2, V3, V4}, par_slots[] = {U3, U4, V1, V2};
    for (std::size_t m : dep_slots)
      for (std::size_t k : par_slots) names.push_back(std::string("m_") + kSlotNames[m] + "_" + kSlotNames[k]);
    const ChartPtr cm = Chart::make("v4graph", names);
    std::vector<std::vector<MultiPoly>> basis;
    for (std::size_t kk = 0; kk < 4; ++kk) {
      std::vector<MultiPoly> b(8, MultiPoly(cm));
      b[par_slots[kk]] = MultiPoly(cm, Rational(1));
      for (std::size_t mm = 0; mm < 4; ++mm) b[dep_slots[mm]] = MultiPoly::variable(cm, mm * 4 + kk);
      basis.push_back(std::move(b));
    }
    std::vector<MultiPoly> iso;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a; b < 4; ++b) {
        MultiPoly acc(cm);
        for (std::size_t k = 0; k < 4; ++k) acc += basis[a][k] * basis[b][k + 4] + basis[a][k + 4] * basis[b][k];
        iso.push_back(acc);
      }
    const VFlagFrame vf = lambda_to_v(fr);
    Point mpt;
    for (std::size_t mm = 0; mm < 4; ++mm)
      for (std::size_t kk = 0; kk < 4; ++kk) {
        RatVector vals(4, Rational(0));
        vals[kk] = 1;
        mpt.push_back(normalized(vf.v4, {U3, U4, V1, V2}, vals, "graph")[dep_slots[mm]]);
      }
    bool on_variety = true;
    for (const auto& e : iso) on_variety = on_variety && e.eval(mpt) == 0;
    RatMatrix vj = rat_matrix(iso.size(), 16);
    for (std::size_t i = 0; i < iso.size(); ++i)
      for (std::size_t j = 0; j < 16; ++j) vj(i, j) = iso[i].diff(j).eval(mpt);
    const std::size_t v_dim = (16 - rank(vj)) + 4 + 1;
    rep.check("nullflag.dimension.lambda", "null flag manifold of R has dimension 9", lambda_dim == 9,
              std::to_string(lambda_dim), "9", "dimension of the Lambda-flag fiber");
    rep.check("nullflag.dimension.v", "null flags V1 in V2 in V4 of Q have dimension 11", v_dim == 11 && on_variety,
              std::to_string(v_dim) + (on_variety ? "" : " (sample off the isotropic variety)"), "11",
              "dimension of the V-flag fiber");
  }
  return rep;
}

}  // namespace f4prolong
