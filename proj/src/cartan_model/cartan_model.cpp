#include "f4prolong/cartan_model/cartan_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace f4prolong {

namespace {

using Entries = std::vector<std::pair<std::string, std::string>>;

VectorField field_from(const ChartPtr& chart, const Entries& entries) {
  VectorField v(chart);
  std::vector<MultiPoly> comps = v.components();
  for (const auto& [var, expr] : entries) comps[chart->index(var)] += parse_poly(chart, expr);
  return VectorField(chart, std::move(comps));
}

OneForm form_from(const ChartPtr& chart, const Entries& entries) {
  OneForm a(chart);
  std::vector<MultiPoly> coeffs = a.coefficients();
  for (const auto& [var, expr] : entries) coeffs[chart->index(var)] += parse_poly(chart, expr);
  return OneForm(chart, std::move(coeffs));
}

std::string pair_name(int i, int j) { return std::to_string(i) + std::to_string(j); }

}  // namespace

const std::vector<std::string>& cartan_variables() {
  static const std::vector<std::string> vars{"z",  "x1",  "x2",  "x3",  "x4",  "y1",  "y2", "y3",
                                             "y4", "x12", "x13", "x14", "x23", "x24", "x34"};
  return vars;
}

const std::array<std::pair<int, int>, 6>& index_pairs() {
  static const std::array<std::pair<int, int>, 6> pairs{{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
  return pairs;
}

std::pair<int, int> even_complement(int i, int j) {
  if (i < 1 || j > 4 || i >= j) throw std::invalid_argument("even_complement: need 1 <= i < j <= 4");
  std::array<int, 4> perm{i, j, 0, 0};
  int slot = 2;
  for (int a = 1; a <= 4; ++a)
    if (a != i && a != j) perm[static_cast<std::size_t>(slot++)] = a;
  int inversions = 0;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b)
      if (perm[a] > perm[b]) ++inversions;
  if (inversions % 2 == 0) return {perm[2], perm[3]};
  return {perm[3], perm[2]};
}

const VectorField& CartanModel::field(std::string_view name) const {
  auto it = std::find(frame_names.begin(), frame_names.end(), name);
  if (it == frame_names.end()) throw std::invalid_argument("unknown frame field: " + std::string(name));
  return frame[static_cast<std::size_t>(it - frame_names.begin())];
}

const OneForm& CartanModel::form(std::string_view name) const {
  auto it = std::find(coframe_names.begin(), coframe_names.end(), name);
  if (it == coframe_names.end()) throw std::invalid_argument("unknown coframe form: " + std::string(name));
  return coframe[static_cast<std::size_t>(it - coframe_names.begin())];
}

std::vector<VectorField> CartanModel::generators() const {
  std::vector<VectorField> out;
  for (const char* n : {"X1", "X2", "X3", "X4", "Y1", "Y2", "Y3", "Y4"}) out.push_back(field(n));
  return out;
}

Distribution CartanModel::distribution() const { return Distribution(chart, generators()); }

CartanModel build_model() {
  CartanModel m;
  m.chart = Chart::make("cartan", cartan_variables());
  const ChartPtr& c = m.chart;

  // generator display, transcribed term by term
  m.frame_names = {"Z", "X12", "X13", "X14", "X23", "X24", "X34", "X1", "X2", "X3", "X4", "Y1", "Y2", "Y3", "Y4"};
  m.frame.push_back(VectorField::coordinate(c, "z"));
  for (const auto& [i, j] : index_pairs()) m.frame.push_back(VectorField::coordinate(c, "x" + pair_name(i, j)));
  m.frame.push_back(field_from(c, {{"x1", "1"}, {"z", "y1"}, {"x12", "-x2"}, {"x13", "-x3"}, {"x14", "-x4"}}));
  m.frame.push_back(field_from(c, {{"x2", "1"}, {"z", "y2"}, {"x12", "x1"}, {"x23", "-x3"}, {"x24", "-x4"}}));
  m.frame.push_back(field_from(c, {{"x3", "1"}, {"z", "y3"}, {"x13", "x1"}, {"x23", "x2"}, {"x34", "-x4"}}));
  m.frame.push_back(field_from(c, {{"x4", "1"}, {"z", "y4"}, {"x14", "x1"}, {"x24", "x2"}, {"x34", "x3"}}));
  m.frame.push_back(field_from(c, {{"y1", "1"}, {"x23", "-y4"}, {"x24", "y3"}, {"x34", "-y2"}}));
  m.frame.push_back(field_from(c, {{"y2", "1"}, {"x13", "y4"}, {"x14", "-y3"}, {"x34", "y1"}}));
  m.frame.push_back(field_from(c, {{"y3", "1"}, {"x12", "-y4"}, {"x14", "y2"}, {"x24", "-y1"}}));
  m.frame.push_back(field_from(c, {{"y4", "1"}, {"x12", "y3"}, {"x13", "-y2"}, {"x23", "y1"}}));

  m.coframe_names = {"omega"};
  m.coframe.push_back(form_from(c, {{"z", "1"}, {"x1", "-y1"}, {"x2", "-y2"}, {"x3", "-y3"}, {"x4", "-y4"}}));
  for (const auto& [i, j] : index_pairs()) {
    const auto [h, k] = even_complement(i, j);
    const std::string xi = "x" + std::to_string(i), xj = "x" + std::to_string(j);
    const std::string yh = "y" + std::to_string(h), yk = "y" + std::to_string(k);
    // dx_ij - (x_i dx_j - x_j dx_i + y_h dy_k - y_k dy_h)
    m.coframe_names.push_back("omega" + pair_name(i, j));
    m.coframe.push_back(form_from(c, {{"x" + pair_name(i, j), "1"}, {xj, "-" + xi}, {xi, xj}, {yk, "-" + yh}, {yh, yk}}));
  }
  for (int i = 1; i <= 4; ++i) {
    m.coframe_names.push_back("dx" + std::to_string(i));
    m.coframe.push_back(OneForm::differential(c, "x" + std::to_string(i)));
  }
  for (int i = 1; i <= 4; ++i) {
    m.coframe_names.push_back("dy" + std::to_string(i));
    m.coframe.push_back(OneForm::differential(c, "y" + std::to_string(i)));
  }
  return m;
}

Report verify_bracket_table(const CartanModel& m) {
  Report r;
  r.suite = "cartan.brackets";
  const ChartPtr& c = m.chart;
  auto X = [&](int i) { return m.field("X" + std::to_string(i)); };
  auto Y = [&](int i) { return m.field("Y" + std::to_string(i)); };
  auto Xij = [&](int i, int j) { return m.field("X" + pair_name(i, j)); };
  const VectorField zero(c);

  auto expect = [&](const std::string& label, const VectorField& computed, const VectorField& expected,
                    const std::string& printed) {
    r.check("cartan.bracket." + label, "bracket " + label, computed == expected, computed.to_string(), printed,
            "bracket relations of the model");
  };

  for (const auto& [i, j] : index_pairs()) {
    expect("[X" + std::to_string(i) + ",X" + std::to_string(j) + "]", lie_bracket(X(i), X(j)),
           Rational(2) * Xij(i, j), "2X" + pair_name(i, j));
  }
  struct YY {
    int a, b, sign, i, j;
  };
  for (const YY& e : std::vector<YY>{{1, 2, 1, 3, 4}, {1, 3, -1, 2, 4}, {1, 4, 1, 2, 3},
                                     {2, 3, 1, 1, 4}, {2, 4, -1, 1, 3}, {3, 4, 1, 1, 2}}) {
    expect("[Y" + std::to_string(e.a) + ",Y" + std::to_string(e.b) + "]", lie_bracket(Y(e.a), Y(e.b)),
           Rational(2 * e.sign) * Xij(e.i, e.j), (e.sign < 0 ? "-2X" : "2X") + pair_name(e.i, e.j));
  }
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      const bool diag = i == j;
      expect("[Y" + std::to_string(i) + ",X" + std::to_string(j) + "]", lie_bracket(Y(i), X(j)),
             diag ? m.field("Z") : zero, diag ? "Z" : "0");
    }

  std::vector<std::string> vertical{"Z"};
  for (const auto& [i, j] : index_pairs()) vertical.push_back("X" + pair_name(i, j));
  for (const char* g : {"X1", "X2", "X3", "X4", "Y1", "Y2", "Y3", "Y4"})
    for (const auto& v : vertical) expect(std::string("[") + g + "," + v + "]", lie_bracket(m.field(g), m.field(v)), zero, "0");
  return r;
}

Report verify_duality(const CartanModel& m) {
  Report r;
  r.suite = "cartan.duality";
  std::size_t mismatches = 0;
  std::string first_bad;
  for (std::size_t a = 0; a < m.coframe.size(); ++a)
    for (std::size_t b = 0; b < m.frame.size(); ++b) {
      const MultiPoly p = pair(m.coframe[a], m.frame[b]);
      const MultiPoly want(m.chart, Rational(a == b ? 1 : 0));
      if (p != want) {
        if (mismatches++ == 0) first_bad = "<" + m.coframe_names[a] + "," + m.frame_names[b] + "> = " + p.to_string();
      }
    }
  const std::size_t total = m.coframe.size() * m.frame.size();
  r.check("cartan.duality", "pairings of coframe with frame equal the Kronecker delta", mismatches == 0,
          std::to_string(total - mismatches) + "/" + std::to_string(total) + (first_bad.empty() ? "" : "; " + first_bad),
          std::to_string(total) + "/" + std::to_string(total), "dual frame of the coframe");
  return r;
}

ContactResult contact_foliation(const CartanModel& m, int i, int j) {
  const auto [h, k] = even_complement(i, j);
  const std::vector<VectorField> complement{m.field("X" + std::to_string(i)), m.field("X" + std::to_string(j)),
                                            m.field("Y" + std::to_string(h)), m.field("Y" + std::to_string(k))};
  std::vector<VectorField> gens = complement;
  gens.push_back(m.field("X" + pair_name(i, j)));

  ContactResult out{false, MultiPoly(m.chart), false};
  const Point o = origin(m.chart);
  out.integrable = true;
  for (std::size_t a = 0; a < gens.size() && out.integrable; ++a)
    for (std::size_t b = a + 1; b < gens.size() && out.integrable; ++b)
      out.integrable = expand_constant(lie_bracket(gens[a], gens[b]), gens, o).has_value();

  const OneForm& alpha = m.form("omega" + pair_name(i, j));
  PolyMatrix w(4, 4, MultiPoly(m.chart));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) w(a, b) = two_form_eval(alpha, complement[a], complement[b]);
  out.leaf_determinant = determinant_expansion(w, MultiPoly(m.chart, Rational(1)));

  // alpha kills the complement, is nonzero on X_ij, and d(alpha) is
  // nondegenerate on its kernel inside the leaf
  bool kills = true;
  for (const auto& f : complement) kills = kills && pair(alpha, f).is_zero();
  const MultiPoly on_normal = pair(alpha, gens.back());
  out.contact = kills && on_normal.is_constant() && !on_normal.is_zero() && !out.leaf_determinant.is_zero();
  return out;
}

Report contact_foliation_check(const CartanModel& m, int i, int j) {
  Report r;
  r.suite = "cartan.contact";
  const std::string tag = pair_name(i, j);
  const ContactResult c = contact_foliation(m, i, j);
  r.check("cartan.contact.D" + tag + ".integrable", "D" + tag + " is involutive (brackets are constant combinations)",
          c.integrable, c.integrable ? "true" : "false", "true", "remark on six contact foliations");
  r.check("cartan.contact.D" + tag + ".contact", "leaf 2-form determinant on the complement frame is nonzero",
          c.contact, c.leaf_determinant.to_string(), "nonzero", "remark on six contact foliations");

  if (i == 1 && j == 2) {
    // the printed Pfaff system of the D12 foliation
    const ChartPtr& ch = m.chart;
    struct Printed {
      std::string text;
      OneForm form;
    };
    const std::vector<Printed> pfaff{
        {"dz - y1 dx1 - y2 dx2", form_from(ch, {{"z", "1"}, {"x1", "-y1"}, {"x2", "-y2"}})},
        {"dx3", OneForm::differential(ch, "x3")},
        {"dx4", OneForm::differential(ch, "x4")},
        {"dy1", OneForm::differential(ch, "y1")},
        {"dy2", OneForm::differential(ch, "y2")},
        {"dx13 + x3 dx1 + y2 dy4", form_from(ch, {{"x13", "1"}, {"x1", "x3"}, {"y4", "y2"}})},
        {"dx14 + x4 dx1 - y2 dy3", form_from(ch, {{"x14", "1"}, {"x1", "x4"}, {"y3", "-y2"}})},
        {"dx23 + x3 dx2 + y1 dy4", form_from(ch, {{"x23", "1"}, {"x2", "x3"}, {"y4", "y1"}})},
        {"dx24 + x4 dx2 + y1 dy3", form_from(ch, {{"x24", "1"}, {"x2", "x4"}, {"y3", "y1"}})},
        {"dx34", OneForm::differential(ch, "x34")},
    };
    const std::vector<VectorField> gens{m.field("X1"), m.field("X2"), m.field("Y3"), m.field("Y4"), m.field("X12")};
    const std::vector<std::string> names{"X1", "X2", "Y3", "Y4", "X12"};
    std::size_t bad = 0;
    for (const auto& p : pfaff) {
      std::string where;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const MultiPoly v = pair(p.form, gens[g]);
        if (!v.is_zero()) where += (where.empty() ? "" : ", ") + names[g] + " -> " + v.to_string();
      }
      if (where.empty()) continue;
      ++bad;
      r.discrepancy("cartan.contact.D12.pfaff." + std::to_string(bad), "printed leaf form " + p.text + " does not annihilate D12",
                    where, "0", "Pfaff system of the D12 foliation");
    }
    // each omega_ij restricted to the leaf (dx3 = dx4 = dy1 = dy2 = 0)
    std::size_t derived_bad = 0;
    for (const char* w : {"omega13", "omega14", "omega23", "omega24", "omega34"}) {
      const OneForm& a = m.form(w);
      std::vector<MultiPoly> coeffs = a.coefficients();
      for (const char* v : {"x3", "x4", "y1", "y2"}) coeffs[ch->index(v)] = MultiPoly(ch);
      const OneForm restricted(ch, std::move(coeffs));
      for (const auto& g : gens)
        if (!pair(restricted, g).is_zero()) ++derived_bad;
    }
    r.check("cartan.contact.D12.pfaff", "leaf-restricted omega_ij annihilate D12", derived_bad == 0,
            std::to_string(derived_bad) + " nonzero pairings", "0", "Pfaff system of the D12 foliation");
  }
  return r;
}

FrameCandidate cartan_frame(const CartanModel& m) {
  const auto g = m.generators();
  return FrameCandidate{{g[0], g[1], g[2], g[3], g[4], g[5], g[6], g[7]}};
}

Report type_f4_frame_check(const FrameCandidate& f, const Distribution& d, const Point& point,
                           std::span<const Point> samples) {
  Report r;
  r.suite = "cartan.typeF4";
  std::vector<Point> pts{point};
  pts.insert(pts.end(), samples.begin(), samples.end());
  const std::size_t dim = d.chart->dimension();

  std::vector<IncrementalSpan> spans;
  for (const auto& p : pts) {
    IncrementalSpan s(dim);
    for (const auto& g : d.generators) s.add(g.at(p));
    for (const auto& x : f.fields) {
      if (!s.contains(x.at(p))) throw std::invalid_argument("type_f4_frame_check: candidate field not in D");
    }
    IncrementalSpan own(dim);
    for (const auto& x : f.fields) {
      if (!own.add(x.at(p))) throw std::invalid_argument("type_f4_frame_check: degenerate frame");
    }
    spans.push_back(std::move(s));
  }

  auto X = [&](int i) -> const VectorField& { return f.fields[static_cast<std::size_t>(i - 1)]; };
  auto Y = [&](int i) -> const VectorField& { return f.fields[static_cast<std::size_t>(i + 3)]; };
  auto congruent = [&](const std::string& id, const std::string& text, const VectorField& diff) {
    std::size_t bad = 0;
    for (std::size_t k = 0; k < pts.size(); ++k)
      if (!spans[k].contains(diff.at(pts[k]))) ++bad;
    r.check("typeF4." + id, text + " modulo D", bad == 0,
            bad == 0 ? "holds" : "fails at " + std::to_string(bad) + "/" + std::to_string(pts.size()) + " points",
            "holds", "definition of type F4");
  };

  struct Rel {
    int a, b, sign, c, e;
  };
  for (const Rel& q : std::vector<Rel>{{1, 2, 1, 3, 4}, {1, 3, -1, 2, 4}, {1, 4, 1, 2, 3},
                                       {2, 3, 1, 1, 4}, {2, 4, -1, 1, 3}, {3, 4, 1, 1, 2}}) {
    const std::string lhs = "[X" + std::to_string(q.a) + ",X" + std::to_string(q.b) + "]";
    const std::string rhs = std::string(q.sign < 0 ? "-" : "") + "[Y" + std::to_string(q.c) + ",Y" + std::to_string(q.e) + "]";
    congruent(lhs, lhs + " = " + rhs,
              lie_bracket(X(q.a), X(q.b)) - Rational(q.sign) * lie_bracket(Y(q.c), Y(q.e)));
  }
  const VectorField base = lie_bracket(X(1), Y(1));
  for (int i = 2; i <= 4; ++i) {
    const std::string id = "[X" + std::to_string(i) + ",Y" + std::to_string(i) + "]";
    congruent(id, id + " = [X1,Y1]", lie_bracket(X(i), Y(i)) - base);
  }
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      if (i == j) continue;
      const std::string id = "[X" + std::to_string(i) + ",Y" + std::to_string(j) + "]";
      congruent(id, id + " = 0", lie_bracket(X(i), Y(j)));
    }

  std::vector<VectorField> induced(f.fields.begin(), f.fields.end());
  for (const auto& [i, j] : index_pairs()) induced.push_back(Rational(1, 2) * lie_bracket(X(i), X(j)));
  induced.push_back(lie_bracket(Y(1), X(1)));
  std::size_t degenerate = 0;
  for (const auto& p : pts)
    if (rank_at(induced, p) != dim) ++degenerate;
  r.check("typeF4.frame", "induced 15 fields form a frame", degenerate == 0,
          degenerate == 0 ? "rank 15 at all points" : "rank deficient at " + std::to_string(degenerate) + " points",
          "rank 15", "definition of type F4");
  return r;
}

}  // namespace f4prolong
