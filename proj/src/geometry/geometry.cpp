#include "f4prolong/geometry/geometry.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace f4prolong {

namespace {

void require_components(const ChartPtr& chart, std::size_t n, const char* what) {
  if (!chart) throw std::invalid_argument(std::string(what) + ": null chart");
  if (n != chart->dimension()) throw std::invalid_argument(std::string(what) + ": component count mismatch");
}

std::vector<MultiPoly> zeros(const ChartPtr& chart) {
  return std::vector<MultiPoly>(chart->dimension(), MultiPoly(chart));
}

}  // namespace

VectorField::VectorField(ChartPtr chart) : chart_(std::move(chart)), comps_(zeros(chart_)) {}

VectorField::VectorField(ChartPtr chart, std::vector<MultiPoly> components)
    : chart_(std::move(chart)), comps_(std::move(components)) {
  require_components(chart_, comps_.size(), "VectorField");
  for (const auto& c : comps_) require_same_chart(chart_, c.chart(), "VectorField");
}

VectorField VectorField::coordinate(const ChartPtr& chart, std::string_view name) {
  VectorField v(chart);
  v.comps_[chart->index(name)] = MultiPoly(chart, Rational(1));
  return v;
}

bool VectorField::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

MultiPoly VectorField::apply(const MultiPoly& f) const {
  require_same_chart(chart_, f.chart(), "VectorField::apply");
  MultiPoly out(chart_);
  for (std::size_t j = 0; j < comps_.size(); ++j) {
    if (comps_[j].is_zero()) continue;
    MultiPoly df = f.diff(j);
    if (!df.is_zero()) out += comps_[j] * df;
  }
  return out;
}

RatVector VectorField::at(std::span<const Rational> point) const {
  RatVector v;
  v.reserve(comps_.size());
  for (const auto& c : comps_) v.push_back(c.eval(point));
  return v;
}

VectorField VectorField::embed(const ChartPtr& target) const {
  VectorField out(target);
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    out.comps_[target->index(chart_->variable(i))] = comps_[i].embed(target);
  }
  return out;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  require_same_chart(chart_, o.chart_, "VectorField +");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  require_same_chart(chart_, o.chart_, "VectorField -");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

VectorField operator*(const MultiPoly& f, const VectorField& x) {
  require_same_chart(f.chart(), x.chart_, "VectorField scale");
  VectorField out = x;
  for (auto& c : out.comps_) c = f * c;
  return out;
}

VectorField operator*(const Rational& c, const VectorField& x) {
  VectorField out = x;
  for (auto& p : out.comps_) p *= c;
  return out;
}

VectorField VectorField::operator-() const { return Rational(-1) * *this; }

bool operator==(const VectorField& a, const VectorField& b) {
  return same_chart(a.chart_, b.chart_) && a.comps_ == b.comps_;
}

std::string VectorField::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << comps_[i].to_string() << ") d/d" << chart_->variable(i);
  }
  if (first) os << "0";
  return os.str();
}

OneForm::OneForm(ChartPtr chart) : chart_(std::move(chart)), coeffs_(zeros(chart_)) {}

OneForm::OneForm(ChartPtr chart, std::vector<MultiPoly> coefficients)
    : chart_(std::move(chart)), coeffs_(std::move(coefficients)) {
  require_components(chart_, coeffs_.size(), "OneForm");
  for (const auto& c : coeffs_) require_same_chart(chart_, c.chart(), "OneForm");
}

OneForm OneForm::differential(const ChartPtr& chart, std::string_view name) {
  OneForm a(chart);
  a.coeffs_[chart->index(name)] = MultiPoly(chart, Rational(1));
  return a;
}

OneForm& OneForm::operator+=(const OneForm& o) {
  require_same_chart(chart_, o.chart_, "OneForm +");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

OneForm& OneForm::operator-=(const OneForm& o) {
  require_same_chart(chart_, o.chart_, "OneForm -");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

OneForm operator*(const MultiPoly& f, const OneForm& a) {
  require_same_chart(f.chart(), a.chart_, "OneForm scale");
  OneForm out = a;
  for (auto& c : out.coeffs_) c = f * c;
  return out;
}

OneForm operator*(const Rational& c, const OneForm& a) {
  OneForm out = a;
  for (auto& p : out.coeffs_) p *= c;
  return out;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  require_same_chart(x.chart(), y.chart(), "lie_bracket");
  std::vector<MultiPoly> out;
  out.reserve(x.dimension());
  for (std::size_t k = 0; k < x.dimension(); ++k) {
    out.push_back(x.apply(y.component(k)) - y.apply(x.component(k)));
  }
  return VectorField(x.chart(), std::move(out));
}

MultiPoly pair(const OneForm& form, const VectorField& field) {
  require_same_chart(form.chart(), field.chart(), "pair");
  MultiPoly out(form.chart());
  for (std::size_t i = 0; i < field.dimension(); ++i) {
    if (form.coefficient(i).is_zero() || field.component(i).is_zero()) continue;
    out += form.coefficient(i) * field.component(i);
  }
  return out;
}

MultiPoly two_form_eval(const OneForm& alpha, const VectorField& x, const VectorField& y) {
  return x.apply(pair(alpha, y)) - y.apply(pair(alpha, x)) - pair(alpha, lie_bracket(x, y));
}

Distribution::Distribution(ChartPtr c, std::vector<VectorField> gens)
    : chart(std::move(c)), generators(std::move(gens)) {
  if (generators.empty()) throw std::invalid_argument("Distribution: no generators");
  for (const auto& g : generators) require_same_chart(chart, g.chart(), "Distribution");
}

RatMatrix evaluate_fields(std::span<const VectorField> fields, std::span<const Rational> point) {
  if (fields.empty()) return RatMatrix();
  RatMatrix m = rat_matrix(fields.size(), fields.front().dimension());
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const RatVector v = fields[i].at(point);
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[j];
  }
  return m;
}

std::size_t rank_at(std::span<const VectorField> fields, std::span<const Rational> point) {
  if (fields.empty()) return 0;
  return rank(evaluate_fields(fields, point));
}

DerivedFlag derived_flag(const Distribution& d, std::span<const Point> points, std::size_t max_depth) {
  if (points.empty()) throw std::invalid_argument("derived_flag: no evaluation points");
  const std::size_t dim = d.chart->dimension();
  for (const auto& p : points) {
    if (p.size() != dim) throw std::invalid_argument("derived_flag: point has wrong dimension");
  }

  DerivedFlag flag;
  std::vector<IncrementalSpan> spans(points.size(), IncrementalSpan(dim));
  flag.growth.resize(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) flag.growth[k].base_point = points[k];

  auto record = [&] {
    for (std::size_t k = 0; k < points.size(); ++k) flag.growth[k].ranks.push_back(spans[k].rank());
  };

  for (const auto& g : d.generators)
    for (std::size_t k = 0; k < points.size(); ++k) spans[k].add(g.at(points[k]));
  flag.strata.push_back(d.generators);
  record();

  while (flag.strata.size() < max_depth) {
    std::vector<VectorField> added;
    for (const auto& g : d.generators) {
      for (const auto& f : flag.strata.back()) {
        VectorField b = lie_bracket(g, f);
        if (b.is_zero()) continue;
        bool grew = false;
        for (std::size_t k = 0; k < points.size(); ++k) grew = spans[k].add(b.at(points[k])) || grew;
        if (grew) added.push_back(std::move(b));
      }
    }
    if (added.empty()) {
      flag.stabilized = true;
      break;
    }
    flag.strata.push_back(std::move(added));
    record();
  }
  if (!flag.stabilized) {
    // stabilized anyway if every point already has full rank
    bool full = true;
    for (const auto& s : spans) full = full && s.rank() == dim;
    flag.stabilized = full;
  }
  // a depth that only helped other points leaves a repeated value at the end
  for (auto& g : flag.growth) {
    while (g.ranks.size() > 1 && g.ranks[g.ranks.size() - 1] == g.ranks[g.ranks.size() - 2]) g.ranks.pop_back();
  }
  return flag;
}

GrowthVector growth_vector(const Distribution& d, const Point& point, std::size_t max_depth,
                           std::span<const Point> aux) {
  std::vector<Point> pts{point};
  pts.insert(pts.end(), aux.begin(), aux.end());
  return derived_flag(d, pts, max_depth).growth.front();
}

bool span_membership(const VectorField& v, const Distribution& d, const Point& point) {
  require_same_chart(v.chart(), d.chart, "span_membership");
  IncrementalSpan s(d.chart->dimension());
  for (const auto& g : d.generators) s.add(g.at(point));
  return s.contains(v.at(point));
}

std::optional<RatVector> expand_constant(const VectorField& v, std::span<const VectorField> basis,
                                         const Point& point) {
  if (basis.empty()) {
    if (v.is_zero()) return RatVector{};
    return std::nullopt;
  }
  const RatMatrix b = evaluate_fields(basis, point).transpose();
  if (rank(b) != basis.size()) throw std::invalid_argument("expand_constant: basis dependent at point");
  auto c = solve(b, v.at(point));
  if (!c) return std::nullopt;
  VectorField residual = v;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if ((*c)[i] != 0) residual -= (*c)[i] * basis[i];
  }
  if (!residual.is_zero()) return std::nullopt;
  return c;
}

bool frobenius_check(const Distribution& d, const Point& point, std::span<const Point> samples) {
  std::vector<Point> pts{point};
  pts.insert(pts.end(), samples.begin(), samples.end());
  std::vector<VectorField> brackets;
  for (std::size_t i = 0; i < d.generators.size(); ++i)
    for (std::size_t j = i + 1; j < d.generators.size(); ++j)
      brackets.push_back(lie_bracket(d.generators[i], d.generators[j]));
  for (const auto& p : pts) {
    IncrementalSpan s(d.chart->dimension());
    for (const auto& g : d.generators) {
      if (!s.add(g.at(p))) throw std::invalid_argument("frobenius_check: generators dependent at point");
    }
    for (const auto& b : brackets)
      if (!s.contains(b.at(p))) return false;
  }
  return true;
}

std::vector<Point> random_points(std::size_t dim, std::size_t count, std::uint64_t seed, int lo, int hi) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<Point> out(count, Point(dim));
  for (auto& p : out)
    for (auto& c : p) c = dist(rng);
  return out;
}

std::vector<Point> random_rational_points(std::size_t dim, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Point> out(count, Point(dim));
  for (auto& p : out)
    for (auto& c : p) {
      c = Rational(num(rng), den(rng));
      c.canonicalize();
    }
  return out;
}

Point origin(const ChartPtr& chart) { return Point(chart->dimension(), Rational(0)); }

}  // namespace f4prolong
