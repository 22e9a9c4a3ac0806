#ifndef F4PROLONG_GEOMETRY_GEOMETRY_HPP
#define F4PROLONG_GEOMETRY_GEOMETRY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "f4prolong/exactalg/linalg.hpp"
#include "f4prolong/exactalg/poly.hpp"

namespace f4prolong {

using Point = RatVector;

/// Polynomial vector field: one component per chart variable.
class VectorField {
 public:
  explicit VectorField(ChartPtr chart);
  VectorField(ChartPtr chart, std::vector<MultiPoly> components);

  /// d/d(name)
  static VectorField coordinate(const ChartPtr& chart, std::string_view name);

  const ChartPtr& chart() const { return chart_; }
  const std::vector<MultiPoly>& components() const { return comps_; }
  const MultiPoly& component(std::size_t i) const { return comps_.at(i); }
  const MultiPoly& component(std::string_view name) const { return comps_.at(chart_->index(name)); }
  std::size_t dimension() const { return comps_.size(); }
  bool is_zero() const;

  /// Directional derivative of a scalar.
  MultiPoly apply(const MultiPoly& f) const;
  RatVector at(std::span<const Rational> point) const;

  /// Same field on a larger chart (new coordinates get zero components).
  VectorField embed(const ChartPtr& target) const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const MultiPoly& f, const VectorField& x);
  friend VectorField operator*(const Rational& c, const VectorField& x);
  VectorField operator-() const;
  friend bool operator==(const VectorField& a, const VectorField& b);

  std::string to_string() const;

 private:
  ChartPtr chart_;
  std::vector<MultiPoly> comps_;
};

class OneForm {
 public:
  explicit OneForm(ChartPtr chart);
  OneForm(ChartPtr chart, std::vector<MultiPoly> coefficients);

  /// d(name)
  static OneForm differential(const ChartPtr& chart, std::string_view name);

  const ChartPtr& chart() const { return chart_; }
  const std::vector<MultiPoly>& coefficients() const { return coeffs_; }
  const MultiPoly& coefficient(std::size_t i) const { return coeffs_.at(i); }

  OneForm& operator+=(const OneForm& o);
  OneForm& operator-=(const OneForm& o);
  friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
  friend OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }
  friend OneForm operator*(const MultiPoly& f, const OneForm& a);
  friend OneForm operator*(const Rational& c, const OneForm& a);

 private:
  ChartPtr chart_;
  std::vector<MultiPoly> coeffs_;
};

/// [x,y]^k = sum_j (x^j d_j y^k - y^j d_j x^k)
VectorField lie_bracket(const VectorField& x, const VectorField& y);

MultiPoly pair(const OneForm& form, const VectorField& field);

/// d(alpha)(x, y) = x<alpha,y> - y<alpha,x> - <alpha,[x,y]>
MultiPoly two_form_eval(const OneForm& alpha, const VectorField& x, const VectorField& y);

struct Distribution {
  Distribution(ChartPtr chart, std::vector<VectorField> generators);
  ChartPtr chart;
  std::vector<VectorField> generators;
};

struct GrowthVector {
  std::vector<std::size_t> ranks;
  Point base_point;
};

struct DerivedFlag {
  /// strata[0] are the generators; strata[i] the fields added at depth i+1.
  std::vector<std::vector<VectorField>> strata;
  /// One growth vector per evaluation point, in input order.
  std::vector<GrowthVector> growth;
  bool stabilized = false;
};

/// Weak derived flag D^(i+1) = D^(i) + [D, D^(i)]. New brackets are formed only
/// against fields added at the previous depth. A candidate is kept when it
/// raises the rank at some evaluation point; the flag stops once a depth adds
/// nothing or max_depth is reached.
DerivedFlag derived_flag(const Distribution& d, std::span<const Point> points, std::size_t max_depth);

/// Growth vector at one point. Brackets that vanish at the point but not
/// nearby would be dropped by pruning at that point alone, so pruning also
/// uses `aux` points; only the rank profile at `point` is returned.
GrowthVector growth_vector(const Distribution& d, const Point& point, std::size_t max_depth,
                           std::span<const Point> aux = {});

/// Every fields' values at a point, one row per field.
RatMatrix evaluate_fields(std::span<const VectorField> fields, std::span<const Rational> point);
std::size_t rank_at(std::span<const VectorField> fields, std::span<const Rational> point);

bool span_membership(const VectorField& v, const Distribution& d, const Point& point);

/// Constant coefficients c with v = sum c_i basis_i as an exact identity.
/// Coefficients are solved at `point` (where the basis must be independent)
/// and then the symbolic residual is required to vanish. nullopt when no
/// constant combination exists.
std::optional<RatVector> expand_constant(const VectorField& v, std::span<const VectorField> basis,
                                         const Point& point);

/// Involutivity: every pairwise bracket of generators lies in their span at
/// `point` and at each sample. Throws if the generators are dependent at a
/// checked point.
bool frobenius_check(const Distribution& d, const Point& point, std::span<const Point> samples = {});

/// Seeded points with integer coordinates in [lo, hi].
std::vector<Point> random_points(std::size_t dim, std::size_t count, std::uint64_t seed, int lo = -2,
                                 int hi = 2);
/// Seeded points with coordinates n/d, |n| <= 5, 1 <= d <= 3.
std::vector<Point> random_rational_points(std::size_t dim, std::size_t count, std::uint64_t seed);

Point origin(const ChartPtr& chart);

}  // namespace f4prolong

#endif  // F4PROLONG_GEOMETRY_GEOMETRY_HPP
