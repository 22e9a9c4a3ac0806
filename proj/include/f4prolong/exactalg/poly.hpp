#ifndef F4PROLONG_EXACTALG_POLY_HPP
#define F4PROLONG_EXACTALG_POLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "f4prolong/exactalg/rational.hpp"

namespace f4prolong {

class Chart;
using ChartPtr = std::shared_ptr<const Chart>;

/// An ordered list of distinct variable names. Every polynomial and field
/// lives on exactly one chart.
class Chart {
 public:
  static ChartPtr make(std::string id, std::vector<std::string> variables);

  const std::string& id() const { return id_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t dimension() const { return variables_.size(); }
  const std::string& variable(std::size_t i) const { return variables_.at(i); }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws std::invalid_argument for an unknown name.
  std::size_t index(std::string_view name) const;

 private:
  Chart(std::string id, std::vector<std::string> variables);
  std::string id_;
  std::vector<std::string> variables_;
};

/// True when both pointers name the same variable list.
bool same_chart(const ChartPtr& a, const ChartPtr& b);
void require_same_chart(const ChartPtr& a, const ChartPtr& b, const char* what);

using Exponents = std::vector<std::uint16_t>;

/// Graded-lexicographic order: total degree first, then lexicographic with
/// the first chart variable most significant.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly;

/// Floating-point snapshot of a polynomial for fast repeated evaluation.
class DoublePoly {
 public:
  DoublePoly() = default;
  explicit DoublePoly(const MultiPoly& p);
  double operator()(std::span<const double> point) const;

 private:
  struct Term {
    double coeff;
    std::vector<std::pair<std::uint32_t, std::uint16_t>> powers;
  };
  std::vector<Term> terms_;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored, so equality is term-map equality.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  explicit MultiPoly(ChartPtr chart);
  MultiPoly(ChartPtr chart, const Rational& constant);

  static MultiPoly variable(const ChartPtr& chart, std::string_view name);
  static MultiPoly variable(const ChartPtr& chart, std::size_t index);
  static MultiPoly monomial(const ChartPtr& chart, Exponents exps, const Rational& coeff);

  const ChartPtr& chart() const { return chart_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Rational constant_term() const;
  int total_degree() const;
  /// Degree of each term restricted to the listed variables; nullopt for zero.
  std::optional<std::pair<int, int>> degree_range_in(std::span<const std::size_t> vars) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(unsigned n) const;

  MultiPoly diff(std::size_t var) const;
  MultiPoly diff(std::string_view var) const;

  Rational eval(std::span<const Rational> point) const;
  /// Every chart variable must be assigned; throws otherwise.
  Rational eval(const std::map<std::string, Rational>& point) const;
  double eval_double(std::span<const double> point) const;

  /// Re-expresses the polynomial on a chart that contains all of this
  /// chart's variable names (matched by name).
  MultiPoly embed(const ChartPtr& target) const;
  /// Substitutes polynomials (on `target`) for variables; unlisted variables
  /// must also exist on `target` and are mapped by name.
  MultiPoly substitute(const std::map<std::size_t, MultiPoly>& values, const ChartPtr& target) const;

  /// Terms in descending graded-lex order, e.g. "x^2 - 1/4 z21^2".
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  ChartPtr chart_;
  TermMap terms_;
};

/// Parses expressions such as "z24 z25 - 1/4 z21^2" or "-1/2*z11*z25 + 3".
/// Factors are separated by whitespace or '*'; coefficients are integers or
/// n/d fractions. Throws std::invalid_argument on syntax errors or unknown
/// variable names.
MultiPoly parse_poly(const ChartPtr& chart, std::string_view text);

}  // namespace f4prolong

#endif  // F4PROLONG_EXACTALG_POLY_HPP
