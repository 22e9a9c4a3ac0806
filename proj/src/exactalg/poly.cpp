#include "f4prolong/exactalg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace f4prolong {

// ---------------------------------------------------------------- Chart

Chart::Chart(std::string id, std::vector<std::string> variables)
    : id_(std::move(id)), variables_(std::move(variables)) {}

ChartPtr Chart::make(std::string id, std::vector<std::string> variables) {
  std::unordered_set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name: " + v);
  }
  return ChartPtr(new Chart(std::move(id), std::move(variables)));
}

std::optional<std::size_t> Chart::find(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Chart::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("variable '" + std::string(name) + "' not on chart " + id_);
}

bool same_chart(const ChartPtr& a, const ChartPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->variables() == b->variables();
}

void require_same_chart(const ChartPtr& a, const ChartPtr& b, const char* what) {
  if (!same_chart(a, b)) {
    throw std::invalid_argument(std::string(what) + ": chart mismatch (" + (a ? a->id() : "null") +
                                " vs " + (b ? b->id() : "null") + ")");
  }
}

// ---------------------------------------------------------------- ordering

namespace {

int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const int da = degree_of(a);
  const int db = degree_of(b);
  if (da != db) return da < db;
  // Larger exponent on an earlier variable ranks higher.
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(ChartPtr chart) : chart_(std::move(chart)) {
  if (!chart_) throw std::invalid_argument("MultiPoly requires a chart");
}

MultiPoly::MultiPoly(ChartPtr chart, const Rational& constant) : MultiPoly(std::move(chart)) {
  if (constant != 0) terms_.emplace(Exponents(chart_->dimension(), 0), constant);
}

MultiPoly MultiPoly::variable(const ChartPtr& chart, std::string_view name) {
  return variable(chart, chart->index(name));
}

MultiPoly MultiPoly::variable(const ChartPtr& chart, std::size_t index) {
  if (index >= chart->dimension()) throw std::out_of_range("variable index out of range");
  Exponents e(chart->dimension(), 0);
  e[index] = 1;
  return monomial(chart, std::move(e), Rational(1));
}

MultiPoly MultiPoly::monomial(const ChartPtr& chart, Exponents exps, const Rational& coeff) {
  if (exps.size() != chart->dimension()) {
    throw std::invalid_argument("exponent vector length does not match chart dimension");
  }
  MultiPoly p(chart);
  if (coeff != 0) p.terms_.emplace(std::move(exps), coeff);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && degree_of(terms_.begin()->first) == 0;
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents(chart_->dimension(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return degree_of(terms_.rbegin()->first);
}

std::optional<std::pair<int, int>> MultiPoly::degree_range_in(std::span<const std::size_t> vars) const {
  if (terms_.empty()) return std::nullopt;
  int lo = INT32_MAX;
  int hi = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto v : vars) d += e.at(v);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return std::make_pair(lo, hi);
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_chart(chart_, o.chart_, "poly add");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_chart(chart_, o.chart_, "poly sub");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_chart(a.chart_, b.chart_, "poly mul");
  MultiPoly out(a.chart_);
  const std::size_t n = a.chart_->dimension();
  Exponents e(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return same_chart(a.chart_, b.chart_) && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result(chart_, Rational(1));
  for (unsigned i = 0; i < n; ++i) result = result * *this;
  return result;
}

MultiPoly MultiPoly::diff(std::size_t var) const {
  if (var >= chart_->dimension()) throw std::invalid_argument("diff: variable index out of range");
  MultiPoly out(chart_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.terms_.emplace(std::move(d), c * e[var]);
  }
  return out;
}

MultiPoly MultiPoly::diff(std::string_view var) const { return diff(chart_->index(var)); }

Rational MultiPoly::eval(std::span<const Rational> point) const {
  if (point.size() != chart_->dimension()) {
    throw std::invalid_argument("eval: point dimension does not match chart");
  }
  Rational sum(0);
  Rational mono;
  for (const auto& [e, c] : terms_) {
    mono = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) mono *= point[i];
    }
    sum += mono;
  }
  return sum;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> values;
  values.reserve(chart_->dimension());
  for (const auto& name : chart_->variables()) {
    auto it = point.find(name);
    if (it == point.end()) throw std::invalid_argument("eval: no value assigned to '" + name + "'");
    values.push_back(it->second);
  }
  return eval(values);
}

double MultiPoly::eval_double(std::span<const double> point) const { return DoublePoly(*this)(point); }

MultiPoly MultiPoly::embed(const ChartPtr& target) const {
  if (same_chart(chart_, target)) {
    MultiPoly out(target);
    out.terms_ = terms_;
    return out;
  }
  std::vector<std::size_t> map(chart_->dimension());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = target->index(chart_->variable(i));
  MultiPoly out(target);
  Exponents e(target->dimension());
  for (const auto& [src, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) e[map[i]] = src[i];
    out.terms_.emplace(e, c);
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::map<std::size_t, MultiPoly>& values,
                                const ChartPtr& target) const {
  std::vector<MultiPoly> images;
  images.reserve(chart_->dimension());
  for (std::size_t i = 0; i < chart_->dimension(); ++i) {
    auto it = values.find(i);
    if (it != values.end()) {
      require_same_chart(it->second.chart(), target, "substitute");
      images.push_back(it->second);
    } else {
      images.push_back(MultiPoly::variable(target, chart_->variable(i)));
    }
  }
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term = term * images[i].pow(e[i]);
    }
    out += term;
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool constant = degree_of(e) == 0;
    bool wrote = false;
    if (constant || mag != 1) {
      os << f4prolong::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << " ";
      os << chart_->variable(i);
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- DoublePoly

DoublePoly::DoublePoly(const MultiPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    Term t{c.get_d(), {}};
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) t.powers.emplace_back(static_cast<std::uint32_t>(i), e[i]);
    }
    terms_.push_back(std::move(t));
  }
}

double DoublePoly::operator()(std::span<const double> point) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    double m = t.coeff;
    for (const auto& [i, k] : t.powers) {
      for (unsigned j = 0; j < k; ++j) m *= point[i];
    }
    sum += m;
  }
  return sum;
}

// ---------------------------------------------------------------- parser

namespace {

class PolyParser {
 public:
  PolyParser(const ChartPtr& chart, std::string_view text) : chart_(chart), s_(text) {}

  MultiPoly parse() {
    MultiPoly result(chart_);
    skip_ws();
    if (pos_ == s_.size()) throw error("empty expression");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw error("expected '+' or '-'");
      }
      first = false;
      MultiPoly term = parse_term();
      if (sign < 0) term = -term;
      result += term;
      skip_ws();
    }
    return result;
  }

 private:
  std::invalid_argument error(const std::string& what) const {
    return std::invalid_argument("parse_poly: " + what + " at offset " + std::to_string(pos_) + " in '" +
                                 std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view read_while(auto pred) {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && pred(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  MultiPoly parse_term() {
    Rational coeff(1);
    Exponents e(chart_->dimension(), 0);
    int factors = 0;
    for (;;) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*' && factors > 0) {
        ++pos_;
        skip_ws();
      }
      if (pos_ >= s_.size()) break;
      const unsigned char ch = static_cast<unsigned char>(s_[pos_]);
      if (std::isdigit(ch)) {
        std::string lit(read_while([](unsigned char c) { return std::isdigit(c) != 0; }));
        if (pos_ < s_.size() && s_[pos_] == '/') {
          ++pos_;
          auto den = read_while([](unsigned char c) { return std::isdigit(c) != 0; });
          if (den.empty()) throw error("missing denominator");
          lit += "/" + std::string(den);
        }
        coeff *= parse_rational(lit);
      } else if (std::isalpha(ch) || ch == '_') {
        std::string name(read_while([](unsigned char c) { return std::isalnum(c) || c == '_'; }));
        auto idx = chart_->find(name);
        if (!idx) throw error("unknown variable '" + name + "'");
        unsigned power = 1;
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          auto digits = read_while([](unsigned char c) { return std::isdigit(c) != 0; });
          if (digits.empty()) throw error("missing exponent");
          power = static_cast<unsigned>(std::stoul(std::string(digits)));
        }
        e[*idx] = static_cast<std::uint16_t>(e[*idx] + power);
      } else {
        break;
      }
      ++factors;
    }
    if (factors == 0) throw error("expected a term");
    return MultiPoly::monomial(chart_, std::move(e), coeff);
  }

  ChartPtr chart_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const ChartPtr& chart, std::string_view text) { return PolyParser(chart, text).parse(); }

}  // namespace f4prolong
