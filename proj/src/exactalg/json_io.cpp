#include "f4prolong/exactalg/json_io.hpp"

#include <stdexcept>

namespace f4prolong {

using nlohmann::json;

json poly_terms_json(const MultiPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({{"exps", it->first},
                     {"num", it->second.get_num().get_str()},
                     {"den", it->second.get_den().get_str()}});
  }
  return terms;
}

json poly_to_json(const MultiPoly& p) {
  return {{"chart", p.chart()->variables()}, {"terms", poly_terms_json(p)}};
}

MultiPoly poly_from_json(const json& j) {
  auto names = j.at("chart").get<std::vector<std::string>>();
  ChartPtr chart = Chart::make("json", std::move(names));
  MultiPoly p(chart);
  for (const auto& t : j.at("terms")) {
    auto exps = t.at("exps").get<Exponents>();
    Rational c = parse_rational(t.at("num").get<std::string>() + "/" + t.at("den").get<std::string>());
    p += MultiPoly::monomial(chart, std::move(exps), c);
  }
  return p;
}

json rational_to_json(const Rational& q) { return to_string(q); }

json vector_to_json(const RatVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

}  // namespace f4prolong
