#ifndef F4PROLONG_EXACTALG_JSON_IO_HPP
#define F4PROLONG_EXACTALG_JSON_IO_HPP

#include <json.hpp>

#include "f4prolong/exactalg/linalg.hpp"
#include "f4prolong/exactalg/poly.hpp"

namespace f4prolong {

/// {"chart": [names], "terms": [{"exps": [...], "num": "..", "den": ".."}]}
/// with terms in descending graded-lex order.
nlohmann::json poly_to_json(const MultiPoly& p);
/// Only the "terms" array, for use inside containers that carry the chart.
nlohmann::json poly_terms_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

nlohmann::json rational_to_json(const Rational& q);
nlohmann::json vector_to_json(const RatVector& v);

}  // namespace f4prolong

#endif  // F4PROLONG_EXACTALG_JSON_IO_HPP
