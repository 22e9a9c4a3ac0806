#include <doctest.h>

#include "f4prolong/prolong/prolong.hpp"

using namespace f4prolong;

namespace {

ZetaSystem& zetas() {
  static ZetaSystem z = [] {
    ZetaSystem s = build_zeta_generators();
    materialize_zetas(s);
    return s;
  }();
  return z;
}

const BracketTable& table() {
  static const BracketTable t = compute_bracket_table(zetas());
  return t;
}

RatVector unit(std::size_t k, Rational c = 1) {
  RatVector v(24, Rational(0));
  v[k - 1] = c;
  return v;
}

}  // namespace

TEST_CASE("generators annihilate the Pfaff forms") {
  const ZetaSystem& z = zetas();
  CHECK(z.chart->dimension() == 24);
  CHECK(z.materialized());
  for (const OneForm& f : pfaff_forms(z.chart))
    for (std::size_t k = 1; k <= 4; ++k) CHECK(pair(f, z(k)).is_zero());
  CHECK(verify_pfaff_conditions(z).count(Status::fail) == 0);
}

TEST_CASE("every table entry has constant coefficients") {
  REQUIRE(table().entries.size() == 92);
  for (const auto& e : table().entries) CHECK(e.coefficients.has_value());
}

TEST_CASE("defining brackets reproduce the zetas") {
  for (const auto& d : zeta_definitions()) {
    if (d.i > 4) continue;
    const auto& c = table().at(d.i, d.j).coefficients;
    REQUIRE(c);
    CHECK(*c == unit(d.k, 1 / d.scale));
  }
}

TEST_CASE("selected relations") {
  CHECK(*table().at(3, 5).coefficients == unit(8, -1));
  CHECK(*table().at(4, 10).coefficients == unit(13, -2));
  CHECK(*table().at(4, 20).coefficients == unit(21, Rational(1, 2)));
  CHECK(*table().at(2, 1).coefficients == unit(5, -1));
  CHECK(*table().at(3, 3).coefficients == RatVector(24, Rational(0)));
  // printed as zero; Jacobi with [zeta1, zeta4] = 0 and [zeta1, zeta13] = zeta14 forces zeta18
  CHECK(*table().at(1, 16).coefficients == unit(18));
}

TEST_CASE("table comparison flags exactly the known misprints") {
  const Report r = compare_bracket_table(table());
  CHECK(r.count(Status::fail) == 0);
  CHECK(r.find("prolong.table.[1,16]")->status == Status::paper_discrepancy);
  CHECK(r.find("prolong.table.printed_zeros")->status == Status::paper_discrepancy);
  CHECK(expansion_string(table().at(1, 2).coefficients) == "zeta5");
  CHECK(expansion_string(std::nullopt) == "non-constant");
}

TEST_CASE("growth vector and symbol") {
  const Report g = verify_growth(zetas(), 3, 2);
  CHECK(g.count(Status::fail) == 0);
  CHECK(g.find("prolong.growth.origin")->computed == "(4,7,10,13,16,18,20,21,22,23,24)");
  const SymbolAlgebra s = symbol_structure(zetas(), table(), origin(zetas().chart));
  CHECK(s.graded_dimensions == std::vector<std::size_t>{4, 3, 3, 3, 3, 2, 2, 1, 1, 1, 1});
  CHECK(s.weights[23] == 11);
  CHECK(verify_symbol(zetas(), table(), 3).count(Status::fail) == 0);
}

TEST_CASE("Jacobi on the computed fields") {
  CHECK(verify_jacobi(zetas(), 5, 20).count(Status::fail) == 0);
}

TEST_CASE("printed displays") {
  const Report r = verify_printed_zetas(zetas());
  CHECK(r.count(Status::fail) == 0);
  CHECK(r.count(Status::paper_discrepancy) == 1);
}
