#include <doctest.h>

#include <set>

#include "f4prolong/f4roots/f4roots.hpp"

using namespace f4prolong;

namespace {

CartanMatrix chain(int a23, int a32) {
  return {{{2, -1, 0, 0}, {-1, 2, a23, 0}, {0, a32, 2, -1}, {0, 0, -1, 2}}};
}

}  // namespace

TEST_CASE("F4 positive roots") {
  const RootSystem rs = generate_positive_roots(f4_cartan_matrix());
  CHECK(rs.positive_roots.size() == 24);
  CHECK(rs.highest() == Root{2, 3, 4, 2});
  CHECK(height(rs.highest()) == 11);
  CHECK(height_distribution(rs) == std::vector<std::size_t>{4, 3, 3, 3, 3, 2, 2, 1, 1, 1, 1});
  CHECK(alpha4_grading(rs) == std::vector<std::size_t>{9, 8, 7});
  CHECK(rs.is_positive_root({1, 2, 2, 1}));
  CHECK_FALSE(rs.is_positive_root({1, 1, 1, 2}));
  CHECK(root_string({1, 2, 2, 1}) == "a1 + 2a2 + 2a3 + a4");
}

TEST_CASE("classical rank-4 systems") {
  CHECK(generate_positive_roots(chain(-1, -1)).positive_roots.size() == 10);
  CHECK(generate_positive_roots(chain(-1, -2)).positive_roots.size() == 24);
  const CartanMatrix b4{{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -2}, {0, 0, -1, 2}}};
  CHECK(generate_positive_roots(b4).positive_roots.size() == 16);
  CHECK(generate_positive_roots(b4).highest() == Root{1, 2, 2, 2});
  const CartanMatrix d4{{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}};
  CHECK(generate_positive_roots(d4).positive_roots.size() == 12);
}

TEST_CASE("non-Cartan input is rejected") {
  const CartanMatrix affine{{{2, -1, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -1, 2}}};
  CHECK_THROWS_AS(generate_positive_roots(affine), std::invalid_argument);
  CartanMatrix bad = f4_cartan_matrix();
  bad[0][0] = 3;
  CHECK_THROWS_AS(generate_positive_roots(bad), std::invalid_argument);
  bad = f4_cartan_matrix();
  bad[0][1] = 0;
  CHECK_THROWS_AS(generate_positive_roots(bad), std::invalid_argument);
}

TEST_CASE("correspondence needs only the zeta17 repair") {
  ZetaSystem z = build_zeta_generators();
  const BracketTable t = compute_bracket_table(z);
  const RootSystem rs = generate_positive_roots(f4_cartan_matrix());
  const std::vector<std::size_t> weights = symbol_structure(z, t, origin(z.chart)).weights;
  const Correspondence c = verify_root_correspondence(t, printed_assignment(), rs, weights);
  CHECK(c.consistent);
  CHECK(c.repaired == std::vector<std::size_t>{17});
  CHECK(c.assignment[16] == Root{1, 2, 2, 1});
  std::set<Root> distinct(c.assignment.begin(), c.assignment.end());
  CHECK(distinct.size() == 24);
}

TEST_CASE("roots suite") {
  const Report r = verify_roots(1);
  CHECK(r.count(Status::fail) == 0);
  CHECK(r.count(Status::paper_discrepancy) == 1);
}
