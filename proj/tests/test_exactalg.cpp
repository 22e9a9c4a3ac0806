#include <doctest.h>

#include <random>

#include "f4prolong/control/control.hpp"
#include "f4prolong/exactalg/linalg.hpp"
#include "f4prolong/exactalg/poly.hpp"

using namespace f4prolong;

namespace {

// Plain Gauss-Jordan over Q, kept separate from the Bareiss code under test.
std::size_t naive_rank(RatMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int rank_cap) {
  std::uniform_int_distribution<int> d(-3, 3);
  RatMatrix left = rat_matrix(rows, static_cast<std::size_t>(rank_cap));
  RatMatrix right = rat_matrix(static_cast<std::size_t>(rank_cap), cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (int k = 0; k < rank_cap; ++k) left(i, static_cast<std::size_t>(k)) = make_rational(d(rng), 1 + (d(rng) & 1));
  for (int k = 0; k < rank_cap; ++k)
    for (std::size_t j = 0; j < cols; ++j) right(static_cast<std::size_t>(k), j) = d(rng);
  RatMatrix m = rat_matrix(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (int k = 0; k < rank_cap; ++k) m(i, j) += left(i, static_cast<std::size_t>(k)) * right(static_cast<std::size_t>(k), j);
  return m;
}

RatMatrix random_skew(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-4, 4);
  RatMatrix m = rat_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = make_rational(d(rng), 1 + (d(rng) & 1));
      m(j, i) = -m(i, j);
    }
  return m;
}

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-2/4")) == "-1/2");
  CHECK_THROWS_AS(parse_rational("-2/-4"), std::invalid_argument);
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("polynomial parsing and arithmetic") {
  const ChartPtr c = Chart::make("t", {"x", "y", "z"});
  const MultiPoly p = parse_poly(c, "x y - 1/4 z^2");
  const MultiPoly q = parse_poly(c, "-1/2*x*y + 3");
  CHECK(p.to_string() == "x y - 1/4 z^2");
  CHECK((p + p - p) == p);
  CHECK((p * q).total_degree() == 4);
  CHECK(p.diff("z") == parse_poly(c, "-1/2 z"));
  const RatVector pt{2, 3, Rational(1, 2)};
  CHECK(p.eval(pt) == Rational(6) - Rational(1, 16));
  CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
  CHECK(p.pow(3) == p * p * p);
  CHECK_THROWS_AS(parse_poly(c, "x w"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly(c, "x +"), std::invalid_argument);
}

TEST_CASE("embedding matches variables by name") {
  const ChartPtr small = Chart::make("s", {"y", "x"});
  const ChartPtr big = Chart::make("b", {"x", "w", "y"});
  const MultiPoly p = parse_poly(small, "x^2 y + 2 y");
  const MultiPoly e = p.embed(big);
  CHECK(e == parse_poly(big, "x^2 y + 2 y"));
  CHECK_THROWS(parse_poly(big, "w").embed(small));
}

TEST_CASE("Bareiss rank agrees with naive elimination") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 3 + static_cast<std::size_t>(trial % 5);
    const std::size_t cols = 2 + static_cast<std::size_t>((trial * 7) % 6);
    const RatMatrix m = random_matrix(rng, rows, cols, 1 + trial % 4);
    const RankKernel rk = rank_kernel(m);
    CHECK(rk.rank == naive_rank(m));
    CHECK(rk.kernel.size() == cols - rk.rank);
    for (const auto& k : rk.kernel)
      for (std::size_t i = 0; i < rows; ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < cols; ++j) acc += m(i, j) * k[j];
        CHECK(acc == 0);
      }
  }
  CHECK(rank(rat_matrix(0, 0)) == 0);
}

TEST_CASE("determinant routes agree") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
    const RatMatrix m = random_matrix(rng, n, n, static_cast<int>(n) - (trial % 3 == 0 ? 1 : 0) + (n == 1));
    CHECK(determinant(m) == determinant_expansion(m, Rational(1)));
  }
  const RatMatrix m = rat_matrix({{0, 1, 2, 3}, {-1, 0, 4, 5}, {-2, -4, 0, 6}, {-3, -5, -6, 0}});
  CHECK(determinant(m) == 64);
  CHECK_THROWS_AS(determinant(rat_matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("Pfaffian squares to the determinant") {
  std::mt19937_64 rng(9);
  CHECK(pfaffian(rat_matrix({{0, 1}, {-1, 0}})) == 1);
  for (std::size_t n = 2; n <= 10; n += 2) {
    const RatMatrix m = random_skew(rng, n);
    const Rational pf = pfaffian(m);
    CHECK(pf * pf == determinant(m));
  }
  CHECK_THROWS_AS(pfaffian(rat_matrix(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(pfaffian(rat_matrix({{0, 1}, {1, 0}})), std::invalid_argument);
}

TEST_CASE("symbolic Pfaffian of the constraint matrix") {
  const PolyMatrix a = build_A_symbolic();
  const ChartPtr c = covector_chart();
  const MultiPoly one(c, 1);
  const MultiPoly pf = pfaffian(a, one);
  CHECK(pf * pf == determinant_expansion(a, one));
  // frozen from an independent sympy evaluation
  const RatVector pt{Rational(1, 2), 1, -2, 3, Rational(1, 3), 5, -1};
  CHECK(determinant(build_A({Rational(1, 2), {1, -2, 3, Rational(1, 3), 5, -1}})) == Rational(639128961, 256));
  CHECK(pf.eval(pt) * pf.eval(pt) == Rational(639128961, 256));
}

TEST_CASE("solve and rref") {
  const RatMatrix a = rat_matrix({{1, 2}, {3, 4}, {5, 6}});
  const auto x = solve(a, {5, 11, 17});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 2);
  CHECK_FALSE(solve(a, {1, 0, 0}));
  const Echelon e = rref(rat_matrix({{2, 4, 6}, {1, 2, 4}}));
  CHECK(e.pivots == std::vector<std::size_t>{0, 2});
  CHECK(canonical_basis({{1, 1}, {2, 2}, {0, 0}}, 2).size() == 1);
}
