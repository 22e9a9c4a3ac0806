#include <doctest.h>

#include "f4prolong/cartan_model/cartan_model.hpp"
#include "f4prolong/geometry/geometry.hpp"

using namespace f4prolong;

namespace {

VectorField field(const ChartPtr& c, std::vector<std::string> comps) {
  std::vector<MultiPoly> p;
  for (const auto& s : comps) p.push_back(parse_poly(c, s));
  return VectorField(c, std::move(p));
}

}  // namespace

TEST_CASE("Lie bracket is antisymmetric and satisfies Jacobi") {
  const ChartPtr c = Chart::make("r3", {"x", "y", "z"});
  const VectorField a = field(c, {"y", "x z", "1"});
  const VectorField b = field(c, {"z^2", "0", "x y"});
  const VectorField d = field(c, {"1 + x", "y^2", "-z"});
  CHECK(lie_bracket(a, b) == -lie_bracket(b, a));
  CHECK(lie_bracket(a, a).is_zero());
  const VectorField j =
      lie_bracket(a, lie_bracket(b, d)) + lie_bracket(b, lie_bracket(d, a)) + lie_bracket(d, lie_bracket(a, b));
  CHECK(j.is_zero());
  const MultiPoly f = parse_poly(c, "x y z");
  CHECK(lie_bracket(a, b).apply(f) == a.apply(b.apply(f)) - b.apply(a.apply(f)));
}

TEST_CASE("exterior derivative formula on a contact form") {
  const ChartPtr c = Chart::make("h", {"x", "y", "z"});
  const OneForm alpha = OneForm::differential(c, "z") - MultiPoly::variable(c, "x") * OneForm::differential(c, "y");
  const VectorField x = VectorField::coordinate(c, "x");
  const VectorField y = field(c, {"0", "1", "x"});
  CHECK(pair(alpha, x).is_zero());
  CHECK(pair(alpha, y).is_zero());
  CHECK(two_form_eval(alpha, x, y) == MultiPoly(c, -1));
}

TEST_CASE("growth vectors of Heisenberg and Engel") {
  const ChartPtr h = Chart::make("h", {"x", "y", "z"});
  const Distribution heis(h, {VectorField::coordinate(h, "x"), field(h, {"0", "1", "x"})});
  CHECK(growth_vector(heis, origin(h), 5).ranks == std::vector<std::size_t>{2, 3});
  CHECK_FALSE(frobenius_check(heis, origin(h)));

  const ChartPtr e = Chart::make("e", {"x", "y", "z", "w"});
  const Distribution engel(e, {VectorField::coordinate(e, "x"), field(e, {"0", "1", "x", "z"})});
  const auto pts = random_points(4, 3, 2);
  const DerivedFlag flag = derived_flag(engel, pts, 6);
  for (const auto& g : flag.growth) CHECK(g.ranks == std::vector<std::size_t>{2, 3, 4});
  CHECK(flag.stabilized);

  const Distribution plane(h, {VectorField::coordinate(h, "x"), VectorField::coordinate(h, "y")});
  CHECK(frobenius_check(plane, origin(h)));
}

TEST_CASE("constant expansions") {
  const ChartPtr h = Chart::make("h", {"x", "y", "z"});
  const std::vector<VectorField> basis{field(h, {"1", "0", "0"}), field(h, {"0", "1", "x"}),
                                       VectorField::coordinate(h, "z")};
  const VectorField v = Rational(2) * basis[0] - Rational(1, 3) * basis[2];
  const auto c = expand_constant(v, basis, origin(h));
  REQUIRE(c);
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 0);
  CHECK((*c)[2] == Rational(-1, 3));
  CHECK_FALSE(expand_constant(MultiPoly::variable(h, "y") * basis[0], basis, origin(h)));
}

TEST_CASE("seeded points are reproducible") {
  CHECK(random_points(5, 4, 17) == random_points(5, 4, 17));
  CHECK(random_rational_points(5, 4, 17) == random_rational_points(5, 4, 17));
  for (const auto& p : random_rational_points(6, 20, 3))
    for (const auto& q : p) {
      CHECK(abs(q.get_num()) <= 5);
      CHECK(q.get_den() <= 3);
    }
}

TEST_CASE("Cartan model brackets, duality and contact foliations") {
  const CartanModel m = build_model();
  CHECK(m.frame.size() == 15);
  CHECK(verify_bracket_table(m).count(Status::fail) == 0);
  const Report dual = verify_duality(m);
  CHECK(dual.passed());
  for (const auto& [i, j] : index_pairs()) {
    const ContactResult r = contact_foliation(m, i, j);
    CHECK(r.integrable);
    CHECK(r.contact);
    CHECK_FALSE(r.leaf_determinant.is_zero());
  }
  const auto pts = random_points(15, 3, 4);
  const DerivedFlag flag = derived_flag(m.distribution(), pts, 4);
  for (const auto& g : flag.growth) CHECK(g.ranks == std::vector<std::size_t>{8, 15});
}

TEST_CASE("type F4 frame check accepts the frame and rejects a mislabeling") {
  const CartanModel m = build_model();
  const FrameCandidate f = cartan_frame(m);
  CHECK(type_f4_frame_check(f, m.distribution(), origin(m.chart)).count(Status::fail) == 0);
  FrameCandidate bad = f;
  std::swap(bad.fields[0], bad.fields[1]);
  CHECK(type_f4_frame_check(bad, m.distribution(), origin(m.chart)).count(Status::fail) > 0);
}
