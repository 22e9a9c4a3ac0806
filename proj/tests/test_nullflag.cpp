#include <doctest.h>

#include "f4prolong/geometry/geometry.hpp"
#include "f4prolong/nullflag/nullflag.hpp"

using namespace f4prolong;

TEST_CASE("completed flags are R-null") {
  const QuadraticSpace r = r_space();
  CHECK(r.dimension == 7);
  for (const Point& p : random_rational_points(9, 10, 21)) {
    const LambdaFlagFrame f = complete_null_flag(LambdaFlagCoords::from_point(p));
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) CHECK(r.pair(f.f[a], f.f[b]) == 0);
  }
}

TEST_CASE("V-flags have profile 1, 2, 4 and are Q-null") {
  const QuadraticSpace q = q_space();
  for (const Point& p : random_rational_points(9, 10, 8)) {
    const VFlagFrame v = lambda_to_v(complete_null_flag(LambdaFlagCoords::from_point(p)));
    CHECK(v.v1.size() == 1);
    CHECK(v.v2.size() == 2);
    CHECK(v.v4.size() == 4);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) CHECK(q.pair(v.eta[a], v.eta[b]) == 0);
    CHECK(v.eta[0][4] == 1);
    CHECK(verify_flag_nullity(v).passed());
  }
}

TEST_CASE("base point gives the coordinate flag") {
  const LambdaFlagFrame f = complete_null_flag(LambdaFlagCoords{});
  for (const auto& d : f.dependent) CHECK(d == 0);
  const VFlagFrame v = lambda_to_v(f);
  RatVector y1(8, Rational(0));
  y1[4] = 1;
  CHECK(v.eta[0] == y1);
}

TEST_CASE("symbolic eta agrees with the sampled kernels") {
  const auto eta = eta_symbolic();
  for (const Point& p : random_rational_points(9, 5, 30)) {
    const VFlagFrame v = lambda_to_v(complete_null_flag(LambdaFlagCoords::from_point(p)));
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t s = 0; s < 8; ++s) CHECK(eta[k][s].eval(p) == v.eta[k][s]);
  }
}

TEST_CASE("null flag suite") {
  const Report r = verify_null_flags(4, 20);
  CHECK(r.count(Status::fail) == 0);
  CHECK(r.find("nullflag.dimension.v")->computed == "11");
  CHECK(r.find("nullflag.dimension.lambda")->computed == "9");
  CHECK(r.find("nullflag.printed.f1f1")->status == Status::paper_discrepancy);
}
