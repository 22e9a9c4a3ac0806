#ifndef F4PROLONG_NULLFLAG_NULLFLAG_HPP
#define F4PROLONG_NULLFLAG_NULLFLAG_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "f4prolong/control/control.hpp"

namespace f4prolong {

/// z11, z13, z14, z15, z16, z21, z24, z25, z31
const std::vector<std::string>& flag_variables();
ChartPtr flag_chart();

struct QuadraticSpace {
  std::size_t dimension = 0;
  RatMatrix gram;
  Rational pair(const RatVector& a, const RatVector& b) const;
};

/// (4,4)-form polarizing Q on D, basis X1..X4, Y1..Y4.
QuadraticSpace q_space();
/// (4,3)-form polarizing R on the annihilator, basis eps1..eps7.
QuadraticSpace r_space();

struct LambdaFlagCoords {
  /// in flag_variables() order
  std::array<Rational, 9> z{};
  static LambdaFlagCoords from_point(const Point& p);
  Point point() const;
};

struct LambdaFlagFrame {
  /// over (eps1..eps7)
  std::array<RatVector, 3> f;
  /// z17, z26, z27, z35, z36, z37
  std::array<Rational, 6> dependent{};
};

struct VFlagFrame {
  /// over (X1..X4, Y1..Y4)
  std::array<RatVector, 4> eta;
  /// Kernel bases of the stacked constraint systems (dims 1, 2, 4).
  std::vector<RatVector> v1, v2, v4;
};

/// Solves (f3|f3), (f2|f3), (f2|f2), (f1|f3), (f1|f2), (f1|f1) = 0 in that
/// order for z35, z36, z26, z37, z27, z17 using the bilinear form of R.
LambdaFlagFrame complete_null_flag(const LambdaFlagCoords& c);

/// The same solve over Q[z11, ..., z31]: f1, f2, f3 as polynomial vectors on flag_chart().
std::array<std::vector<MultiPoly>, 3> null_flag_symbolic();

/// Kernels of A(f1); A(f1), A(f2); A(f1), A(f2), A(f3), normalized so that
/// eta1 has Y1-slot 1; eta2 has X4-slot 1 and Y1-slot 0; eta3 and eta4 have
/// (X3, X4, Y1, Y2)-slots (1,0,0,0) and (0,0,0,1). Throws std::runtime_error on
/// unexpected kernel dimensions.
VFlagFrame lambda_to_v(const LambdaFlagFrame& frame);

/// eta1..eta4 derived over Q[z] by elimination with constant pivots from
/// the stacked constraint systems (independent of the printed displays).
std::array<std::vector<MultiPoly>, 4> eta_symbolic();

/// The printed closed forms of eta1..eta4 on flag_chart().
std::array<std::vector<MultiPoly>, 4> eta_printed();

Report verify_flag_nullity(const VFlagFrame& v);

/// Null flag suite: completion, kernel profile, nullity, printed displays,
/// dimension counts. `samples` random flag coordinates.
Report verify_null_flags(std::uint64_t seed, std::size_t samples = 100);

}  // namespace f4prolong

#endif  // F4PROLONG_NULLFLAG_NULLFLAG_HPP
