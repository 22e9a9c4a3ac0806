#ifndef F4PROLONG_CARTAN_MODEL_CARTAN_MODEL_HPP
#define F4PROLONG_CARTAN_MODEL_CARTAN_MODEL_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "f4prolong/geometry/geometry.hpp"
#include "f4prolong/report.hpp"

namespace f4prolong {

/// z, x1..x4, y1..y4, x12, x13, x14, x23, x24, x34
const std::vector<std::string>& cartan_variables();
/// Index pairs (i,j), i<j, in the order 12, 13, 14, 23, 24, 34.
const std::array<std::pair<int, int>, 6>& index_pairs();
/// (h,k) with (i,j,h,k) an even permutation of (1,2,3,4).
std::pair<int, int> even_complement(int i, int j);

struct CartanModel {
  ChartPtr chart;
  /// Z, X12, X13, X14, X23, X24, X34, X1..X4, Y1..Y4
  std::vector<std::string> frame_names;
  std::vector<VectorField> frame;
  /// omega, omega12..omega34, dx1..dx4, dy1..dy4 (dual order to the frame)
  std::vector<std::string> coframe_names;
  std::vector<OneForm> coframe;

  const VectorField& field(std::string_view name) const;
  const OneForm& form(std::string_view name) const;
  /// X1..X4, Y1..Y4
  std::vector<VectorField> generators() const;
  Distribution distribution() const;
};

CartanModel build_model();

/// 28 brackets among X1..Y4 against the printed table, plus the 56 brackets
/// of generators with X_jk and Z.
Report verify_bracket_table(const CartanModel& m);

/// 225 pairings <coframe_a, frame_b> = delta_ab.
Report verify_duality(const CartanModel& m);

struct ContactResult {
  bool integrable = false;
  MultiPoly leaf_determinant;
  bool contact = false;
};

ContactResult contact_foliation(const CartanModel& m, int i, int j);
Report contact_foliation_check(const CartanModel& m, int i, int j);

/// Labeled candidate frame X1..X4, Y1..Y4.
struct FrameCandidate {
  std::array<VectorField, 8> fields;
};

FrameCandidate cartan_frame(const CartanModel& m);

/// Congruences modulo the pointwise span of d at `point` and every sample,
/// and independence of the induced 15 fields. Throws if the candidate is
/// pointwise dependent.
Report type_f4_frame_check(const FrameCandidate& f, const Distribution& d, const Point& point,
                           std::span<const Point> samples = {});

}  // namespace f4prolong

#endif  // F4PROLONG_CARTAN_MODEL_CARTAN_MODEL_HPP
