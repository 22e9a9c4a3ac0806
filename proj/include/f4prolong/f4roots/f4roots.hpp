#ifndef F4PROLONG_F4ROOTS_F4ROOTS_HPP
#define F4PROLONG_F4ROOTS_F4ROOTS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "f4prolong/prolong/prolong.hpp"
#include "f4prolong/report.hpp"

namespace f4prolong {

/// Coefficients in the simple roots alpha1..alpha4.
using Root = std::array<int, 4>;
/// a_ij = <alpha_i, alpha_j^vee>
using CartanMatrix = std::array<std::array<int, 4>, 4>;

/// Bourbaki numbering.
CartanMatrix f4_cartan_matrix();

int height(const Root& r);
std::string root_string(const Root& r);

struct RootSystem {
  CartanMatrix cartan{};
  /// by height, then lexicographically
  std::vector<Root> positive_roots;

  bool is_positive_root(const Root& r) const;
  Root highest() const;
};

/// Closure of the simple roots under root strings. Throws
/// std::invalid_argument for a matrix that is not a finite-type Cartan matrix.
RootSystem generate_positive_roots(const CartanMatrix& cartan);

/// Number of positive roots of each height 1, 2, ...
std::vector<std::size_t> height_distribution(const RootSystem& rs);
/// Number of positive roots with alpha4-coefficient 0, 1, 2, ...
std::vector<std::size_t> alpha4_grading(const RootSystem& rs);

/// zeta_k -> -root, stored as the positive root (index k-1).
using RootAssignment = std::array<Root, 24>;

/// The assignment as printed (zeta14 and zeta17 share a root there).
RootAssignment printed_assignment();

struct Correspondence {
  RootAssignment assignment{};
  /// zeta indices changed from the starting assignment
  std::vector<std::size_t> repaired;
  bool consistent = false;
  Report report;
};

/// Additivity on nonzero table entries, non-roots on zero entries, heights
/// against symbol weights, bijectivity. Entries violating additivity are
/// repaired when every nonzero bracket landing on that zeta forces the same
/// positive root.
Correspondence verify_root_correspondence(const BracketTable& table, const RootAssignment& start,
                                          const RootSystem& rs, const std::vector<std::size_t>& weights);

/// Root system, gradings, and the correspondence with the prolonged symbol.
Report verify_roots(std::uint64_t seed);

/// {schema, roots: [{coefficients, height, alpha4}]}
nlohmann::json roots_json(const RootSystem& rs);

}  // namespace f4prolong

#endif  // F4PROLONG_F4ROOTS_F4ROOTS_HPP
