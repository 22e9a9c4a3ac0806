#ifndef F4PROLONG_PROLONG_PROLONG_HPP
#define F4PROLONG_PROLONG_PROLONG_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "f4prolong/cartan_model/cartan_model.hpp"
#include "f4prolong/report.hpp"

namespace f4prolong {

/// The 15 base variables followed by the nine flag coordinates.
const std::vector<std::string>& prolonged_variables();
ChartPtr prolonged_chart();

/// zeta_k := scale * [zeta_i, zeta_j] (1-based indices)
struct ZetaDefinition {
  std::size_t k, i, j;
  Rational scale;
};

/// Defining brackets of zeta_5..zeta_24.
const std::vector<ZetaDefinition>& zeta_definitions();

struct ZetaSystem {
  CartanModel model;
  ChartPtr chart;
  /// zeta[0] is zeta_1; four entries until materialized, then 24.
  std::vector<VectorField> zeta;

  const VectorField& operator()(std::size_t k) const { return zeta.at(k - 1); }
  bool materialized() const { return zeta.size() == 24; }
};

/// zeta_1..zeta_4 on W.
ZetaSystem build_zeta_generators();

/// Appends zeta_5..zeta_24 from their defining brackets (no-op when done).
void materialize_zetas(ZetaSystem& z);

/// The six Pfaff forms, in the order dz11 - z21 dz13, dz21 - z31 dz24,
/// dz14 - z24 dz13, dz25 - 1/4 z31^2 dz24, dz15 - z25 dz13,
/// dz16 - (z24 z25 - 1/4 z21^2) dz13.
std::vector<OneForm> pfaff_forms(const ChartPtr& w);

/// Annihilation of the Pfaff forms by zeta_1..zeta_4, and zeta_4 against eta_1.
Report verify_pfaff_conditions(const ZetaSystem& z);

struct BracketEntry {
  std::size_t i = 0, j = 0;
  /// over zeta_1..zeta_24; nullopt when no constant expansion exists
  std::optional<RatVector> coefficients;
};

/// [zeta_i, zeta_j] for i in 1..4, j in 1..23 (92 entries, row-major).
struct BracketTable {
  std::vector<BracketEntry> entries;
  const BracketEntry& at(std::size_t i, std::size_t j) const;
};

/// Materializes the zetas if needed, then expands all 92 brackets.
BracketTable compute_bracket_table(ZetaSystem& z);

/// One printed relation [zeta_i, zeta_j] = c zeta_k; k = 0 for a printed zero.
struct PrintedRelation {
  std::size_t i, j;
  Rational c;
  std::size_t k;
};

/// In printed order, including the repeated block.
const std::vector<PrintedRelation>& printed_relations();

/// "c zeta_k", "0" or "non-constant".
std::string expansion_string(const std::optional<RatVector>& c);

/// Computed table against the printed relations; one item per table entry.
Report compare_bracket_table(const BracketTable& t);
/// {entry, computed, printed, status} rows.
nlohmann::json bracket_table_json(const BracketTable& t);

/// Printed intermediate displays of zeta_5..zeta_24 against the computed fields.
Report verify_printed_zetas(const ZetaSystem& z);

/// Growth vector (4,7,...,24) at the origin and `points` random points,
/// and pi_*^{-1}(D) inside E^(7) at the same points.
Report verify_growth(const ZetaSystem& z, std::uint64_t seed, std::size_t points = 5);

struct SymbolAlgebra {
  std::vector<std::size_t> graded_dimensions;
  /// weight of zeta_k at index k-1
  std::vector<std::size_t> weights;
  /// (i, j) -> weight-(w_i + w_j) part of the table entry
  std::map<std::pair<std::size_t, std::size_t>, RatVector> structure;
};

/// Weights are derived-flag depths at `point`. Throws std::runtime_error
/// when a zeta appears at a depth other than the sum of its defining weights.
SymbolAlgebra symbol_structure(const ZetaSystem& z, const BracketTable& table, const Point& point);

/// Weights, graded dimensions and homogeneity at the origin and three
/// random points.
Report verify_symbol(const ZetaSystem& z, const BracketTable& table, std::uint64_t seed);

/// Antisymmetry and Jacobi on `triples` random triples of zetas.
Report verify_jacobi(const ZetaSystem& z, std::uint64_t seed, std::size_t triples = 50);

/// Full suite: generators, Pfaff conditions, table, displays, growth, symbol, Jacobi.
Report verify_prolong(std::uint64_t seed, std::size_t points = 5);

}  // namespace f4prolong

#endif  // F4PROLONG_PROLONG_PROLONG_HPP
