#ifndef F4PROLONG_CLI_SUITES_HPP
#define F4PROLONG_CLI_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "f4prolong/geometry/geometry.hpp"
#include "f4prolong/report.hpp"

namespace f4prolong {

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// 0 keeps each suite's default sample count
  std::size_t samples = 0;
  /// Extra evaluation point: 15 entries for cartan, 24 for prolong.
  std::optional<Point> point;
};

/// cartan, control, nullflag, prolong, roots, all
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite or a --point of the
/// wrong dimension.
Report run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace f4prolong

#endif  // F4PROLONG_CLI_SUITES_HPP
