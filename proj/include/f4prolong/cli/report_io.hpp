#ifndef F4PROLONG_CLI_REPORT_IO_HPP
#define F4PROLONG_CLI_REPORT_IO_HPP

#include <iosfwd>

#include <json.hpp>

#include "f4prolong/report.hpp"

namespace f4prolong {

inline constexpr const char* kSchema = "f4prolong/1";

/// {"schema", "suite", "seed", "elapsed_ms", "summary", "items": [...]}.
/// With include_timing = false the output is a pure function of the seed.
nlohmann::json report_to_json(const Report& r, bool include_timing = true);
void print_report(std::ostream& os, const Report& r);

}  // namespace f4prolong

#endif  // F4PROLONG_CLI_REPORT_IO_HPP
