#ifndef F4PROLONG_CLI_CLI_HPP
#define F4PROLONG_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "f4prolong/geometry/geometry.hpp"

namespace f4prolong {

/// "1/2,0,-3" -> rationals. Throws std::invalid_argument on malformed input.
RatVector parse_rational_list(const std::string& csv);

/// Exit codes: 0 success, 1 a check failed, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace f4prolong

#endif  // F4PROLONG_CLI_CLI_HPP
