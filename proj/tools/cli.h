#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace intdisc::cli {

// exit codes
inline constexpr int ok = 0;
inline constexpr int domain_error = 1;
inline constexpr int usage_error = 2;
inline constexpr int criteria_failed = 3; // acceptance only

// args excludes the program name
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace intdisc::cli
