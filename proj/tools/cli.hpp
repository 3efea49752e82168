#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace janowski::cli {

inline constexpr const char* kVersion = "0.1.0";

// Runs one invocation; returns 0 on success, 2 on violated preconditions or usage
// errors, 3 on numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace janowski::cli
