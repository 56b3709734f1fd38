#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spjlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUserError = 2;
inline constexpr int kExitBadPath = 3;

// Entry point for the `spjlab` command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spjlab
