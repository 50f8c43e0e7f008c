#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lattice_forge::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 2;
inline constexpr int admissibility = 3;
inline constexpr int domain = 4;
} // namespace exit_code

/// Parses and executes one invocation. Results go to `out` (or --output),
/// diagnostics to `err`. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lattice_forge::cli
