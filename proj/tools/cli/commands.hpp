#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace resiclose::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // verify found an unflagged failure
inline constexpr int kExitUsage = 2;        // usage, parse or validity-domain error
inline constexpr int kExitPrecondition = 3; // input violates a semantic precondition

// Entry point shared by the resiclose binary and the tests. argv[0] is the
// program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience for tests: args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace resiclose::cli
