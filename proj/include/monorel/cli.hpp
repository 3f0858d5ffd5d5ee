#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monorel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitAssert = 2;
inline constexpr int kExitUsage = 64;

/// Runs one command line (args[0] is the program name). `in` backs the "-" spec path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace monorel::cli
