#pragma once

// Command dispatch for the `digraphical` tool.
//
// Exit codes: 0 success or positive verdict, 1 negative verdict, 2 input
// error.

#include <iosfwd>
#include <string>
#include <vector>

namespace digraphical::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

/// `args` excludes the program name. File arguments of `-` read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace digraphical::cli
