#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latres::cli
{

// Exit codes: 0 success or a positive verdict, 1 a negative verdict,
// 2 usage, parse or precondition errors.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;

/// Runs one subcommand. `args` excludes the program name. A diagram file
/// argument of "-" (the default) reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace latres::cli
