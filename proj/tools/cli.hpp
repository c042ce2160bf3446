#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgr::cli {

/// Exit codes.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kInconclusive = 2;
inline constexpr int kUsage = 64;

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pgr::cli
