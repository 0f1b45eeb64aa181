#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ep::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kNonmember = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInternal = 3;

/// Runs the tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ep::cli
