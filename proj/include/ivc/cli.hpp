#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ivc::cli {

/// Exit statuses shared by every command.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kUsage = 2;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ivc::cli
