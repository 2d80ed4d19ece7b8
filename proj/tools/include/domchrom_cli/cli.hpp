#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domchrom::cli {

/// Exit codes: 0 ok, 1 the checked property is false, 2 usage or input error.
inline constexpr int kOk = 0;
inline constexpr int kPropertyFalse = 1;
inline constexpr int kUsage = 2;

/// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace domchrom::cli
