#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cuntz::cli {

/// Exit status: 0 success or true verdict, 1 false verdict or violation,
/// 2 usage, parse or configuration error.
enum Status { kOk = 0, kFalse = 1, kUsage = 2 };

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Invariant checks over the built-in systems; one line (or JSON record) per check.
int selftest(std::ostream& out, bool json);

}  // namespace cuntz::cli
