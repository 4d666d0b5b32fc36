#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace udlrc::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kSpecError = 2,
    kUndecodable = 3,
    kCertifyFailed = 4,
    kBudgetExceeded = 5,
};

inline constexpr int kDefaultBudget = 20;

/// Runs one CLI invocation. args excludes the program name, e.g. {"bounds", "--spec", "a.spec"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace udlrc::cli
