#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpigou::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kDomainError = 2,
    kVerificationFailed = 3,
};

/// Entry point shared by the qpigou binary and the tests. args excludes the
/// program name. Payload goes to out (or --out), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qpigou::cli
