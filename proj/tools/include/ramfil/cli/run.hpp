#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramfil::cli {

enum ExitCode : int { kOk = 0, kValidationError = 1, kVerifyFailure = 2 };

/// Entry point shared by the executable and the tests. args excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramfil::cli
