#pragma once

#include <string>
#include <vector>

namespace ramfil::cli {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  ///< first counterexample when failed
};

/// Closed forms against their oracles over the standard parameter grids.
std::vector<CheckResult> run_verify_checks();

}  // namespace ramfil::cli
