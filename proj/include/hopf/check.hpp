#pragma once

#include <string>
#include <vector>

namespace hopf {

/// One broken axiom, with the witness that broke it.
struct Violation {
  std::string axiom;
  std::string witness;
};

/// Outcome of a single verification; detail carries the witness on failure.
struct CheckResult {
  bool pass = true;
  std::string detail;
};

inline CheckResult check_fail(std::string detail) {
  return CheckResult{false, std::move(detail)};
}

}  // namespace hopf
