#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sl2hom {

struct CheckResult {
  std::string suite;
  std::string check;
  bool passed = false;
  std::string detail;
};

/// Names accepted by run_suite, excluding "all".
const std::vector<std::string>& suite_names();

/// Runs one invariant suite by name, or every suite for "all". Throws
/// std::invalid_argument for unknown names. Deterministic: fixed seeds throughout.
std::vector<CheckResult> run_suite(std::string_view name);

}  // namespace sl2hom
