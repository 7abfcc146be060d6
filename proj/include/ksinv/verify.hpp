#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ksinv {

struct PropertyResult {
  std::string name;  // "<module>.<property>"
  bool passed = false;
  std::string detail;
};

/// Runs every library property suite for n = 1..n_max. Randomized checks
/// use a fixed seed, so the output is deterministic. @p on_result, when
/// set, is called as each property finishes.
std::vector<PropertyResult> run_verification(int n_max,
                                             const std::function<void(const PropertyResult&)>& on_result = {});

}  // namespace ksinv
