#pragma once

#include <span>
#include <string>
#include <vector>

#include "matroid_forge/execution.hpp"
#include "matroid_forge/graph.hpp"

namespace matroid_forge {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // empty when passed
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

/// Cross-checks every solver on one weighted graph: fast results against the
/// exhaustive oracles (when within the brute-force bound), serial against
/// parallel, and the identities each result must satisfy.
VerifyReport verify_instance(const WeightedMultigraph& g, std::span<const Rational> costs);

}  // namespace matroid_forge
