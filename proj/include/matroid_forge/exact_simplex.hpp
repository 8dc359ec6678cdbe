#pragma once

#include <optional>
#include <vector>

#include "matroid_forge/rational.hpp"

namespace matroid_forge {

struct LpSolution {
  Rational objective;
  std::vector<Rational> x;
};

/// Solves min c.x subject to A x = b, x >= 0 exactly with a two-phase tableau
/// simplex and Bland's rule. Returns nullopt when infeasible; throws
/// ConsistencyError when unbounded.
std::optional<LpSolution> solve_standard_lp(const std::vector<std::vector<Rational>>& a, std::vector<Rational> b,
                                            const std::vector<Rational>& c);

}  // namespace matroid_forge
