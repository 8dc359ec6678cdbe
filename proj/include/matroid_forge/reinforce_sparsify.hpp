#pragma once

#include <functional>
#include <span>
#include <vector>

#include "matroid_forge/execution.hpp"
#include "matroid_forge/graph.hpp"

namespace matroid_forge {

/// Per-edge nonnegative adjustment making the weighted graph homogeneous.
struct AdjustmentPlan {
  std::vector<Rational> z;
  Rational total_cost;
  /// alpha (reinforcement) or beta (sparsification): the common strength and
  /// arboricity of the adjusted weights.
  Rational target_level;
  /// Sparsification only: edges driven to weight exactly zero.
  EdgeSet removable_edges;
  /// Edge order the greedy pass used (nondecreasing cost, ties by id).
  std::vector<std::size_t> order;
};

/// Called after each greedy update with the edge just processed and the current z.
using StepObserver = std::function<void(std::size_t edge, std::span<const Rational> z)>;

/// Greedy order: stable sort by (cost, edge id).
std::vector<std::size_t> greedy_order(const WeightedMultigraph& g, std::span<const Rational> costs);

/// Minimum-cost increase z with sigma + z homogeneous at level alpha = D_sigma(G).
AdjustmentPlan reinforce(const WeightedMultigraph& g, std::span<const Rational> sigma, std::span<const Rational> costs,
                         const StepObserver& observer = {}, Exec exec = Exec::parallel);

/// Minimum-cost decrease z with sigma - z homogeneous at level beta = S_sigma(G).
AdjustmentPlan sparsify(const WeightedMultigraph& g, std::span<const Rational> sigma, std::span<const Rational> costs,
                        const StepObserver& observer = {}, Exec exec = Exec::parallel);

/// The graph with weights sigma - z and every zero-weight edge deleted.
WeightedMultigraph drop_zero_weight_edges(const WeightedMultigraph& g, std::span<const Rational> weights);

}  // namespace matroid_forge
