#include "matroid_forge/reinforce_sparsify.hpp"

#include <algorithm>
#include <numeric>

#include "matroid_forge/errors.hpp"
#include "matroid_forge/oracle_networks.hpp"
#include "matroid_forge/ratio_solvers.hpp"

namespace matroid_forge {

namespace {

void validate_costs(const WeightedMultigraph& g, std::span<const Rational> sigma, std::span<const Rational> costs) {
  if (sigma.size() != g.num_edges() || costs.size() != g.num_edges()) {
    throw InputError("weight or cost vector has the wrong length");
  }
  for (const auto& w : sigma) {
    if (sgn(w) <= 0) throw InputError("weights must be strictly positive");
  }
  for (const auto& c : costs) {
    if (sgn(c) < 0) throw InputError("costs must be nonnegative");
  }
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

}  // namespace

std::vector<std::size_t> greedy_order(const WeightedMultigraph& g, std::span<const Rational> costs) {
  std::vector<std::size_t> order(g.num_edges());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (costs[a] != costs[b]) return costs[a] < costs[b];
    return g.edge(a).id < g.edge(b).id;
  });
  return order;
}

AdjustmentPlan reinforce(const WeightedMultigraph& g, std::span<const Rational> sigma, std::span<const Rational> costs,
                         const StepObserver& observer, Exec exec) {
  validate_costs(g, sigma, costs);
  AdjustmentPlan plan;
  plan.target_level = arboricity(g, sigma, exec).value;
  plan.order = greedy_order(g, costs);
  plan.z.assign(g.num_edges(), Rational(0));

  std::vector<Rational> current(sigma.begin(), sigma.end());
  for (auto j : plan.order) {
    const EdgeWitness step = reinforcement_oracle(g, current, j, plan.target_level);
    plan.z[j] += step.value;
    current[j] += step.value;
    if (observer) observer(j, plan.z);
  }
  plan.total_cost = dot(costs, plan.z);
  return plan;
}

AdjustmentPlan sparsify(const WeightedMultigraph& g, std::span<const Rational> sigma, std::span<const Rational> costs,
                        const StepObserver& observer, Exec exec) {
  validate_costs(g, sigma, costs);
  AdjustmentPlan plan;
  plan.target_level = strength(g, sigma, exec).value;
  plan.order = greedy_order(g, costs);
  plan.z.assign(g.num_edges(), Rational(0));

  std::vector<Rational> current(sigma.begin(), sigma.end());
  for (auto j : plan.order) {
    const EdgeWitness step = sparsification_oracle(g, current, j, plan.target_level, exec);
    if (step.value > current[j]) throw ConsistencyError("sparsify: step would make a weight negative");
    plan.z[j] += step.value;
    current[j] -= step.value;
    if (observer) observer(j, plan.z);
  }
  plan.total_cost = dot(costs, plan.z);
  std::vector<std::size_t> removable;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (sgn(current[e]) == 0) removable.push_back(e);
  }
  plan.removable_edges = EdgeSet(std::move(removable));
  return plan;
}

WeightedMultigraph drop_zero_weight_edges(const WeightedMultigraph& g, std::span<const Rational> weights) {
  if (weights.size() != g.num_edges()) throw InputError("weight vector has the wrong length");
  std::vector<Edge> kept;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (sgn(weights[e]) < 0) throw InputError("negative weight");
    if (sgn(weights[e]) == 0) continue;
    Edge copy = g.edge(e);
    copy.weight = weights[e];
    kept.push_back(std::move(copy));
  }
  return WeightedMultigraph(g.vertices(), std::move(kept));
}

}  // namespace matroid_forge
