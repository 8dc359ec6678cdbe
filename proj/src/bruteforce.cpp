#include "matroid_forge/bruteforce.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "matroid_forge/errors.hpp"
#include "matroid_forge/exact_simplex.hpp"

namespace matroid_forge::brute {

std::size_t max_edges() {
  if (const char* env = std::getenv("MATROID_FORGE_MAX_BRUTE")) {
    try {
      const long v = std::stol(env);
      if (v > 0 && v <= 30) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 16;
}

namespace {

void require_edges(const WeightedMultigraph& g, std::size_t bound, const char* what) {
  if (g.num_edges() > bound) {
    throw BoundExceeded(std::string(what) + ": " + std::to_string(g.num_edges()) + " edges exceeds bound " +
                        std::to_string(bound));
  }
}

void require_vertices(const WeightedMultigraph& g, const char* what) {
  if (g.num_vertices() > 20) throw BoundExceeded(std::string(what) + ": more than 20 vertices");
}

std::vector<std::size_t> rank_table(const WeightedMultigraph& g) {
  const std::uint64_t count = std::uint64_t{1} << g.num_edges();
  std::vector<std::size_t> table(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) table[mask] = rank_of_mask(g, mask);
  return table;
}

Rational weight_of_mask(std::span<const Rational> x, std::uint64_t mask) {
  Rational total = 0;
  for (std::size_t e = 0; mask != 0; ++e, mask >>= 1) {
    if (mask & 1U) total += x[e];
  }
  return total;
}

/// Bitmask of edges induced by a vertex mask.
std::uint64_t induced_mask(const WeightedMultigraph& g, std::uint64_t vertex_mask) {
  std::uint64_t out = 0;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if ((vertex_mask >> g.edge(e).u & 1U) && (vertex_mask >> g.edge(e).v & 1U)) out |= std::uint64_t{1} << e;
  }
  return out;
}

}  // namespace

RatioWitness exhaustive_strength(const WeightedMultigraph& g, std::span<const Rational> sigma) {
  require_edges(g, max_edges(), "exhaustive_strength");
  const auto ranks = rank_table(g);
  const std::uint64_t full = ranks.size() - 1;
  std::optional<Rational> best;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    const std::size_t drop = ranks[full] - ranks[full & ~mask];
    if (drop == 0) continue;
    Rational ratio = weight_of_mask(sigma, mask) / static_cast<unsigned long>(drop);
    if (!best || ratio < *best) {
      best = std::move(ratio);
      best_mask = mask;
    }
  }
  if (!best) throw InputError("exhaustive_strength: graph has no edges");
  RatioWitness out;
  out.value = *best;
  out.witness_edges = EdgeSet::from_mask(best_mask);
  return out;
}

RatioWitness exhaustive_arboricity(const WeightedMultigraph& g, std::span<const Rational> sigma) {
  require_edges(g, max_edges(), "exhaustive_arboricity");
  const auto ranks = rank_table(g);
  std::optional<Rational> best;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 1; mask < ranks.size(); ++mask) {
    Rational ratio = weight_of_mask(sigma, mask) / static_cast<unsigned long>(ranks[mask]);
    if (!best || ratio > *best) {
      best = std::move(ratio);
      best_mask = mask;
    }
  }
  if (!best) throw InputError("exhaustive_arboricity: graph has no edges");
  RatioWitness out;
  out.value = *best;
  out.witness_edges = EdgeSet::from_mask(best_mask);
  out.witness_vertices = g.touched_vertices(out.witness_edges);
  return out;
}

Rational arboricity_over_vertex_sets(const WeightedMultigraph& g, std::span<const Rational> sigma) {
  require_vertices(g, "arboricity_over_vertex_sets");
  std::optional<Rational> best;
  for (std::uint64_t vm = 1; vm < (std::uint64_t{1} << g.num_vertices()); ++vm) {
    const int size = __builtin_popcountll(vm);
    if (size < 2) continue;
    Rational ratio = weight_of_mask(sigma, induced_mask(g, vm)) / (size - 1);
    if (!best || ratio > *best) best = std::move(ratio);
  }
  if (!best) throw InputError("arboricity_over_vertex_sets: fewer than two vertices");
  return *best;
}

Rational arboricity_over_connected_subgraphs(const WeightedMultigraph& g, std::span<const Rational> sigma) {
  require_vertices(g, "arboricity_over_connected_subgraphs");
  std::optional<Rational> best;
  for (std::uint64_t vm = 1; vm < (std::uint64_t{1} << g.num_vertices()); ++vm) {
    const VertexSet vs = VertexSet::from_mask(vm);
    const EdgeSet es = g.induced_edges(vs);
    if (es.empty() || induced_components(g, vs).size() != 1) continue;
    Rational ratio = weight_of(sigma, es) / static_cast<unsigned long>(vs.size() - 1);
    if (!best || ratio > *best) best = std::move(ratio);
  }
  if (!best) throw InputError("arboricity_over_connected_subgraphs: graph has no edges");
  return *best;
}

VertexWitness exhaustive_most_violated(const WeightedMultigraph& g, std::span<const Rational> x) {
  require_vertices(g, "exhaustive_most_violated");
  std::optional<VertexWitness> best;
  for (std::uint64_t vm = 1; vm < (std::uint64_t{1} << g.num_vertices()); ++vm) {
    Rational value = Rational(__builtin_popcountll(vm) - 1) - weight_of_mask(x, induced_mask(g, vm));
    if (!best || value < best->value) best = VertexWitness{std::move(value), VertexSet::from_mask(vm)};
  }
  if (!best) throw InputError("exhaustive_most_violated: empty graph");
  return *best;
}

EdgeWitness exhaustive_attack(const WeightedMultigraph& g, std::span<const Rational> y, const Rational& lambda) {
  require_edges(g, max_edges(), "exhaustive_attack");
  const auto ranks = rank_table(g);
  EdgeWitness best{Rational(0), EdgeSet{}};
  for (std::uint64_t mask = 1; mask < ranks.size(); ++mask) {
    Rational value = lambda * static_cast<unsigned long>(ranks[mask]) - weight_of_mask(y, mask);
    if (value < best.value) best = EdgeWitness{std::move(value), EdgeSet::from_mask(mask)};
  }
  return best;
}

Rational exhaustive_reinforcement_step(const WeightedMultigraph& g, std::span<const Rational> x, std::size_t j,
                                       const Rational& alpha) {
  require_edges(g, max_edges(), "exhaustive_reinforcement_step");
  const auto ranks = rank_table(g);
  std::optional<Rational> best;
  for (std::uint64_t mask = 1; mask < ranks.size(); ++mask) {
    if (!(mask >> j & 1U)) continue;
    Rational value = alpha * static_cast<unsigned long>(ranks[mask]) - weight_of_mask(x, mask);
    if (!best || value < *best) best = std::move(value);
  }
  return *best;
}

Rational exhaustive_sparsification_step(const WeightedMultigraph& g, std::span<const Rational> x, std::size_t j,
                                        const Rational& beta) {
  require_edges(g, max_edges(), "exhaustive_sparsification_step");
  const auto ranks = rank_table(g);
  const std::uint64_t full = ranks.size() - 1;
  std::optional<Rational> best;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    if (!(mask >> j & 1U)) continue;
    const std::size_t drop = ranks[full] - ranks[full & ~mask];
    Rational value = weight_of_mask(x, mask) - beta * static_cast<unsigned long>(drop);
    if (!best || value < *best) best = std::move(value);
  }
  return *best;
}

namespace {

std::vector<std::size_t> min_spanning_tree(const WeightedMultigraph& g, const std::vector<double>& cost) {
  std::vector<std::size_t> order(g.num_edges());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cost[a] < cost[b]; });
  DisjointSets dsu(g.num_vertices());
  std::vector<std::size_t> tree;
  for (auto e : order) {
    if (dsu.unite(g.edge(e).u, g.edge(e).v)) tree.push_back(e);
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

}  // namespace

FrankWolfeResult frank_wolfe_meo(const WeightedMultigraph& g, std::span<const Rational> sigma, double tol,
                                 std::size_t max_iters) {
  if (!g.is_connected() || g.num_edges() == 0) throw InputError("frank_wolfe_meo: need a connected graph with edges");
  const std::size_t m = g.num_edges();
  std::vector<double> inv(m);
  for (std::size_t e = 0; e < m; ++e) inv[e] = 1.0 / to_double(sigma[e]);

  FrankWolfeResult out;
  out.pmf[min_spanning_tree(g, inv)] = 1.0;
  std::vector<double> eta(m, 0.0);
  for (auto e : out.pmf.begin()->first) eta[e] = 1.0;

  auto objective = [&] {
    double f = 0;
    for (std::size_t e = 0; e < m; ++e) f += inv[e] * eta[e] * eta[e];
    return f;
  };

  std::vector<double> grad(m);
  for (out.iterations = 0; out.iterations < max_iters; ++out.iterations) {
    for (std::size_t e = 0; e < m; ++e) grad[e] = 2.0 * inv[e] * eta[e];
    const auto toward = min_spanning_tree(g, grad);
    double toward_score = 0;
    for (auto e : toward) toward_score += grad[e];
    double current_score = 0;
    for (std::size_t e = 0; e < m; ++e) current_score += grad[e] * eta[e];
    out.meo = objective();
    out.gap = current_score - toward_score;
    if (out.gap <= tol * out.meo) {
      out.converged = true;
      break;
    }

    // Away atom: the active tree with the largest gradient score.
    auto away = out.pmf.begin();
    double away_score = -1;
    for (auto it = out.pmf.begin(); it != out.pmf.end(); ++it) {
      double score = 0;
      for (auto e : it->first) score += grad[e];
      if (score > away_score) {
        away_score = score;
        away = it;
      }
    }
    std::vector<double> direction(m, 0.0);
    for (auto e : toward) direction[e] += 1.0;
    for (auto e : away->first) direction[e] -= 1.0;
    double slope = 0;
    double curvature = 0;
    for (std::size_t e = 0; e < m; ++e) {
      slope += grad[e] * direction[e];
      curvature += inv[e] * direction[e] * direction[e];
    }
    if (curvature <= 0) break;
    const double max_step = away->second;
    const double step = std::clamp(-slope / (2.0 * curvature), 0.0, max_step);
    for (std::size_t e = 0; e < m; ++e) eta[e] += step * direction[e];
    out.pmf[toward] += step;
    if (step >= max_step) {
      out.pmf.erase(away);
    } else {
      away->second -= step;
    }
  }
  out.meo = objective();
  out.usage = eta;
  return out;
}

namespace {

Rational lp_adjust(const WeightedMultigraph& g, std::span<const Rational> sigma, std::span<const Rational> costs,
                   int sign) {
  if (costs.size() != g.num_edges() || sigma.size() != g.num_edges()) throw InputError("lp: vector length mismatch");
  const auto trees = enumerate_spanning_trees(g, 12);
  const std::size_t m = g.num_edges();
  const std::size_t k = trees.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(k + m, Rational(0)));
  for (std::size_t t = 0; t < k; ++t) {
    for (auto e : trees[t]) a[e][t] = 1;
  }
  std::vector<Rational> c(k + m, Rational(0));
  for (std::size_t e = 0; e < m; ++e) {
    a[e][k + e] = sign;  // lambda-combination = sigma + sign * (-z)
    c[k + e] = costs[e];
  }
  std::vector<Rational> b(sigma.begin(), sigma.end());
  auto solution = solve_standard_lp(a, b, c);
  if (!solution) throw ConsistencyError("lp: adjustment problem infeasible");
  return solution->objective;
}

}  // namespace

Rational lp_reinforce(const WeightedMultigraph& g, std::span<const Rational> sigma, std::span<const Rational> costs) {
  // sum_T lambda_T 1_T - z = sigma
  return lp_adjust(g, sigma, costs, -1);
}

Rational lp_sparsify(const WeightedMultigraph& g, std::span<const Rational> sigma, std::span<const Rational> costs) {
  // sum_T lambda_T 1_T + z = sigma
  return lp_adjust(g, sigma, costs, +1);
}

bool in_spanning_tree_hull(const WeightedMultigraph& g, std::span<const Rational> point) {
  const auto trees = enumerate_spanning_trees(g, 12);
  const std::size_t m = g.num_edges();
  std::vector<std::vector<Rational>> a(m + 1, std::vector<Rational>(trees.size(), Rational(0)));
  for (std::size_t t = 0; t < trees.size(); ++t) {
    for (auto e : trees[t]) a[e][t] = 1;
    a[m][t] = 1;
  }
  std::vector<Rational> b(point.begin(), point.end());
  b.emplace_back(1);
  return solve_standard_lp(a, b, std::vector<Rational>(trees.size(), Rational(0))).has_value();
}

std::vector<EdgeSet> complement_closed_sets(const WeightedMultigraph& g) {
  require_edges(g, max_edges(), "complement_closed_sets");
  std::vector<EdgeSet> out;
  const std::uint64_t full = (std::uint64_t{1} << g.num_edges()) - 1;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    const EdgeSet rest = EdgeSet::from_mask(full & ~mask);
    if (closure(g, rest) == rest) out.push_back(EdgeSet::from_mask(mask));
  }
  return out;
}

bool exhaustive_adm_check(const WeightedMultigraph& g, std::span<const Rational> density, Family family) {
  if (density.size() != g.num_edges()) throw InputError("exhaustive_adm_check: density length mismatch");
  if (family == Family::spanning_trees) {
    for (const auto& tree : enumerate_spanning_trees(g, max_edges())) {
      if (weight_of(density, tree) < 1) return false;
    }
    return true;
  }
  for (const auto& x : complement_closed_sets(g)) {
    const std::size_t drop = corank_g(g, x);
    if (drop == 0) throw ConsistencyError("complement-closed set with zero rank drop");
    if (weight_of(density, x) / static_cast<unsigned long>(drop) < 1) return false;
  }
  return true;
}

}  // namespace matroid_forge::brute
