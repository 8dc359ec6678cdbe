#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "matroid_forge/graph.hpp"
#include "matroid_forge/oracle_networks.hpp"
#include "matroid_forge/ratio_solvers.hpp"

namespace matroid_forge::brute {

/// Edge-count bound for exhaustive routines: MATROID_FORGE_MAX_BRUTE if set, else 16.
std::size_t max_edges();

/// min over X with positive rank drop of sigma(X) / (f(E) - f(E-X)).
RatioWitness exhaustive_strength(const WeightedMultigraph& g, std::span<const Rational> sigma);
/// max over X with positive rank of sigma(X) / f(X).
RatioWitness exhaustive_arboricity(const WeightedMultigraph& g, std::span<const Rational> sigma);
/// max over B with |B| >= 2 of sigma(E_B) / (|B| - 1).
Rational arboricity_over_vertex_sets(const WeightedMultigraph& g, std::span<const Rational> sigma);
/// max over connected vertex-induced subgraphs with an edge of sigma(E_H) / (|V_H| - 1).
Rational arboricity_over_connected_subgraphs(const WeightedMultigraph& g, std::span<const Rational> sigma);

VertexWitness exhaustive_most_violated(const WeightedMultigraph& g, std::span<const Rational> x);
EdgeWitness exhaustive_attack(const WeightedMultigraph& g, std::span<const Rational> y, const Rational& lambda);
Rational exhaustive_reinforcement_step(const WeightedMultigraph& g, std::span<const Rational> x, std::size_t j,
                                       const Rational& alpha);
Rational exhaustive_sparsification_step(const WeightedMultigraph& g, std::span<const Rational> x, std::size_t j,
                                        const Rational& beta);

struct FrankWolfeResult {
  double meo = 0;          // objective at the final iterate
  double gap = 0;          // duality gap; the optimum lies in [meo - gap, meo]
  std::vector<double> usage;  // approximates the optimal expected edge usage
  std::map<std::vector<std::size_t>, double> pmf;  // active spanning trees and their mass
  std::size_t iterations = 0;
  bool converged = false;
};

/// Minimum expected sigma^{-1}-weighted overlap of two independent random spanning
/// trees, by pairwise conditional gradient with a minimum-spanning-tree oracle.
/// Stops once gap <= tol * meo.
FrankWolfeResult frank_wolfe_meo(const WeightedMultigraph& g, std::span<const Rational> sigma, double tol = 1e-9,
                                 std::size_t max_iters = 200000);

/// Exact minimum of m.z over z >= 0 with sigma + z (resp. sigma - z) a nonnegative
/// combination of spanning-tree indicators. Refuses graphs above 12 edges.
Rational lp_reinforce(const WeightedMultigraph& g, std::span<const Rational> sigma, std::span<const Rational> costs);
Rational lp_sparsify(const WeightedMultigraph& g, std::span<const Rational> sigma, std::span<const Rational> costs);

/// True iff `point` is a convex combination of spanning-tree indicators.
bool in_spanning_tree_hull(const WeightedMultigraph& g, std::span<const Rational> point);

enum class Family { spanning_trees, complement_closed };

/// Admissibility: every spanning tree (or every nonempty complement-closed X with
/// usage 1_X / g(X)) has density length at least 1.
bool exhaustive_adm_check(const WeightedMultigraph& g, std::span<const Rational> density, Family family);

/// All nonempty X with E - X closed.
std::vector<EdgeSet> complement_closed_sets(const WeightedMultigraph& g);

}  // namespace matroid_forge::brute
