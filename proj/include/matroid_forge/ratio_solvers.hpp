#pragma once

#include <span>
#include <vector>

#include "matroid_forge/execution.hpp"
#include "matroid_forge/graph.hpp"

namespace matroid_forge {

/// One step of a ratio iteration: the level tried and the size of the set that
/// improved on it (|B| for arboricity, the rank drop for strength; 0 on the final step).
struct RatioStep {
  Rational level;
  std::size_t witness_size = 0;
};

struct RatioWitness {
  Rational value;
  VertexSet witness_vertices;  // arboricity: a D-optimal connected vertex set
  EdgeSet witness_edges;       // strength: an optimal X; arboricity: E_B of the vertex witness
  std::size_t iterations = 0;
  std::vector<RatioStep> trace;
};

/// Fractional arboricity max{sigma(X)/f(X)} by the densest-subgraph ratio iteration.
/// Requires a connected graph with at least one edge and nonnegative weights with
/// positive total. Throws ConsistencyError if the witness sizes fail to shrink.
RatioWitness arboricity(const WeightedMultigraph& g, std::span<const Rational> sigma, Exec exec = Exec::parallel);
RatioWitness arboricity(const WeightedMultigraph& g, Exec exec = Exec::parallel);

/// Strength min{sigma(X)/(f(E)-f(E-X))} by a descent on the attack oracle.
RatioWitness strength(const WeightedMultigraph& g, std::span<const Rational> sigma, Exec exec = Exec::parallel);
RatioWitness strength(const WeightedMultigraph& g, Exec exec = Exec::parallel);

struct Homogeneity {
  bool homogeneous = false;
  Rational alpha;  // fractional arboricity
  Rational beta;   // strength
};

Homogeneity is_homogeneous(const WeightedMultigraph& g, std::span<const Rational> sigma, Exec exec = Exec::parallel);
Homogeneity is_homogeneous(const WeightedMultigraph& g, Exec exec = Exec::parallel);

}  // namespace matroid_forge
