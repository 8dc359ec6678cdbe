#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "matroid_forge/execution.hpp"
#include "matroid_forge/graph.hpp"

namespace matroid_forge {

struct PeelStep {
  std::size_t vertices = 0;  // size of the contracted graph this step worked on
  std::size_t edges = 0;
  Rational density;          // D of that graph
  std::vector<std::string> subgraph_edges;
};

/// Spanning-tree 2-modulus and the quantities derived from the optimal density.
struct ModulusProfile {
  std::vector<Rational> eta;  // expected edge usage of an optimal spanning-tree pmf
  std::vector<Rational> rho;  // optimal admissible density
  Rational mod2;
  Rational meo;               // 1 / mod2
  EdgeSet e_min;              // argmin of eta/sigma
  EdgeSet e_max;              // argmax of eta/sigma
  std::vector<PeelStep> peel_sequence;
};

/// Returns a D-optimal connected vertex set of `g` (at least two vertices) and D.
struct DensestPiece {
  Rational density;
  VertexSet vertices;
};
using DensestFinder = std::function<DensestPiece(const WeightedMultigraph&)>;

/// Peels D-optimal subgraphs: each peel fixes eta = sigma / D on its edges, then
/// contracts it. `finder` defaults to the min-cut arboricity solver.
ModulusProfile spanning_tree_modulus(const WeightedMultigraph& g, const DensestFinder& finder = {},
                                     Exec exec = Exec::parallel);

/// n_sigma(e) = sigma(e) f(E) / sigma(E).
std::vector<Rational> n_sigma(const WeightedMultigraph& g, std::span<const Rational> sigma);

/// Homogeneous iff n_sigma is admissible for the complement-closed family, i.e.
/// iff the strength is at least sigma(E)/f(E).
bool homogeneity_via_nsigma(const WeightedMultigraph& g, std::span<const Rational> sigma, Exec exec = Exec::parallel);

struct ExtremesReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Checks 1/max(eta/sigma) = S, 1/min(eta/sigma) = D, and that E_max and E_min
/// realise the strength and arboricity ratios.
ExtremesReport verify_extremes(const ModulusProfile& profile, const WeightedMultigraph& g, Exec exec = Exec::parallel);

}  // namespace matroid_forge
