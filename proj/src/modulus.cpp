#include "matroid_forge/modulus.hpp"

#include <optional>

#include "matroid_forge/errors.hpp"
#include "matroid_forge/ratio_solvers.hpp"

namespace matroid_forge {

ModulusProfile spanning_tree_modulus(const WeightedMultigraph& g, const DensestFinder& finder, Exec exec) {
  if (g.num_edges() == 0) throw InputError("modulus: graph has no edges");
  if (!g.is_connected()) throw InputError("modulus: graph is disconnected");

  const DensestFinder find_densest = finder ? finder : [exec](const WeightedMultigraph& h) {
    RatioWitness w = arboricity(h, exec);
    return DensestPiece{std::move(w.value), std::move(w.witness_vertices)};
  };

  ModulusProfile profile;
  std::vector<std::optional<Rational>> eta(g.num_edges());
  WeightedMultigraph current = g;
  while (current.num_vertices() > 1) {
    DensestPiece piece = find_densest(current);
    if (piece.vertices.size() < 2) throw ConsistencyError("modulus: densest piece has fewer than two vertices");
    PeelStep step;
    step.vertices = current.num_vertices();
    step.edges = current.num_edges();
    step.density = piece.density;
    for (auto e : current.induced_edges(piece.vertices)) {
      const Edge& edge = current.edge(e);
      eta[g.edge_index(edge.id)] = edge.weight / piece.density;
      step.subgraph_edges.push_back(edge.id);
    }
    if (step.subgraph_edges.empty()) throw ConsistencyError("modulus: peel assigned no edge");
    profile.peel_sequence.push_back(std::move(step));
    current = contract(current, piece.vertices);
  }

  Rational energy = 0;  // sum of eta^2 / sigma
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!eta[e]) throw ConsistencyError("modulus: edge '" + g.edge(e).id + "' never peeled");
    profile.eta.push_back(*eta[e]);
    energy += profile.eta.back() * profile.eta.back() / g.edge(e).weight;
  }
  profile.meo = energy;
  profile.mod2 = 1 / energy;
  std::vector<Rational> scaled;  // eta / sigma
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    profile.rho.push_back(profile.eta[e] * profile.mod2 / g.edge(e).weight);
    scaled.push_back(profile.eta[e] / g.edge(e).weight);
  }
  const Rational lo = *std::min_element(scaled.begin(), scaled.end());
  const Rational hi = *std::max_element(scaled.begin(), scaled.end());
  std::vector<std::size_t> mins;
  std::vector<std::size_t> maxs;
  for (std::size_t e = 0; e < scaled.size(); ++e) {
    if (scaled[e] == lo) mins.push_back(e);
    if (scaled[e] == hi) maxs.push_back(e);
  }
  profile.e_min = EdgeSet(std::move(mins));
  profile.e_max = EdgeSet(std::move(maxs));
  return profile;
}

std::vector<Rational> n_sigma(const WeightedMultigraph& g, std::span<const Rational> sigma) {
  if (sigma.size() != g.num_edges()) throw InputError("n_sigma: weight vector has the wrong length");
  const Rational total = sum(sigma);
  if (sgn(total) <= 0) throw InputError("n_sigma: total weight must be positive");
  const auto r = static_cast<unsigned long>(full_rank(g));
  std::vector<Rational> out;
  for (const auto& w : sigma) out.emplace_back(w * r / total);
  return out;
}

bool homogeneity_via_nsigma(const WeightedMultigraph& g, std::span<const Rational> sigma, Exec exec) {
  // n_sigma(X)/g(X) >= 1 for every X with g(X) > 0  <=>  sigma(X)/g(X) >= sigma(E)/f(E).
  const Rational threshold = sum(sigma) / static_cast<unsigned long>(full_rank(g));
  return strength(g, sigma, exec).value >= threshold;
}

ExtremesReport verify_extremes(const ModulusProfile& profile, const WeightedMultigraph& g, Exec exec) {
  ExtremesReport report;
  auto fail = [&](std::string message) {
    report.ok = false;
    report.failures.push_back(std::move(message));
  };
  if (profile.eta.size() != g.num_edges() || profile.e_min.empty() || profile.e_max.empty()) {
    fail("profile does not match the graph");
    return report;
  }
  const auto sigma = g.weights();
  const RatioWitness s = strength(g, sigma, exec);
  const RatioWitness d = arboricity(g, sigma, exec);
  const std::size_t some_max = *profile.e_max.begin();
  const std::size_t some_min = *profile.e_min.begin();
  const Rational hi = profile.eta[some_max] / sigma[some_max];
  const Rational lo = profile.eta[some_min] / sigma[some_min];

  if (1 / hi != s.value) fail("1/max(eta/sigma) = " + to_string(Rational(1 / hi)) + " but strength is " + to_string(s.value));
  if (1 / lo != d.value) fail("1/min(eta/sigma) = " + to_string(Rational(1 / lo)) + " but arboricity is " + to_string(d.value));

  const std::size_t drop = corank_g(g, profile.e_max);
  if (drop == 0 || weight_of(sigma, profile.e_max) / static_cast<unsigned long>(drop) != s.value) {
    fail("E_max does not achieve the strength ratio");
  }
  const std::size_t r = rank(g, profile.e_min);
  if (r == 0 || weight_of(sigma, profile.e_min) / static_cast<unsigned long>(r) != d.value) {
    fail("E_min does not achieve the arboricity ratio");
  }
  return report;
}

}  // namespace matroid_forge
