#include "matroid_forge/ratio_solvers.hpp"

#include "matroid_forge/errors.hpp"
#include "matroid_forge/oracle_networks.hpp"

namespace matroid_forge {

namespace {

void validate(const WeightedMultigraph& g, std::span<const Rational> sigma, const char* what) {
  if (g.num_edges() == 0) throw InputError(std::string(what) + ": graph has no edges");
  if (!g.is_connected()) throw InputError(std::string(what) + ": graph is disconnected");
  if (sigma.size() != g.num_edges()) throw InputError(std::string(what) + ": weight vector has the wrong length");
  for (const auto& w : sigma) {
    if (sgn(w) < 0) throw InputError(std::string(what) + ": negative weight");
  }
  if (sgn(sum(sigma)) <= 0) throw InputError(std::string(what) + ": total weight is zero");
}

}  // namespace

RatioWitness arboricity(const WeightedMultigraph& g, std::span<const Rational> sigma, Exec exec) {
  validate(g, sigma, "arboricity");
  const std::size_t n = g.num_vertices();

  RatioWitness out;
  VertexSet best = g.all_vertices();
  Rational b = sum(sigma) / static_cast<unsigned long>(n - 1);
  std::size_t previous_size = n + 1;
  while (true) {
    ++out.iterations;
    if (out.iterations > n) throw ConsistencyError("arboricity: iteration bound |V| exceeded");
    VertexWitness gb = eval_g(g, sigma, b, exec);
    if (sgn(gb.value) > 0) throw ConsistencyError("arboricity: level exceeded the arboricity");
    if (sgn(gb.value) == 0) {
      out.trace.push_back(RatioStep{b, 0});
      break;
    }
    if (gb.vertices.size() < 2 || gb.vertices.size() >= previous_size) {
      throw ConsistencyError("arboricity: minimizer cardinality failed to decrease");
    }
    out.trace.push_back(RatioStep{b, gb.vertices.size()});
    previous_size = gb.vertices.size();
    best = std::move(gb.vertices);
    b = weight_of(sigma, g.induced_edges(best)) / static_cast<unsigned long>(best.size() - 1);
  }

  // Report the densest connected piece of the final set.
  std::optional<VertexSet> densest;
  Rational densest_ratio;
  for (auto& component : induced_components(g, best)) {
    if (component.size() < 2) continue;
    Rational ratio = weight_of(sigma, g.induced_edges(component)) / static_cast<unsigned long>(component.size() - 1);
    if (!densest || ratio > densest_ratio) {
      densest_ratio = ratio;
      densest = std::move(component);
    }
  }
  if (!densest || densest_ratio != b) throw ConsistencyError("arboricity: witness does not realise the value");
  out.value = std::move(b);
  out.witness_edges = g.induced_edges(*densest);
  out.witness_vertices = std::move(*densest);
  return out;
}

RatioWitness arboricity(const WeightedMultigraph& g, Exec exec) {
  const auto w = g.weights();
  return arboricity(g, w, exec);
}

RatioWitness strength(const WeightedMultigraph& g, std::span<const Rational> sigma, Exec exec) {
  validate(g, sigma, "strength");
  const std::size_t rank_e = full_rank(g);
  const Rational total = sum(sigma);

  RatioWitness out;
  EdgeSet best = g.all_edges();
  Rational b = total / static_cast<unsigned long>(rank_e);
  std::size_t previous_drop = rank_e;
  while (true) {
    ++out.iterations;
    if (out.iterations > rank_e) throw ConsistencyError("strength: iteration bound f(E) exceeded");
    // a(b) = min_X sigma(X) - b g(X) = sigma(E) - b f(E) + min_B (b f(B) - sigma(B)), X = E - B.
    const EdgeWitness attack = attack_oracle(g, sigma, b, exec);
    const Rational a = total - b * static_cast<unsigned long>(rank_e) + attack.value;
    if (sgn(a) > 0) throw ConsistencyError("strength: descent value is positive");
    if (sgn(a) == 0) {
      out.trace.push_back(RatioStep{b, 0});
      break;
    }
    std::vector<std::size_t> complement;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      if (!attack.edges.contains(e)) complement.push_back(e);
    }
    EdgeSet x(std::move(complement));
    const std::size_t drop = rank_e - rank(g, attack.edges);
    if (drop == 0 || drop >= previous_drop) throw ConsistencyError("strength: rank drop failed to decrease");
    out.trace.push_back(RatioStep{b, drop});
    previous_drop = drop;
    b = weight_of(sigma, x) / static_cast<unsigned long>(drop);
    best = std::move(x);
  }
  out.value = std::move(b);
  out.witness_edges = std::move(best);
  return out;
}

RatioWitness strength(const WeightedMultigraph& g, Exec exec) {
  const auto w = g.weights();
  return strength(g, w, exec);
}

Homogeneity is_homogeneous(const WeightedMultigraph& g, std::span<const Rational> sigma, Exec exec) {
  Homogeneity h;
  h.alpha = arboricity(g, sigma, exec).value;
  h.beta = strength(g, sigma, exec).value;
  h.homogeneous = h.alpha == h.beta;
  return h;
}

Homogeneity is_homogeneous(const WeightedMultigraph& g, Exec exec) {
  const auto w = g.weights();
  return is_homogeneous(g, w, exec);
}

}  // namespace matroid_forge
