#pragma once

#include <span>

#include "matroid_forge/execution.hpp"
#include "matroid_forge/graph.hpp"
#include "matroid_forge/mincut.hpp"

namespace matroid_forge {

/// Network on V + {r, s}: graph edges carry x(e)/2, v-s links carry 1 and v-r links
/// carry x(delta(v))/2. Vertex r is index |V|, s is |V|+1. For A within V the cut
/// A + {r} has value x(E) - x(E_A) + |A|.
CapNetwork build_violation_network(const WeightedMultigraph& g, std::span<const Rational> x);

struct VertexWitness {
  Rational value;
  VertexSet vertices;
};

struct EdgeWitness {
  Rational value;
  EdgeSet edges;
};

/// min{(|B|-1) - x(E_B) : B nonempty}, one min cut per forced vertex.
VertexWitness most_violated(const WeightedMultigraph& g, std::span<const Rational> x,
                            Exec exec = Exec::parallel);

/// g(b) = min{b(|B|-1) - sigma(E_B) : |B| >= 2}, valid when b does not exceed the
/// fractional arboricity (so the value is nonpositive).
VertexWitness eval_g(const WeightedMultigraph& g, std::span<const Rational> sigma, const Rational& b,
                     Exec exec = Exec::parallel);

/// min{alpha f(A) - x(A) : j in A}, one min cut with j's endpoints tied to r.
/// Requires x in alpha P_f; the witness is E_B for a connected B spanning j.
EdgeWitness reinforcement_oracle(const WeightedMultigraph& g, std::span<const Rational> x, std::size_t j,
                                 const Rational& alpha);

/// min{lambda f(B) - y(B) : B subset of E}. The witness is a union of E_W over
/// disjoint connected vertex sets W, each contributing a strictly negative amount.
EdgeWitness attack_oracle(const WeightedMultigraph& g, std::span<const Rational> y, const Rational& lambda,
                          Exec exec = Exec::parallel);

/// min{x(A) - beta g(A) : j in A}, through the attack problem on G - j.
/// Requires x in beta Q_g.
EdgeWitness sparsification_oracle(const WeightedMultigraph& g, std::span<const Rational> x, std::size_t j,
                                  const Rational& beta, Exec exec = Exec::parallel);

}  // namespace matroid_forge
