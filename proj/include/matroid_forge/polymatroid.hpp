#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "matroid_forge/graph.hpp"
#include "matroid_forge/rational.hpp"

namespace matroid_forge::poly {

using Mask = std::uint64_t;
using Vector = std::vector<Rational>;

/// Set function on a ground set of at most 20 elements, tabulated on construction.
class SetFunction {
 public:
  static constexpr std::size_t kMaxGround = 20;

  SetFunction(std::size_t ground_size, const std::function<Rational(Mask)>& evaluate);

  std::size_t ground_size() const { return n_; }
  Mask full() const { return (Mask{1} << n_) - 1; }
  const Rational& operator()(Mask a) const { return table_[a]; }

  bool is_normalized() const;
  bool is_nondecreasing() const;
  bool is_submodular() const;
  bool is_supermodular() const;
  bool is_polymatroid_function() const { return is_normalized() && is_nondecreasing() && is_submodular(); }

 private:
  std::size_t n_;
  std::vector<Rational> table_;
};

/// Graphic-matroid rank of the edge set of `g` as a set function.
SetFunction graphic_rank(const WeightedMultigraph& g);

/// g(U) = f(E) - f(E \ U).
SetFunction dual_supermodular(const SetFunction& f);

/// h(A) = -f(E) + f(E \ A) + c|A|, the polymatroid function of the translated contrapolymatroid.
SetFunction translated(const SetFunction& f, const Rational& c);

enum class Region {
  P,  // x >= 0, x(A) <= h f(A)
  B,  // P plus x(E) = h f(E)
  Q,  // x >= 0, x(A) >= h g(A), with g the dual of f
  C,  // Q plus x(E) = h g(E)
};

/// Exact membership of x in h * region, by checking every subset.
bool membership(std::span<const Rational> x, const Rational& h, Region region, const SetFunction& f);

/// Membership in Q_{g,c} = {x <= c, x(A) >= g(A)} (or its face C_{g,c} when `face`).
bool in_capped_contrapolymatroid(std::span<const Rational> x, const SetFunction& f, const Rational& c, bool face);

struct Levels {
  Rational alpha;  // min{h : x in hP_f}
  Rational beta;   // max{h : x in hQ_g}
};

Levels alpha_beta(std::span<const Rational> x, const SetFunction& f);

/// Greedy saturation in the given order: y_j grows as far as y <= x and y in P_f allow.
Vector p_basis(std::span<const Rational> x, const SetFunction& f, std::span<const std::size_t> order);
Vector p_basis(std::span<const Rational> x, const SetFunction& f);

/// Greedy P-basis of x, saturating in nondecreasing m order (ties by index).
Vector greedy_min_cost_base(std::span<const Rational> x, std::span<const Rational> m, const SetFunction& f);

std::vector<std::size_t> cost_order(std::span<const Rational> m);

/// Reinforcement at level h >= alpha: minimum-cost z with s + z in h B_f.
Vector generic_reinforce_at(std::span<const Rational> s, std::span<const Rational> m, const SetFunction& f,
                            const Rational& h);
/// Sparsification at level 0 < h <= beta: minimum-cost z with s - z in h C_g.
Vector generic_sparsify_at(std::span<const Rational> s, std::span<const Rational> m, const SetFunction& f,
                           const Rational& h);

Vector generic_reinforce(std::span<const Rational> s, std::span<const Rational> m, const SetFunction& f);
Vector generic_sparsify(std::span<const Rational> s, std::span<const Rational> m, const SetFunction& f);

/// Vertices of B_f: greedy base for every permutation of the ground set (at most 8 elements).
std::vector<Vector> base_vertices(const SetFunction& f);

}  // namespace matroid_forge::poly
