#pragma once

// Independent LP and random-instance oracles for the polymatroid layer.

#include <optional>
#include <random>

#include "fixtures.hpp"
#include "matroid_forge/exact_simplex.hpp"
#include "matroid_forge/polymatroid.hpp"

namespace poly_oracles {

using matroid_forge::Rational;
using matroid_forge::poly::Mask;
using matroid_forge::poly::SetFunction;
using matroid_forge::poly::Vector;

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i] * b[i];
  return t;
}

// k * (graphic rank) + nonnegative modular part.
inline SetFunction random_graphic_polymatroid(std::mt19937_64& rng, std::size_t max_ground) {
  fixtures::CorpusConfig cfg;
  cfg.max_vertices = 4;
  cfg.max_edges = max_ground;
  const auto g = fixtures::random_instance(rng, cfg).graph;
  const long k = 1 + static_cast<long>(rng() % 3);
  std::vector<long> w(g.num_edges());
  for (auto& v : w) v = static_cast<long>(rng() % 3);
  return SetFunction(g.num_edges(), [&](Mask a) {
    Rational value = k * static_cast<long>(matroid_forge::rank_of_mask(g, a));
    for (std::size_t e = 0; e < w.size(); ++e) {
      if (a >> e & 1U) value += w[e];
    }
    return value;
  });
}

// Weighted coverage: element e covers a random subset of six weighted points.
inline SetFunction random_coverage_polymatroid(std::mt19937_64& rng, std::size_t ground) {
  constexpr std::size_t kPoints = 6;
  std::vector<Mask> covers(ground);
  for (auto& c : covers) c = 1 + rng() % ((Mask{1} << kPoints) - 1);  // no loops
  std::vector<Rational> weight(kPoints);
  for (auto& w : weight) w = fixtures::frac(static_cast<long>(1 + rng() % 6), static_cast<long>(1 + rng() % 3));
  return SetFunction(ground, [&](Mask a) {
    Mask covered = 0;
    for (std::size_t e = 0; e < ground; ++e) {
      if (a >> e & 1U) covered |= covers[e];
    }
    Rational value = 0;
    for (std::size_t p = 0; p < kPoints; ++p) {
      if (covered >> p & 1U) value += weight[p];
    }
    return value;
  });
}

inline SetFunction random_polymatroid(std::mt19937_64& rng, std::size_t max_ground) {
  if (rng() % 2 == 0) return random_graphic_polymatroid(rng, max_ground);
  return random_coverage_polymatroid(rng, 1 + rng() % max_ground);
}

inline Vector random_point(std::mt19937_64& rng, std::size_t n, long top) {
  Vector x(n);
  for (auto& v : x) v = fixtures::frac(static_cast<long>(rng() % (2 * top + 1)), 2);
  return x;
}

// min m.z over columns mu_i (sum 1) of the vertices of h B_f and z >= 0 with
// h sum mu_i v_i - sign z = s (sign +1 reinforces, -1 sparsifies); nullopt when infeasible.
inline std::optional<Rational> lp_over_vertices(std::span<const Rational> s, std::span<const Rational> m,
                                                const SetFunction& f, const Rational& h, int sign) {
  const auto verts = matroid_forge::poly::base_vertices(f);
  const std::size_t n = f.ground_size();
  const std::size_t k = verts.size();
  std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(k + n, Rational(0)));
  std::vector<Rational> c(k + n, Rational(0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t e = 0; e < n; ++e) a[e][i] = h * verts[i][e];
    a[n][i] = 1;
  }
  for (std::size_t e = 0; e < n; ++e) {
    a[e][k + e] = -sign;
    c[k + e] = m[e];
  }
  std::vector<Rational> b(s.begin(), s.end());
  b.emplace_back(1);
  const auto sol = matroid_forge::solve_standard_lp(a, b, c);
  if (!sol) return std::nullopt;
  return sol->objective;
}

// x in B_f - R^n_{>=0}: some convex combination of base vertices dominates x.
inline bool dominated_by_base(std::span<const Rational> x, const SetFunction& f) {
  const auto verts = matroid_forge::poly::base_vertices(f);
  const std::size_t n = f.ground_size();
  std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(verts.size() + n, Rational(0)));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t e = 0; e < n; ++e) a[e][i] = verts[i][e];
    a[n][i] = 1;
  }
  for (std::size_t e = 0; e < n; ++e) a[e][verts.size() + e] = -1;
  std::vector<Rational> b(x.begin(), x.end());
  b.emplace_back(1);
  return matroid_forge::solve_standard_lp(a, b, std::vector<Rational>(verts.size() + n, Rational(0))).has_value();
}

}  // namespace poly_oracles
