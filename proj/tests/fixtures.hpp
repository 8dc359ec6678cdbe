#pragma once

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <random>
#include <string>
#include <vector>

#include "matroid_forge/graph.hpp"

namespace fixtures {

using matroid_forge::Edge;
using matroid_forge::Rational;
using matroid_forge::WeightedMultigraph;

inline std::string padded(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "e%02zu", i);
  return buf;
}

inline WeightedMultigraph make(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                               const std::vector<Rational>& weights = {}) {
  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < n; ++v) vertices.push_back("v" + std::to_string(v));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    edges.push_back(Edge{padded(i), pairs[i].first, pairs[i].second, weights.empty() ? Rational(1) : weights[i]});
  }
  return WeightedMultigraph(std::move(vertices), std::move(edges));
}

inline WeightedMultigraph k3(const Rational& w = 1) { return make(3, {{0, 1}, {1, 2}, {0, 2}}, {w, w, w}); }

// Triangles {0,1,2} and {3,4,5} joined by the bridge 2-3, which is edge index 3.
constexpr std::size_t kBridge = 3;
inline WeightedMultigraph bowtie() { return make(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}}); }

inline WeightedMultigraph single_edge(const Rational& w = 1) { return make(2, {{0, 1}}, {w}); }

inline WeightedMultigraph path(std::size_t edges) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < edges; ++i) pairs.emplace_back(i, i + 1);
  return make(edges + 1, pairs);
}

struct CorpusConfig {
  unsigned long long seed = 1;
  std::size_t count = 200;
  std::size_t max_vertices = 6;
  std::size_t max_edges = 10;
  int max_weight = 5;
  int max_cost = 5;
};

inline CorpusConfig load_config() {
  CorpusConfig c;
  std::ifstream in(MF_CORPUS_CONFIG);
  if (!in) return c;
  const auto doc = nlohmann::json::parse(in);
  c.seed = doc.value("seed", c.seed);
  c.count = doc.value("count", c.count);
  c.max_vertices = doc.value("max_vertices", c.max_vertices);
  c.max_edges = doc.value("max_edges", c.max_edges);
  c.max_weight = doc.value("max_weight", c.max_weight);
  c.max_cost = doc.value("max_cost", c.max_cost);
  return c;
}

struct Instance {
  WeightedMultigraph graph;  // weights are sigma
  std::vector<Rational> sigma;
  std::vector<Rational> costs;
};

/// Connected loopless multigraph: a random spanning tree plus random extra edges.
inline Instance random_instance(std::mt19937_64& rng, const CorpusConfig& c) {
  auto pick = [&rng](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  const std::size_t n = pick(2, c.max_vertices);
  const std::size_t m = pick(n - 1, c.max_edges);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t v = 1; v < n; ++v) pairs.emplace_back(pick(0, v - 1), v);
  while (pairs.size() < m) {
    const std::size_t a = pick(0, n - 1);
    const std::size_t b = pick(0, n - 1);
    if (a != b) pairs.emplace_back(a, b);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  Instance inst;
  for (std::size_t i = 0; i < m; ++i) {
    inst.sigma.emplace_back(static_cast<long>(pick(1, c.max_weight)));
    inst.costs.emplace_back(static_cast<long>(pick(1, c.max_cost)));
  }
  inst.graph = make(n, pairs, inst.sigma);
  return inst;
}

inline std::vector<Instance> corpus(const CorpusConfig& c = load_config()) {
  std::mt19937_64 rng(c.seed);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < c.count; ++i) out.push_back(random_instance(rng, c));
  return out;
}

/// gmpxx leaves two-argument construction unreduced; arithmetic requires canonical form.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline std::vector<Rational> ones(std::size_t n) { return std::vector<Rational>(n, Rational(1)); }

}  // namespace fixtures
