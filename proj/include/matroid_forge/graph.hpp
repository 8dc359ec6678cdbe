#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "matroid_forge/rational.hpp"

namespace matroid_forge {

/// Sorted, duplicate-free collection of indices. Tag keeps edge and vertex sets apart.
template <class Tag>
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<std::size_t> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }
  IndexSet(std::initializer_list<std::size_t> items) : IndexSet(std::vector<std::size_t>(items)) {}

  static IndexSet from_mask(std::uint64_t mask) {
    std::vector<std::size_t> items;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
      if (mask & 1U) items.push_back(i);
    }
    return IndexSet(std::move(items));
  }
  static IndexSet range(std::size_t n) {
    std::vector<std::size_t> items(n);
    std::iota(items.begin(), items.end(), std::size_t{0});
    return IndexSet(std::move(items));
  }

  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (auto i : items_) m |= std::uint64_t{1} << i;
    return m;
  }

  bool contains(std::size_t i) const { return std::binary_search(items_.begin(), items_.end(), i); }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<std::size_t>& items() const { return items_; }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> items_;
};

struct EdgeTag {};
struct VertexTag {};
using EdgeSet = IndexSet<EdgeTag>;
using VertexSet = IndexSet<VertexTag>;

struct Edge {
  std::string id;
  std::size_t u = 0;
  std::size_t v = 0;
  Rational weight{1};
};

/// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    return true;
  }
  std::size_t components() const { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t components_;
};

/// Loopless undirected multigraph with strictly positive rational edge weights.
/// Immutable after construction; edits return new graphs. Edge ids survive
/// deletion and contraction so results map back to the input.
class WeightedMultigraph {
 public:
  WeightedMultigraph() = default;
  /// Throws InputError on self-loops, unknown endpoints, duplicate ids or nonpositive weights.
  WeightedMultigraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }

  std::vector<Rational> weights() const;
  std::optional<std::size_t> find_edge(const std::string& id) const;
  std::optional<std::size_t> find_vertex(const std::string& name) const;
  std::size_t edge_index(const std::string& id) const;  // throws InputError

  EdgeSet all_edges() const { return EdgeSet::range(edges_.size()); }
  VertexSet all_vertices() const { return VertexSet::range(vertices_.size()); }

  /// Edges with both endpoints in `vertices` (E_B).
  EdgeSet induced_edges(const VertexSet& vertices) const;
  /// Endpoints touched by `edges` (V(A)).
  VertexSet touched_vertices(const EdgeSet& edges) const;
  bool is_connected() const;

  /// Same graph with replacement weights (all strictly positive).
  WeightedMultigraph with_weights(std::span<const Rational> weights) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> edge_lookup_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
};

std::vector<std::string> edge_ids(const WeightedMultigraph& g, const EdgeSet& edges);
std::vector<std::string> vertex_names(const WeightedMultigraph& g, const VertexSet& vertices);

Rational weight_of(std::span<const Rational> x, const EdgeSet& edges);

/// Graphic-matroid rank: |V(A)| minus the number of components of (V(A), A).
std::size_t rank(const WeightedMultigraph& g, const EdgeSet& edges);
/// Rank of a bitmask subset; hot path for exhaustive enumeration.
std::size_t rank_of_mask(const WeightedMultigraph& g, std::uint64_t mask);
std::size_t full_rank(const WeightedMultigraph& g);

/// g(U) = f(E) - f(E \ U).
std::size_t corank_g(const WeightedMultigraph& g, const EdgeSet& edges);

WeightedMultigraph delete_edges(const WeightedMultigraph& g, const EdgeSet& edges);

/// Merges `w` (which must induce a connected subgraph) into its first vertex.
/// Edges inside `w` vanish; edges leaving it keep id and weight.
WeightedMultigraph contract(const WeightedMultigraph& g, const VertexSet& w);

EdgeSet closure(const WeightedMultigraph& g, const EdgeSet& edges);

/// Replaces each edge of integer weight k by k unit-weight parallel copies "id#1".."id#k".
WeightedMultigraph parallel_extension(const WeightedMultigraph& g);

/// All spanning trees (bases of the graphic matroid). Refuses graphs above `max_edges`.
std::vector<EdgeSet> enumerate_spanning_trees(const WeightedMultigraph& g, std::size_t max_edges = 16);

/// Vertex sets of the connected components of the subgraph (vertices, E_vertices).
std::vector<VertexSet> induced_components(const WeightedMultigraph& g, const VertexSet& vertices);

}  // namespace matroid_forge
