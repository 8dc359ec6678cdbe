#include "matroid_forge/graph.hpp"

#include <functional>

#include "matroid_forge/errors.hpp"

namespace matroid_forge {

WeightedMultigraph::WeightedMultigraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_lookup_.emplace(vertices_[i], i).second) {
      throw InputError("duplicate vertex '" + vertices_[i] + "'");
    }
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= vertices_.size() || e.v >= vertices_.size()) {
      throw InputError("edge '" + e.id + "' has an unknown endpoint");
    }
    if (e.u == e.v) throw InputError("edge '" + e.id + "' is a self-loop");
    if (sgn(e.weight) <= 0) throw InputError("edge '" + e.id + "' has nonpositive weight");
    if (!edge_lookup_.emplace(e.id, i).second) throw InputError("duplicate edge id '" + e.id + "'");
  }
}

std::vector<Rational> WeightedMultigraph::weights() const {
  std::vector<Rational> w;
  w.reserve(edges_.size());
  for (const auto& e : edges_) w.push_back(e.weight);
  return w;
}

std::optional<std::size_t> WeightedMultigraph::find_edge(const std::string& id) const {
  auto it = edge_lookup_.find(id);
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> WeightedMultigraph::find_vertex(const std::string& name) const {
  auto it = vertex_lookup_.find(name);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeightedMultigraph::edge_index(const std::string& id) const {
  if (auto e = find_edge(id)) return *e;
  throw InputError("unknown edge id '" + id + "'");
}

EdgeSet WeightedMultigraph::induced_edges(const VertexSet& vertices) const {
  std::vector<char> in(vertices_.size(), 0);
  for (auto v : vertices) in.at(v) = 1;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (in[edges_[i].u] && in[edges_[i].v]) out.push_back(i);
  }
  return EdgeSet(std::move(out));
}

VertexSet WeightedMultigraph::touched_vertices(const EdgeSet& edges) const {
  std::vector<std::size_t> out;
  for (auto e : edges) {
    out.push_back(edges_.at(e).u);
    out.push_back(edges_.at(e).v);
  }
  return VertexSet(std::move(out));
}

bool WeightedMultigraph::is_connected() const {
  if (vertices_.empty()) return true;
  DisjointSets dsu(vertices_.size());
  for (const auto& e : edges_) dsu.unite(e.u, e.v);
  return dsu.components() == 1;
}

WeightedMultigraph WeightedMultigraph::with_weights(std::span<const Rational> weights) const {
  if (weights.size() != edges_.size()) throw InputError("weight vector has the wrong length");
  std::vector<Edge> edges = edges_;
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].weight = weights[i];
  return WeightedMultigraph(vertices_, std::move(edges));
}

std::vector<std::string> edge_ids(const WeightedMultigraph& g, const EdgeSet& edges) {
  std::vector<std::string> out;
  for (auto e : edges) out.push_back(g.edge(e).id);
  return out;
}

std::vector<std::string> vertex_names(const WeightedMultigraph& g, const VertexSet& vertices) {
  std::vector<std::string> out;
  for (auto v : vertices) out.push_back(g.vertices().at(v));
  return out;
}

Rational weight_of(std::span<const Rational> x, const EdgeSet& edges) {
  Rational total = 0;
  for (auto e : edges) total += x[e];
  return total;
}

namespace {

void check_ids(const WeightedMultigraph& g, const EdgeSet& edges) {
  if (!edges.empty() && edges.items().back() >= g.num_edges()) {
    throw InputError("edge index " + std::to_string(edges.items().back()) + " out of range");
  }
}

}  // namespace

std::size_t rank(const WeightedMultigraph& g, const EdgeSet& edges) {
  check_ids(g, edges);
  DisjointSets dsu(g.num_vertices());
  std::size_t r = 0;
  for (auto e : edges) r += dsu.unite(g.edge(e).u, g.edge(e).v) ? 1 : 0;
  return r;
}

std::size_t rank_of_mask(const WeightedMultigraph& g, std::uint64_t mask) {
  DisjointSets dsu(g.num_vertices());
  std::size_t r = 0;
  for (std::size_t e = 0; mask != 0; ++e, mask >>= 1) {
    if (mask & 1U) r += dsu.unite(g.edge(e).u, g.edge(e).v) ? 1 : 0;
  }
  return r;
}

std::size_t full_rank(const WeightedMultigraph& g) { return rank(g, g.all_edges()); }

std::size_t corank_g(const WeightedMultigraph& g, const EdgeSet& edges) {
  check_ids(g, edges);
  std::vector<std::size_t> rest;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!edges.contains(e)) rest.push_back(e);
  }
  return full_rank(g) - rank(g, EdgeSet(std::move(rest)));
}

WeightedMultigraph delete_edges(const WeightedMultigraph& g, const EdgeSet& edges) {
  check_ids(g, edges);
  std::vector<Edge> kept;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!edges.contains(e)) kept.push_back(g.edge(e));
  }
  return WeightedMultigraph(g.vertices(), std::move(kept));
}

WeightedMultigraph contract(const WeightedMultigraph& g, const VertexSet& w) {
  if (w.empty()) throw InputError("cannot contract an empty vertex set");
  if (w.items().back() >= g.num_vertices()) throw InputError("vertex index out of range");
  if (induced_components(g, w).size() != 1) {
    throw InputError("contracted vertex set does not induce a connected subgraph");
  }
  const std::size_t representative = *w.begin();
  std::vector<std::size_t> new_index(g.num_vertices());
  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (w.contains(v) && v != representative) continue;
    new_index[v] = vertices.size();
    vertices.push_back(g.vertices()[v]);
  }
  for (auto v : w) new_index[v] = new_index[representative];

  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (w.contains(e.u) && w.contains(e.v)) continue;
    Edge moved = e;
    moved.u = new_index[e.u];
    moved.v = new_index[e.v];
    edges.push_back(std::move(moved));
  }
  return WeightedMultigraph(std::move(vertices), std::move(edges));
}

EdgeSet closure(const WeightedMultigraph& g, const EdgeSet& edges) {
  check_ids(g, edges);
  DisjointSets dsu(g.num_vertices());
  for (auto e : edges) dsu.unite(g.edge(e).u, g.edge(e).v);
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (dsu.find(g.edge(e).u) == dsu.find(g.edge(e).v)) out.push_back(e);
  }
  return EdgeSet(std::move(out));
}

WeightedMultigraph parallel_extension(const WeightedMultigraph& g) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (e.weight.get_den() != 1) throw InputError("edge '" + e.id + "' has a non-integer weight");
    const unsigned long copies = e.weight.get_num().get_ui();
    for (unsigned long k = 1; k <= copies; ++k) {
      edges.push_back(Edge{e.id + "#" + std::to_string(k), e.u, e.v, Rational(1)});
    }
  }
  return WeightedMultigraph(g.vertices(), std::move(edges));
}

std::vector<EdgeSet> enumerate_spanning_trees(const WeightedMultigraph& g, std::size_t max_edges) {
  if (g.num_edges() > max_edges) {
    throw BoundExceeded("spanning-tree enumeration refused: " + std::to_string(g.num_edges()) +
                        " edges exceeds bound " + std::to_string(max_edges));
  }
  if (!g.is_connected()) throw InputError("spanning trees requested for a disconnected graph");
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  const std::size_t target = n == 0 ? 0 : n - 1;

  std::vector<EdgeSet> trees;
  std::vector<std::size_t> chosen;
  // Branch on each edge in order; the DSU is rebuilt per leaf-check since m is small.
  std::function<void(std::size_t)> recurse = [&](std::size_t next) {
    if (chosen.size() == target) {
      trees.emplace_back(chosen);
      return;
    }
    if (m - next < target - chosen.size()) return;
    chosen.push_back(next);
    if (rank(g, EdgeSet(chosen)) == chosen.size()) recurse(next + 1);
    chosen.pop_back();
    recurse(next + 1);
  };
  recurse(0);
  return trees;
}

std::vector<VertexSet> induced_components(const WeightedMultigraph& g, const VertexSet& vertices) {
  DisjointSets dsu(g.num_vertices());
  for (auto e : g.induced_edges(vertices)) dsu.unite(g.edge(e).u, g.edge(e).v);
  std::vector<std::vector<std::size_t>> groups;
  std::unordered_map<std::size_t, std::size_t> slot;
  for (auto v : vertices) {
    auto [it, fresh] = slot.emplace(dsu.find(v), groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(v);
  }
  std::vector<VertexSet> out;
  for (auto& grp : groups) out.emplace_back(std::move(grp));
  return out;
}

}  // namespace matroid_forge
