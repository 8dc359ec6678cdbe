#pragma once

#include <cstddef>
#include <vector>

#include "matroid_forge/graph.hpp"
#include "matroid_forge/rational.hpp"

namespace matroid_forge {

/// Undirected capacitated network with a distinguished source and sink.
class CapNetwork {
 public:
  struct Link {
    std::size_t a;
    std::size_t b;
    Capacity capacity;
  };

  CapNetwork(std::size_t num_vertices, std::size_t source, std::size_t sink);

  /// Adds an undirected edge; throws InputError on a negative capacity or bad endpoint.
  std::size_t add_edge(std::size_t a, std::size_t b, Capacity capacity);
  void set_capacity(std::size_t link, Capacity capacity);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t source() const { return source_; }
  std::size_t sink() const { return sink_; }
  const std::vector<Link>& links() const { return links_; }

  /// Summed capacity of the links crossing (side, complement).
  Capacity cut_value(const VertexSet& side) const;

 private:
  std::size_t num_vertices_;
  std::size_t source_;
  std::size_t sink_;
  std::vector<Link> links_;
};

struct CutResult {
  Capacity value;
  /// Vertices reachable from the source in the final residual graph: the unique
  /// inclusion-minimal source side among all minimum cuts. Empty when value is +inf.
  VertexSet source_side;
};

/// Exact minimum source-sink cut. Capacities are scaled to a common denominator and
/// the flow runs in machine integers when they fit, arbitrary precision otherwise.
CutResult min_rs_cut(const CapNetwork& net);

}  // namespace matroid_forge
