#include "matroid_forge/mincut.hpp"

#include <limits>
#include <optional>
#include <queue>

#include "matroid_forge/errors.hpp"

namespace matroid_forge {

CapNetwork::CapNetwork(std::size_t num_vertices, std::size_t source, std::size_t sink)
    : num_vertices_(num_vertices), source_(source), sink_(sink) {
  if (source >= num_vertices || sink >= num_vertices) throw InputError("terminal out of range");
  if (source == sink) throw InputError("source and sink coincide");
}

std::size_t CapNetwork::add_edge(std::size_t a, std::size_t b, Capacity capacity) {
  if (a >= num_vertices_ || b >= num_vertices_) throw InputError("network endpoint out of range");
  if (!capacity.is_infinite() && sgn(capacity.value()) < 0) throw InputError("negative capacity");
  links_.push_back(Link{a, b, std::move(capacity)});
  return links_.size() - 1;
}

void CapNetwork::set_capacity(std::size_t link, Capacity capacity) {
  if (!capacity.is_infinite() && sgn(capacity.value()) < 0) throw InputError("negative capacity");
  links_.at(link).capacity = std::move(capacity);
}

Capacity CapNetwork::cut_value(const VertexSet& side) const {
  Capacity total;
  for (const auto& l : links_) {
    if (side.contains(l.a) != side.contains(l.b)) total += l.capacity;
  }
  return total;
}

namespace {

/// Dinic's algorithm on integer capacities. Infinite arcs stay infinite in both
/// directions and never bound an augmentation.
template <class Int>
class Dinic {
 public:
  struct Arc {
    std::size_t to;
    Int residual;
    bool infinite;
  };

  explicit Dinic(std::size_t n) : adjacency_(n), level_(n), cursor_(n) {}

  void add_undirected(std::size_t a, std::size_t b, const Int& cap, bool infinite) {
    adjacency_[a].push_back(arcs_.size());
    arcs_.push_back(Arc{b, cap, infinite});
    adjacency_[b].push_back(arcs_.size());
    arcs_.push_back(Arc{a, cap, infinite});
  }

  bool open(const Arc& arc) const { return arc.infinite || arc.residual > 0; }

  /// Returns false when the sink is reachable through infinite arcs alone.
  bool has_finite_cut(std::size_t s, std::size_t t) const {
    std::vector<char> seen(adjacency_.size(), 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      if (v == t) return false;
      for (auto a : adjacency_[v]) {
        if (arcs_[a].infinite && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return true;
  }

  void run(std::size_t s, std::size_t t) {
    while (build_levels(s, t)) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      while (true) {
        Int pushed = augment(s, t, std::nullopt);
        if (pushed == 0) break;
      }
    }
  }

  std::vector<std::size_t> reachable(std::size_t s) const {
    std::vector<char> seen(adjacency_.size(), 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (auto a : adjacency_[v]) {
        if (open(arcs_[a]) && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < seen.size(); ++v) {
      if (seen[v]) out.push_back(v);
    }
    return out;
  }

 private:
  bool build_levels(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> queue;
    level_[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop();
      for (auto a : adjacency_[v]) {
        const Arc& arc = arcs_[a];
        if (open(arc) && level_[arc.to] < 0) {
          level_[arc.to] = level_[v] + 1;
          queue.push(arc.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  // `limit` empty means unbounded. Every s-t path carries a finite arc, so the
  // value returned at the sink is always finite.
  Int augment(std::size_t v, std::size_t t, const std::optional<Int>& limit) {
    if (v == t) return limit ? *limit : Int(0);
    for (std::size_t& i = cursor_[v]; i < adjacency_[v].size(); ++i) {
      const std::size_t a = adjacency_[v][i];
      Arc& arc = arcs_[a];
      if (!open(arc) || level_[arc.to] != level_[v] + 1) continue;
      Int pushed = arc.infinite ? augment(arc.to, t, limit)
                                : augment(arc.to, t, limit && *limit < arc.residual ? *limit : arc.residual);
      if (pushed > 0) {
        if (!arc.infinite) {
          arc.residual -= pushed;
          arcs_[a ^ 1].residual += pushed;
        }
        return pushed;
      }
    }
    return Int(0);
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

template <class Int, class Convert>
std::vector<std::size_t> solve_scaled(const CapNetwork& net, const std::vector<mpz_class>& scaled,
                                      Convert convert) {
  Dinic<Int> flow(net.num_vertices());
  for (std::size_t i = 0; i < net.links().size(); ++i) {
    const auto& link = net.links()[i];
    flow.add_undirected(link.a, link.b, convert(scaled[i]), link.capacity.is_infinite());
  }
  flow.run(net.source(), net.sink());
  return flow.reachable(net.source());
}

}  // namespace

CutResult min_rs_cut(const CapNetwork& net) {
  // Clear denominators so the flow runs on integers.
  mpz_class scale = 1;
  for (const auto& link : net.links()) {
    if (!link.capacity.is_infinite()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), link.capacity.value().get_den_mpz_t());
  }
  std::vector<mpz_class> scaled;
  scaled.reserve(net.links().size());
  mpz_class total = 0;
  for (const auto& link : net.links()) {
    if (link.capacity.is_infinite()) {
      scaled.emplace_back(0);
    } else {
      const Rational& c = link.capacity.value();
      scaled.emplace_back(c.get_num() * (scale / c.get_den()));
      total += scaled.back();
    }
  }

  {
    Dinic<long> probe(net.num_vertices());
    for (const auto& link : net.links()) probe.add_undirected(link.a, link.b, 0, link.capacity.is_infinite());
    if (!probe.has_finite_cut(net.source(), net.sink())) return CutResult{Capacity::infinite(), VertexSet{}};
  }

  std::vector<std::size_t> side;
  // Residuals never exceed twice the total finite capacity.
  if (total < mpz_class(std::numeric_limits<std::int64_t>::max() / 4)) {
    side = solve_scaled<std::int64_t>(net, scaled, [](const mpz_class& z) { return static_cast<std::int64_t>(z.get_si()); });
  } else {
    side = solve_scaled<mpz_class>(net, scaled, [](const mpz_class& z) { return z; });
  }
  VertexSet source_side(std::move(side));
  return CutResult{net.cut_value(source_side), std::move(source_side)};
}

}  // namespace matroid_forge
