#include "matroid_forge/oracle_networks.hpp"

#include <exception>
#include <algorithm>
#include <optional>

#include "matroid_forge/errors.hpp"

namespace matroid_forge {

namespace {

void require_nonnegative(std::span<const Rational> x, std::size_t m, const char* what) {
  if (x.size() != m) throw InputError(std::string(what) + ": vector length does not match edge count");
  for (const auto& v : x) {
    if (sgn(v) < 0) throw InputError(std::string(what) + ": negative entry");
  }
}

/// Lightweight view of a (possibly contracted) graph with arbitrary nonnegative weights.
struct Skeleton {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  std::vector<Rational> x;
};

// Link layout: graph edges [0, m), v-s links [m, m+n), v-r links [m+n, m+2n).
CapNetwork violation_network(const Skeleton& s) {
  const std::size_t r = s.n;
  const std::size_t t = s.n + 1;
  CapNetwork net(s.n + 2, r, t);
  std::vector<Rational> incident(s.n, 0);
  for (std::size_t e = 0; e < s.ends.size(); ++e) {
    const auto [u, v] = s.ends[e];
    net.add_edge(u, v, Capacity(Rational(s.x[e] / 2)));
    incident[u] += s.x[e];
    incident[v] += s.x[e];
  }
  for (std::size_t v = 0; v < s.n; ++v) net.add_edge(v, t, Capacity(1));
  for (std::size_t v = 0; v < s.n; ++v) net.add_edge(v, r, Capacity(Rational(incident[v] / 2)));
  return net;
}

std::size_t root_link(const Skeleton& s, std::size_t v) { return s.ends.size() + s.n + v; }

Skeleton skeleton_of(const WeightedMultigraph& g, std::span<const Rational> x) {
  Skeleton s;
  s.n = g.num_vertices();
  for (const auto& e : g.edges()) s.ends.emplace_back(e.u, e.v);
  s.x.assign(x.begin(), x.end());
  return s;
}

/// min{(|W|-1) - x(E_W) : W contains all of `forced`} and the minimal such W.
VertexWitness forced_cut(const Skeleton& s, CapNetwork net, std::initializer_list<std::size_t> forced,
                         const Rational& x_total) {
  for (auto v : forced) net.set_capacity(root_link(s, v), Capacity::infinite());
  CutResult cut = min_rs_cut(net);
  if (cut.value.is_infinite()) throw ConsistencyError("violation network has no finite cut");
  std::vector<std::size_t> side;
  for (auto v : cut.source_side) {
    if (v < s.n) side.push_back(v);
  }
  return VertexWitness{cut.value.value() - x_total - 1, VertexSet(std::move(side))};
}

/// Runs `task(i)` for i in [0, count), in parallel when requested. Exceptions are rethrown.
template <class Task>
void for_each_index(std::size_t count, Exec exec, Task task) {
  std::exception_ptr failure;
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (long i = 0; i < n; ++i) {
    try {
      task(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(matroid_forge_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

VertexWitness most_violated_on(const Skeleton& s, Exec exec) {
  if (s.n == 0) throw InputError("most_violated on an empty graph");
  const CapNetwork net = violation_network(s);
  const Rational x_total = sum(s.x);
  std::vector<std::optional<VertexWitness>> per_vertex(s.n);
  for_each_index(s.n, exec, [&](std::size_t v) { per_vertex[v] = forced_cut(s, net, {v}, x_total); });

  std::size_t best = 0;
  for (std::size_t v = 1; v < s.n; ++v) {
    if (per_vertex[v]->value < per_vertex[best]->value) best = v;
  }
  return std::move(*per_vertex[best]);
}

}  // namespace

CapNetwork build_violation_network(const WeightedMultigraph& g, std::span<const Rational> x) {
  require_nonnegative(x, g.num_edges(), "build_violation_network");
  return violation_network(skeleton_of(g, x));
}

VertexWitness most_violated(const WeightedMultigraph& g, std::span<const Rational> x, Exec exec) {
  require_nonnegative(x, g.num_edges(), "most_violated");
  return most_violated_on(skeleton_of(g, x), exec);
}

VertexWitness eval_g(const WeightedMultigraph& g, std::span<const Rational> sigma, const Rational& b, Exec exec) {
  if (sgn(b) <= 0) throw InputError("eval_g: b must be positive");
  require_nonnegative(sigma, g.num_edges(), "eval_g");
  std::vector<Rational> x;
  x.reserve(sigma.size());
  for (const auto& w : sigma) x.emplace_back(w / b);
  VertexWitness mv = most_violated(g, x, exec);
  mv.value *= b;
  return mv;
}

EdgeWitness reinforcement_oracle(const WeightedMultigraph& g, std::span<const Rational> x, std::size_t j,
                                 const Rational& alpha) {
  if (sgn(alpha) <= 0) throw InputError("reinforcement_oracle: alpha must be positive");
  if (j >= g.num_edges()) throw InputError("reinforcement_oracle: edge index out of range");
  require_nonnegative(x, g.num_edges(), "reinforcement_oracle");
  Skeleton s = skeleton_of(g, x);
  for (auto& v : s.x) v /= alpha;
  const Rational x_total = sum(s.x);
  VertexWitness piece = forced_cut(s, violation_network(s), {g.edge(j).u, g.edge(j).v}, x_total);
  Rational eps = alpha * piece.value;
  if (sgn(eps) < 0) {
    throw ConsistencyError("reinforcement_oracle: negative step " + to_string(eps) +
                           "; weights are outside alpha P_f");
  }
  return EdgeWitness{std::move(eps), g.induced_edges(piece.vertices)};
}

EdgeWitness attack_oracle(const WeightedMultigraph& g, std::span<const Rational> y, const Rational& lambda,
                          Exec exec) {
  if (sgn(lambda) <= 0) throw InputError("attack_oracle: lambda must be positive");
  require_nonnegative(y, g.num_edges(), "attack_oracle");
  const std::size_t m = g.num_edges();

  // min{lambda f(B) - y(B)} = max{x(E) : x in lambda P_f, x <= y} - y(E). The greedy
  // raises each x_j to min(y_j, its slack in lambda P_f); x stays in lambda P_f.
  Skeleton s = skeleton_of(g, std::vector<Rational>(m, Rational(0)));
  for (std::size_t j = 0; j < m; ++j) {
    const Rational slack = lambda * forced_cut(s, violation_network(s), {g.edge(j).u, g.edge(j).v}, sum(s.x)).value;
    s.x[j] = std::min(Rational(y[j] / lambda), Rational(slack / lambda));
  }

  // The maximal tight set is closed, so it splits into E_W over its components W.
  const CapNetwork net = violation_network(s);
  const Rational x_total = sum(s.x);
  std::vector<char> tight(m, 0);
  for_each_index(m, exec, [&](std::size_t e) {
    tight[e] = sgn(forced_cut(s, net, {g.edge(e).u, g.edge(e).v}, x_total).value) == 0;
  });
  DisjointSets blocks(g.num_vertices());
  for (std::size_t e = 0; e < m; ++e) {
    if (tight[e]) blocks.unite(g.edge(e).u, g.edge(e).v);
  }
  // Components contributing exactly zero are dropped; the rest are strictly negative.
  std::vector<Rational> contribution(g.num_vertices(), 0);
  std::vector<std::size_t> size(g.num_vertices(), 0);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) ++size[blocks.find(v)];
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (blocks.find(v) == v && size[v] > 1) contribution[v] = lambda * static_cast<unsigned long>(size[v] - 1);
  }
  for (std::size_t e = 0; e < m; ++e) {
    if (tight[e]) contribution[blocks.find(g.edge(e).u)] -= y[e];
  }
  std::vector<std::size_t> chosen;
  for (std::size_t e = 0; e < m; ++e) {
    if (tight[e] && sgn(contribution[blocks.find(g.edge(e).u)]) < 0) chosen.push_back(e);
  }

  EdgeSet witness(std::move(chosen));
  Rational value = lambda * static_cast<unsigned long>(rank(g, witness)) - weight_of(y, witness);
  if (value != lambda * x_total - sum(y)) throw ConsistencyError("attack_oracle: witness misses the greedy bound");
  return EdgeWitness{std::move(value), std::move(witness)};
}

EdgeWitness sparsification_oracle(const WeightedMultigraph& g, std::span<const Rational> x, std::size_t j,
                                  const Rational& beta, Exec exec) {
  if (sgn(beta) <= 0) throw InputError("sparsification_oracle: beta must be positive");
  if (j >= g.num_edges()) throw InputError("sparsification_oracle: edge index out of range");
  require_nonnegative(x, g.num_edges(), "sparsification_oracle");

  const WeightedMultigraph without_j = delete_edges(g, EdgeSet{j});
  std::vector<Rational> y;
  std::vector<std::size_t> original;  // index in g of each edge of without_j
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (e == j) continue;
    y.push_back(x[e]);
    original.push_back(e);
  }
  const EdgeWitness attack = attack_oracle(without_j, y, beta, exec);
  Rational eps = sum(x) - beta * static_cast<unsigned long>(full_rank(g)) + attack.value;
  if (sgn(eps) < 0) {
    throw ConsistencyError("sparsification_oracle: negative step " + to_string(eps) +
                           "; weights are outside beta Q_g");
  }
  std::vector<char> in_b(g.num_edges(), 0);
  for (auto e : attack.edges) in_b[original[e]] = 1;
  std::vector<std::size_t> complement;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!in_b[e]) complement.push_back(e);
  }
  return EdgeWitness{std::move(eps), EdgeSet(std::move(complement))};
}

}  // namespace matroid_forge
