// Serial reference against OpenMP kernels on random connected multigraphs.

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "matroid_forge/oracle_networks.hpp"
#include "matroid_forge/ratio_solvers.hpp"

using namespace matroid_forge;

namespace {

WeightedMultigraph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < n; ++v) vertices.push_back("v" + std::to_string(v));
  std::vector<Edge> edges;
  auto add = [&](std::size_t u, std::size_t v) {
    Rational w(static_cast<long>(1 + rng() % 9), static_cast<long>(1 + rng() % 4));
    w.canonicalize();
    edges.push_back(Edge{"e" + std::to_string(edges.size()), u, v, w});
  };
  for (std::size_t v = 1; v < n; ++v) add(v, rng() % v);
  while (edges.size() < m) {
    const std::size_t u = rng() % n;
    const std::size_t v = rng() % n;
    if (u != v) add(u, v);
  }
  return WeightedMultigraph(std::move(vertices), std::move(edges));
}

Exec exec_of(const benchmark::State& state) { return state.range(1) == 0 ? Exec::serial : Exec::parallel; }

void BM_MostViolated(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = random_graph(n, 3 * n, 7);
  const auto x = g.weights();
  for (auto _ : state) benchmark::DoNotOptimize(most_violated(g, x, exec_of(state)));
}

void BM_Attack(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = random_graph(n, 3 * n, 11);
  const auto y = g.weights();
  const Rational lambda = strength(g).value;
  for (auto _ : state) benchmark::DoNotOptimize(attack_oracle(g, y, lambda, exec_of(state)));
}

void BM_Strength(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = random_graph(n, 3 * n, 13);
  for (auto _ : state) benchmark::DoNotOptimize(strength(g, exec_of(state)));
}

void BM_Arboricity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = random_graph(n, 3 * n, 17);
  for (auto _ : state) benchmark::DoNotOptimize(arboricity(g, exec_of(state)));
}

// Second argument: 0 serial, 1 parallel.
BENCHMARK(BM_MostViolated)->ArgsProduct({{16, 32, 64}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Attack)->ArgsProduct({{16, 32, 64}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Strength)->ArgsProduct({{16, 32}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Arboricity)->ArgsProduct({{16, 32}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
