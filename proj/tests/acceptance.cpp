// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Usage: acceptance <path to matroid-forge> <data directory>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "matroid_forge/bruteforce.hpp"
#include "matroid_forge/modulus.hpp"
#include "matroid_forge/oracle_networks.hpp"
#include "matroid_forge/polymatroid.hpp"
#include "matroid_forge/ratio_solvers.hpp"
#include "matroid_forge/reinforce_sparsify.hpp"
#include "poly_oracles.hpp"

using namespace matroid_forge;
using fixtures::frac;
using fixtures::Instance;

namespace {

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_++ == 0) first_failure_ = what;
  }
  void merge(const Tally& other) {
    checks_ += other.checks_;
    if (other.failures_ > 0 && failures_ == 0) first_failure_ = other.first_failure_;
    failures_ += other.failures_;
  }
  bool ok() const { return failures_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::string s = std::to_string(checks_) + " checks";
    if (failures_ > 0) s += ", " + std::to_string(failures_) + " failed, first: " + first_failure_;
    return s;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

struct Context {
  std::string cli;
  std::filesystem::path data;
  std::vector<Instance> corpus;
};

// Runs `body` on every corpus instance, in parallel, one tally per instance.
Tally over_corpus(const Context& ctx, const std::function<void(const Instance&, Tally&)>& body) {
  std::vector<Tally> parts(ctx.corpus.size());
  const auto count = static_cast<long>(ctx.corpus.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      body(ctx.corpus[static_cast<std::size_t>(i)], parts[static_cast<std::size_t>(i)]);
    } catch (const std::exception& e) {
      parts[static_cast<std::size_t>(i)].check(false, "instance " + std::to_string(i) + " threw: " + e.what());
    }
  }
  Tally total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

std::vector<Rational> shifted(std::span<const Rational> a, std::span<const Rational> b, int sign) {
  std::vector<Rational> out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += sign * b[i];
  return out;
}

Rational rank_of(const WeightedMultigraph& g) { return static_cast<long>(full_rank(g)); }

Tally oracle_equivalence(const Context& ctx) {
  const auto start = std::chrono::steady_clock::now();
  Tally t = over_corpus(ctx, [](const Instance& inst, Tally& t) {
    const auto& g = inst.graph;
    const auto& sigma = inst.sigma;
    const Rational beta = strength(g, sigma).value;
    const Rational alpha = arboricity(g, sigma).value;
    t.check(beta == brute::exhaustive_strength(g, sigma).value, "strength");
    t.check(alpha == brute::exhaustive_arboricity(g, sigma).value, "arboricity");
    for (const Rational& lambda : {beta, alpha, Rational(frac(1, 2)), Rational(3)}) {
      t.check(attack_oracle(g, sigma, lambda).value == brute::exhaustive_attack(g, sigma, lambda).value, "attack");
    }
    // Oracles at the input weights and at points halfway to the adjusted weights.
    const auto up = reinforce(g, sigma, inst.costs);
    const auto down = sparsify(g, sigma, inst.costs);
    std::vector<Rational> half_up(sigma), half_down(sigma);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      half_up[e] += up.z[e] / 2;
      half_down[e] -= down.z[e] / 2;
    }
    for (std::size_t j = 0; j < g.num_edges(); ++j) {
      for (const auto* x : std::array<const std::vector<Rational>*, 2>{&sigma, &half_up}) {
        t.check(reinforcement_oracle(g, *x, j, alpha).value == brute::exhaustive_reinforcement_step(g, *x, j, alpha),
                "reinforcement oracle");
      }
      for (const auto* x : std::array<const std::vector<Rational>*, 2>{&sigma, &half_down}) {
        t.check(sparsification_oracle(g, *x, j, beta).value == brute::exhaustive_sparsification_step(g, *x, j, beta),
                "sparsification oracle");
      }
    }
  });
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.check(seconds < 60.0, "runtime " + std::to_string(seconds) + " s exceeds 60 s");
  t.check(ctx.corpus.size() >= 200, "corpus smaller than 200");
  return t;
}

Tally iteration_bounds(const Context& ctx) {
  return over_corpus(ctx, [](const Instance& inst, Tally& t) {
    const auto& g = inst.graph;
    const auto d = arboricity(g, inst.sigma);
    t.check(d.iterations <= g.num_vertices(), "arboricity iterations exceed |V|");
    for (std::size_t i = 1; i < d.trace.size(); ++i) {
      const auto now = d.trace[i].witness_size;
      if (now != 0) t.check(now < d.trace[i - 1].witness_size, "arboricity witness did not shrink");
    }
    const auto s = strength(g, inst.sigma);
    t.check(s.iterations <= full_rank(g), "strength iterations exceed f(E)");
    for (std::size_t i = 1; i < s.trace.size(); ++i) {
      const auto now = s.trace[i].witness_size;
      if (now != 0) t.check(now < s.trace[i - 1].witness_size, "strength rank drop did not decrease");
    }
  });
}

Tally reinforcement(const Context& ctx) {
  return over_corpus(ctx, [](const Instance& inst, Tally& t) {
    const auto& g = inst.graph;
    const Rational alpha = arboricity(g, inst.sigma).value;
    const auto plan = reinforce(g, inst.sigma, inst.costs, [&](std::size_t, std::span<const Rational> z) {
      t.check(arboricity(g, shifted(inst.sigma, z, +1)).value == alpha, "D moved during reinforcement");
    });
    const auto h = is_homogeneous(g, shifted(inst.sigma, plan.z, +1));
    t.check(h.homogeneous && h.alpha == alpha && h.beta == alpha, "reinforced weights not homogeneous at alpha");
    t.check(plan.target_level == alpha, "target level");
    t.check(sum(plan.z) == alpha * rank_of(g) - sum(inst.sigma), "mass identity");
    t.check(plan.total_cost == poly_oracles::dot(plan.z, inst.costs), "total cost");
    t.check(plan.total_cost == brute::lp_reinforce(g, inst.sigma, inst.costs), "LP optimum");
  });
}

Tally sparsification(const Context& ctx) {
  return over_corpus(ctx, [](const Instance& inst, Tally& t) {
    const auto& g = inst.graph;
    const Rational beta = strength(g, inst.sigma).value;
    const auto plan = sparsify(g, inst.sigma, inst.costs, [&](std::size_t, std::span<const Rational> z) {
      t.check(strength(drop_zero_weight_edges(g, shifted(inst.sigma, z, -1))).value == beta,
              "S moved during sparsification");
    });
    const auto after = shifted(inst.sigma, plan.z, -1);
    for (const auto& w : after) t.check(sgn(w) >= 0, "negative weight");
    const auto kept = drop_zero_weight_edges(g, after);
    const auto h = is_homogeneous(kept);
    t.check(h.homogeneous && h.beta == beta, "sparsified weights not homogeneous at beta");
    t.check(plan.removable_edges.size() == g.num_edges() - kept.num_edges(), "removable edges");
    t.check(sum(plan.z) == sum(inst.sigma) - beta * rank_of(g), "mass identity");
    t.check(plan.total_cost == poly_oracles::dot(plan.z, inst.costs), "total cost");
    t.check(plan.total_cost == brute::lp_sparsify(g, inst.sigma, inst.costs), "LP optimum");
  });
}

Tally worked_instance(const Context&) {
  Tally t;
  const auto g = fixtures::bowtie();
  const auto sigma = fixtures::ones(7);
  const auto s = strength(g);
  const auto d = arboricity(g);
  t.check(d.value == frac(3, 2) && brute::exhaustive_arboricity(g, sigma).value == frac(3, 2), "D = 3/2");
  t.check(s.value == 1 && brute::exhaustive_strength(g, sigma).value == 1, "S = 1");
  t.check(reinforce(g, sigma, sigma).total_cost == frac(1, 2), "reinforcement cost 1/2");
  t.check(brute::lp_reinforce(g, sigma, sigma) == frac(1, 2), "LP reinforcement cost 1/2");
  t.check(sparsify(g, sigma, sigma).total_cost == 2, "sparsification cost 2");
  t.check(brute::lp_sparsify(g, sigma, sigma) == 2, "LP sparsification cost 2");
  const auto p = spanning_tree_modulus(g);
  for (std::size_t e = 0; e < 7; ++e) {
    t.check(p.eta[e] == (e == fixtures::kBridge ? Rational(1) : frac(2, 3)), "eta on edge " + std::to_string(e));
  }
  t.check(brute::in_spanning_tree_hull(g, p.eta), "eta in spanning-tree hull");
  t.check(p.meo == frac(11, 3) && p.mod2 == frac(3, 11) && p.mod2 * p.meo == 1, "mod2 and meo");
  t.check(brute::exhaustive_adm_check(g, p.rho, brute::Family::spanning_trees), "rho admissible");
  Rational energy = 0;
  for (std::size_t e = 0; e < 7; ++e) energy += sigma[e] * p.rho[e] * p.rho[e];
  t.check(energy == p.mod2, "rho energy equals mod2");
  const auto fw = brute::frank_wolfe_meo(g, sigma, 1e-9);
  t.check(std::abs(fw.meo - 11.0 / 3.0) <= 1e-4 * 11.0 / 3.0, "Frank-Wolfe meo");
  return t;
}

Tally modulus_identities(const Context& ctx) {
  return over_corpus(ctx, [](const Instance& inst, Tally& t) {
    const auto& g = inst.graph;
    const auto p = spanning_tree_modulus(g);
    t.check(sum(p.eta) == static_cast<long>(g.num_vertices() - 1), "eta(E) = |V| - 1");
    Rational lo = p.eta[0] / inst.sigma[0];
    Rational hi = lo;
    for (std::size_t e = 1; e < g.num_edges(); ++e) {
      const Rational r = p.eta[e] / inst.sigma[e];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    t.check(1 / hi == brute::exhaustive_strength(g, inst.sigma).value, "1/max = S");
    t.check(1 / lo == brute::exhaustive_arboricity(g, inst.sigma).value, "1/min = D");
    t.check(p.mod2 * p.meo == 1, "mod2 meo = 1");
    t.check(brute::exhaustive_adm_check(g, p.rho, brute::Family::spanning_trees), "rho admissible");
    const auto fw = brute::frank_wolfe_meo(g, inst.sigma, 1e-8);
    const double meo = to_double(p.meo);
    t.check(std::abs(fw.meo - meo) <= 1e-4 * meo, "Frank-Wolfe meo");
  });
}

Tally polymatroid_suite(const Context&) {
  using namespace matroid_forge::poly;
  using namespace poly_oracles;
  Tally t;
  std::mt19937_64 rng(20241019);
  for (int trial = 0; trial < 120; ++trial) {
    const auto f = random_polymatroid(rng, 5);
    const std::size_t n = f.ground_size();
    Rational c = 0;
    for (std::size_t e = 0; e < n; ++e) c = std::max(c, f(Mask{1} << e));
    const Rational cap = c + static_cast<long>(rng() % 2);
    const auto h = translated(f, cap);
    t.check(h.is_polymatroid_function(), "translation image is a polymatroid function");

    auto points = base_vertices(f);
    for (int k = 0; k < 25; ++k) points.push_back(random_point(rng, n, mpz_class(cap).get_si() + 1));
    for (const auto& x : points) {
      const bool in_b = membership(x, 1, Region::B, f);
      t.check(in_b == membership(x, 1, Region::C, f), "B_f = C_g");
      t.check(in_capped_contrapolymatroid(x, f, cap, true) == in_b, "C_{g,c} = C_g");
      Vector image(n);
      for (std::size_t e = 0; e < n; ++e) image[e] = cap - x[e];
      t.check(in_capped_contrapolymatroid(x, f, cap, false) == membership(image, 1, Region::P, h),
              "translation maps Q_{g,c} onto P_h");
    }

    Vector s(n);
    for (auto& v : s) v = static_cast<long>(1 + rng() % 5);
    Vector m(n);
    for (auto& v : m) v = static_cast<long>(rng() % 4);
    const auto lv = alpha_beta(s, f);
    t.check(lv.alpha >= lv.beta, "alpha >= beta");
    t.check((lv.alpha == lv.beta) == membership(s, lv.alpha, Region::B, f), "alpha = beta iff s in alpha B_f");
    for (const Rational& level : {Rational(lv.alpha - frac(1, 3)), lv.alpha, Rational(lv.alpha + 1)}) {
      t.check(lp_over_vertices(s, m, f, level, +1).has_value() == (level >= lv.alpha), "A_h empty iff h < alpha");
    }
    for (const Rational& level : {Rational(lv.beta / 2), lv.beta, Rational(lv.beta + frac(1, 3))}) {
      t.check(lp_over_vertices(s, m, f, level, -1).has_value() == (level <= lv.beta), "F_h empty iff h > beta");
    }
    t.check(lp_over_vertices(s, m, f, lv.alpha, +1) == dot(m, generic_reinforce(s, m, f)), "reinforcement optimal");
    t.check(lp_over_vertices(s, m, f, lv.beta, -1) == dot(m, generic_sparsify(s, m, f)), "sparsification optimal");
  }
  return t;
}

Tally robustness(const Context& ctx) {
  return over_corpus(ctx, [](const Instance& inst, Tally& t) {
    const auto& g = inst.graph;
    const std::size_t m = g.num_edges();
    // Deterministic per-instance perturbation derived from the weights.
    std::mt19937_64 rng(static_cast<std::uint64_t>(m * 1000 + g.num_vertices() * 10) +
                        static_cast<std::uint64_t>(sum(inst.sigma).get_num().get_ui()));
    std::vector<Rational> other(inst.sigma);
    std::vector<Rational> bigger(inst.sigma);
    Rational max_diff = 0;
    for (std::size_t e = 0; e < m; ++e) {
      other[e] = frac(static_cast<long>(1 + rng() % 12), static_cast<long>(1 + rng() % 4));
      bigger[e] += frac(static_cast<long>(rng() % 5), 2);
      max_diff = std::max(max_diff, Rational(abs(other[e] - inst.sigma[e])));
    }
    const Rational s1 = strength(g, inst.sigma).value;
    const Rational d1 = arboricity(g, inst.sigma).value;
    const Rational bound = static_cast<long>(m) * max_diff;
    t.check(abs(strength(g, other).value - s1) <= bound, "S Lipschitz");
    t.check(abs(arboricity(g, other).value - d1) <= bound, "D Lipschitz");
    t.check(strength(g, bigger).value >= s1, "S monotone");
    t.check(arboricity(g, bigger).value >= d1, "D monotone");
    const Rational by_edges = brute::exhaustive_arboricity(g, inst.sigma).value;
    t.check(by_edges == brute::arboricity_over_vertex_sets(g, inst.sigma), "edge and vertex formulas");
    t.check(by_edges == brute::arboricity_over_connected_subgraphs(g, inst.sigma), "connected-subgraph formula");
  });
}

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& command) {
  RunResult r;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return r;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Tally cli_determinism(const Context& ctx) {
  Tally t;
  std::vector<std::filesystem::path> graphs;
  for (const auto& entry : std::filesystem::directory_iterator(ctx.data)) {
    if (entry.path().extension() == ".json") graphs.push_back(entry.path());
  }
  std::sort(graphs.begin(), graphs.end());
  t.check(!graphs.empty(), "no example graphs found");
  const std::vector<std::string> commands = {"strength", "arboricity", "homogeneous", "reinforce", "sparsify", "modulus"};
  for (const auto& graph : graphs) {
    const std::string quoted = "'" + graph.string() + "'";
    for (const auto& cmd : commands) {
      for (const std::string format : {"json", "text"}) {
        const std::string line = "'" + ctx.cli + "' " + cmd + " " + quoted + " --format " + format;
        const auto first = run(line);
        const auto second = run(line);
        t.check(first.status == 0, line + " exited " + std::to_string(first.status));
        t.check(first.out == second.out && !first.out.empty(), line + " is not byte-identical");
      }
    }
    std::vector<std::string> verify = {"'" + ctx.cli + "' verify " + quoted};
    const auto costs = ctx.data / "costs" / graph.filename();
    if (std::filesystem::exists(costs)) verify.push_back(verify.front() + " --costs '" + costs.string() + "'");
    for (const auto& line : verify) {
      const auto first = run(line);
      t.check(first.status == 0, line + " exited " + std::to_string(first.status));
      t.check(run(line).out == first.out, line + " is not byte-identical");
    }
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <matroid-forge binary> <data directory>\n";
    return 2;
  }
  Context ctx{argv[1], argv[2], fixtures::corpus()};
  const std::vector<std::pair<std::string, std::function<Tally(const Context&)>>> criteria = {
      {"oracle equivalence on the random corpus", oracle_equivalence},
      {"iteration bounds and shrinking witnesses", iteration_bounds},
      {"reinforcement invariance, mass, homogeneity and LP optimality", reinforcement},
      {"sparsification invariance, mass, homogeneity and LP optimality", sparsification},
      {"bowtie worked instance", worked_instance},
      {"modulus identities and Frank-Wolfe agreement", modulus_identities},
      {"polymatroid translation, faces, thresholds and levels", polymatroid_suite},
      {"Lipschitz, monotonicity and arboricity formulas", robustness},
      {"CLI determinism and verify on shipped examples", cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = criteria[i].second(ctx);
    } catch (const std::exception& e) {
      t.check(false, std::string("threw: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!t.ok()) ++failed;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << (t.ok() ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << " ("
              << t.summary() << ", " << timing << ")\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
