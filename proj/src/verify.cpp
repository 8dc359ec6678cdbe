#include "matroid_forge/verify.hpp"

#include <algorithm>

#include "matroid_forge/bruteforce.hpp"
#include "matroid_forge/modulus.hpp"
#include "matroid_forge/ratio_solvers.hpp"
#include "matroid_forge/reinforce_sparsify.hpp"

namespace matroid_forge {

namespace {

constexpr std::size_t kLpEdgeBound = 12;

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  void expect(std::string name, bool passed, std::string detail = {}) {
    report_.checks.push_back({std::move(name), passed, passed ? std::string{} : std::move(detail)});
  }

  void equal(std::string name, const Rational& got, const Rational& want) {
    expect(std::move(name), got == want, "got " + to_string(got) + ", expected " + to_string(want));
  }

 private:
  VerifyReport& report_;
};

bool strictly_shrinking(const RatioWitness& w) {
  for (std::size_t i = 1; i < w.trace.size(); ++i) {
    if (w.trace[i].witness_size != 0 && w.trace[i].witness_size >= w.trace[i - 1].witness_size) return false;
  }
  return true;
}

std::vector<Rational> shifted(std::span<const Rational> sigma, std::span<const Rational> z, int sign) {
  std::vector<Rational> out(sigma.begin(), sigma.end());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] += sign * z[e];
  return out;
}

void check_ratios(const WeightedMultigraph& g, std::span<const Rational> sigma, const RatioWitness& s,
                  const RatioWitness& d, Recorder& rec) {
  const std::size_t fe = full_rank(g);
  rec.equal("strength serial == parallel", strength(g, sigma, Exec::serial).value, s.value);
  rec.equal("arboricity serial == parallel", arboricity(g, sigma, Exec::serial).value, d.value);
  rec.expect("arboricity iterations <= |V|", d.iterations <= g.num_vertices(),
             std::to_string(d.iterations) + " iterations");
  rec.expect("arboricity witnesses shrink", strictly_shrinking(d));
  rec.expect("strength iterations <= f(E)", s.iterations <= fe, std::to_string(s.iterations) + " iterations");
  rec.expect("strength rank drops shrink", strictly_shrinking(s));
  rec.expect("strength <= arboricity", s.value <= d.value);

  const std::size_t drop = corank_g(g, s.witness_edges);
  rec.expect("strength witness realises the ratio",
             drop > 0 && Rational(weight_of(sigma, s.witness_edges) / drop) == s.value);
  const std::size_t parts = d.witness_vertices.size();
  rec.expect("arboricity witness realises the ratio",
             parts >= 2 && Rational(weight_of(sigma, g.induced_edges(d.witness_vertices)) / (parts - 1)) == d.value);

  if (g.num_edges() <= brute::max_edges()) {
    rec.equal("strength == exhaustive", s.value, brute::exhaustive_strength(g, sigma).value);
    rec.equal("arboricity == exhaustive", d.value, brute::exhaustive_arboricity(g, sigma).value);
  }
}

void check_reinforce(const WeightedMultigraph& g, std::span<const Rational> sigma, std::span<const Rational> costs,
                     const Rational& alpha, Recorder& rec) {
  const auto plan = reinforce(g, sigma, costs);
  const auto after = shifted(sigma, plan.z, +1);
  rec.equal("reinforce target == arboricity", plan.target_level, alpha);
  rec.equal("reinforce mass identity", sum(plan.z), alpha * full_rank(g) - sum(sigma));
  const auto h = is_homogeneous(g, after);
  rec.expect("reinforced weights homogeneous at alpha", h.homogeneous && h.alpha == alpha,
             "alpha " + to_string(h.alpha) + ", beta " + to_string(h.beta));
  if (g.num_edges() <= kLpEdgeBound) {
    rec.equal("reinforce cost == LP optimum", plan.total_cost, brute::lp_reinforce(g, sigma, costs));
  }
}

void check_sparsify(const WeightedMultigraph& g, std::span<const Rational> sigma, std::span<const Rational> costs,
                    const Rational& beta, Recorder& rec) {
  const auto plan = sparsify(g, sigma, costs);
  const auto after = shifted(sigma, plan.z, -1);
  rec.equal("sparsify target == strength", plan.target_level, beta);
  rec.equal("sparsify mass identity", sum(plan.z), sum(sigma) - beta * full_rank(g));
  rec.expect("sparsified weights nonnegative",
             std::all_of(after.begin(), after.end(), [](const Rational& w) { return sgn(w) >= 0; }));
  const auto kept = drop_zero_weight_edges(g, after);
  const auto h = is_homogeneous(kept, kept.weights());
  rec.expect("sparsified weights homogeneous at beta", h.homogeneous && h.beta == beta,
             "alpha " + to_string(h.alpha) + ", beta " + to_string(h.beta));
  if (g.num_edges() <= kLpEdgeBound) {
    rec.equal("sparsify cost == LP optimum", plan.total_cost, brute::lp_sparsify(g, sigma, costs));
  }
}

void check_modulus(const WeightedMultigraph& g, std::span<const Rational> sigma, const Homogeneity& levels,
                   Recorder& rec) {
  const auto profile = spanning_tree_modulus(g);
  rec.equal("eta(E) == f(E)", sum(profile.eta), Rational(full_rank(g)));
  rec.equal("mod2 * meo == 1", profile.mod2 * profile.meo, Rational(1));
  const auto extremes = verify_extremes(profile, g);
  std::string joined;
  for (const auto& f : extremes.failures) joined += (joined.empty() ? "" : "; ") + f;
  rec.expect("modulus extremes match strength and arboricity", extremes.ok, joined);
  rec.expect("eta/sigma constant iff homogeneous", (profile.e_min == profile.e_max) == levels.homogeneous);
  rec.expect("n_sigma admissibility agrees", homogeneity_via_nsigma(g, sigma) == levels.homogeneous);

  if (g.num_edges() <= kLpEdgeBound) {
    rec.expect("rho admissible over spanning trees",
               brute::exhaustive_adm_check(g, profile.rho, brute::Family::spanning_trees));
    rec.expect("eta in spanning tree hull", brute::in_spanning_tree_hull(g, profile.eta));
    const auto fw = brute::frank_wolfe_meo(g, sigma, 1e-7);
    const double meo = to_double(profile.meo);
    const double err = std::abs(fw.meo - meo) / meo;
    rec.expect("Frank-Wolfe MEO within 1e-4", err <= 1e-4,
               "FW " + std::to_string(fw.meo) + " vs " + std::to_string(meo));
  }
}

}  // namespace

VerifyReport verify_instance(const WeightedMultigraph& g, std::span<const Rational> costs) {
  VerifyReport report;
  Recorder rec(report);
  const auto sigma = g.weights();
  const auto s = strength(g, sigma);
  const auto d = arboricity(g, sigma);
  check_ratios(g, sigma, s, d, rec);
  const auto levels = is_homogeneous(g, sigma);
  rec.expect("homogeneity levels match solvers", levels.alpha == d.value && levels.beta == s.value);
  check_reinforce(g, sigma, costs, d.value, rec);
  check_sparsify(g, sigma, costs, s.value, rec);
  check_modulus(g, sigma, levels, rec);
  return report;
}

}  // namespace matroid_forge
