// matroid-forge: exact strength, arboricity, homogenisation and spanning-tree
// modulus of weighted graphs. JSON on stdout is the contract; --format text is
// for people.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "matroid_forge/errors.hpp"
#include "matroid_forge/json_io.hpp"
#include "matroid_forge/verify.hpp"

namespace mf = matroid_forge;
using mf::io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitInput = 2;

enum class Format { json, text };

void report_error(const char* kind, const std::string& message) {
  json err = {{"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << err.dump() << '\n';
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : " ") + s;
  return out;
}

void print_rational_table(const mf::WeightedMultigraph& g, const json& values, const char* header) {
  std::printf("%-12s %s\n", "edge", header);
  for (const auto& e : g.edges()) std::printf("%-12s %s\n", e.id.c_str(), values[e.id].get<std::string>().c_str());
}

void print_text(const std::string& command, const mf::WeightedMultigraph& g, const json& out) {
  if (command == "strength" || command == "arboricity") {
    std::printf("%s: %s  (%zu iterations)\n", command.c_str(), out[command].get<std::string>().c_str(),
                out["iterations"].get<std::size_t>());
    const char* key = command == "strength" ? "witness_edges" : "witness_vertices";
    std::printf("witness: %s\n", join(out[key].get<std::vector<std::string>>()).c_str());
  } else if (command == "homogeneous") {
    std::printf("homogeneous: %s\nalpha: %s\nbeta:  %s\n", out["homogeneous"].get<bool>() ? "yes" : "no",
                out["alpha"].get<std::string>().c_str(), out["beta"].get<std::string>().c_str());
  } else if (command == "reinforce" || command == "sparsify") {
    print_rational_table(g, out["z"], "z");
    std::printf("total cost:   %s\ntarget level: %s\n", out["total_cost"].get<std::string>().c_str(),
                out["target_level"].get<std::string>().c_str());
    if (out.contains("removable_edges")) {
      std::printf("removable:    %s\n", join(out["removable_edges"].get<std::vector<std::string>>()).c_str());
    }
  } else if (command == "modulus") {
    std::printf("%-12s %-14s %s\n", "edge", "eta", "rho");
    for (const auto& e : g.edges()) {
      std::printf("%-12s %-14s %s\n", e.id.c_str(), out["eta"][e.id].get<std::string>().c_str(),
                  out["rho"][e.id].get<std::string>().c_str());
    }
    std::printf("mod2: %s\nmeo:  %s\n", out["mod2"].get<std::string>().c_str(), out["meo"].get<std::string>().c_str());
    std::printf("e_min: %s\ne_max: %s\n", join(out["e_min"].get<std::vector<std::string>>()).c_str(),
                join(out["e_max"].get<std::vector<std::string>>()).c_str());
    std::size_t step = 0;
    for (const auto& p : out["peel_sequence"]) {
      std::printf("peel %zu: D = %s on %s\n", ++step, p["D"].get<std::string>().c_str(),
                  join(p["subgraph_edges"].get<std::vector<std::string>>()).c_str());
    }
  } else if (command == "verify") {
    for (const auto& c : out["checks"]) {
      std::printf("%-4s %s%s\n", c["passed"].get<bool>() ? "ok" : "FAIL", c["name"].get<std::string>().c_str(),
                  c.contains("detail") ? (": " + c["detail"].get<std::string>()).c_str() : "");
    }
    std::printf("%s\n", out["ok"].get<bool>() ? "all checks passed" : "verification failed");
  }
}

json run(const std::string& command, const mf::WeightedMultigraph& g, const std::string& costs_path) {
  if (!g.is_connected()) throw mf::InputError("graph is disconnected");
  if (g.num_edges() == 0) throw mf::InputError("graph has no edges");
  const auto costs = costs_path.empty() ? mf::io::unit_costs(g) : mf::io::load_costs(costs_path, g);
  const auto sigma = g.weights();

  if (command == "strength") return mf::io::strength_to_json(g, mf::strength(g));
  if (command == "arboricity") return mf::io::arboricity_to_json(g, mf::arboricity(g));
  if (command == "homogeneous") return mf::io::homogeneity_to_json(mf::is_homogeneous(g));
  if (command == "reinforce") return mf::io::plan_to_json(g, mf::reinforce(g, sigma, costs), false);
  if (command == "sparsify") return mf::io::plan_to_json(g, mf::sparsify(g, sigma, costs), true);
  if (command == "modulus") return mf::io::modulus_to_json(g, mf::spanning_tree_modulus(g));

  const auto report = mf::verify_instance(g, costs);
  json checks = json::array();
  for (const auto& c : report.checks) {
    json item = {{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  return {{"ok", report.ok()}, {"checks", checks}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact strength, arboricity and homogenisation of weighted graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Format format = Format::json;
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::json}, {"text", Format::text}}))
      ->capture_default_str();

  std::string graph_path;
  std::string costs_path;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"strength", "Strength: min sigma(X) / rank drop of X"},
      {"arboricity", "Fractional arboricity: max sigma(X) / rank(X)"},
      {"homogeneous", "Whether strength equals arboricity"},
      {"reinforce", "Minimum-cost weight increase to reach homogeneity"},
      {"sparsify", "Minimum-cost weight decrease to reach homogeneity"},
      {"modulus", "Spanning-tree 2-modulus by densest-subgraph peeling"},
      {"verify", "Run the invariant suite on one instance"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("graph", graph_path, "Graph JSON file")->required();
    if (name == "reinforce" || name == "sparsify" || name == "verify") {
      sub->add_option("--costs", costs_path, "Costs JSON file (missing edges cost 1)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    report_error("usage", e.what());
    return kExitInput;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const auto g = mf::io::load_graph(graph_path);
    const json out = run(command, g, costs_path);
    if (format == Format::json) {
      std::cout << out.dump(2) << '\n';
    } else {
      print_text(command, g, out);
    }
    if (command == "verify" && !out["ok"].get<bool>()) return kExitInvariant;
    return kExitOk;
  } catch (const mf::InputError& e) {
    report_error("input", e.what());
    return kExitInput;
  } catch (const mf::BoundExceeded& e) {
    report_error("bound", e.what());
    return kExitInput;
  } catch (const mf::ConsistencyError& e) {
    report_error("invariant", e.what());
    return kExitInvariant;
  } catch (const std::exception& e) {
    report_error("internal", e.what());
    return kExitInvariant;
  }
}
