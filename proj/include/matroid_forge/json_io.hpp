#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "matroid_forge/graph.hpp"
#include "matroid_forge/modulus.hpp"
#include "matroid_forge/ratio_solvers.hpp"
#include "matroid_forge/reinforce_sparsify.hpp"

namespace matroid_forge::io {

using nlohmann::json;

/// {"vertices":[...], "edges":[{"id","u","v","weight"}]}; weight is "p/q" or an
/// integer and defaults to 1. Ids may be strings or integers.
WeightedMultigraph parse_graph(const json& doc);
WeightedMultigraph load_graph(const std::string& path);

/// {"costs": {edge id: "p/q" | int}}; edges without an entry cost 1.
std::vector<Rational> parse_costs(const json& doc, const WeightedMultigraph& g);
std::vector<Rational> load_costs(const std::string& path, const WeightedMultigraph& g);
std::vector<Rational> unit_costs(const WeightedMultigraph& g);

json graph_to_json(const WeightedMultigraph& g);

json strength_to_json(const WeightedMultigraph& g, const RatioWitness& w);
json arboricity_to_json(const WeightedMultigraph& g, const RatioWitness& w);
json homogeneity_to_json(const Homogeneity& h);
json plan_to_json(const WeightedMultigraph& g, const AdjustmentPlan& plan, bool include_removable);
json modulus_to_json(const WeightedMultigraph& g, const ModulusProfile& profile);

}  // namespace matroid_forge::io
