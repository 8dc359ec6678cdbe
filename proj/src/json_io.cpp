#include "matroid_forge/json_io.hpp"

#include <fstream>

#include "matroid_forge/errors.hpp"

namespace matroid_forge::io {

namespace {

std::string id_string(const json& value, const char* what) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw InputError(std::string(what) + " must be a string or an integer");
}

Rational rational_field(const json& value, const char* what) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(std::to_string(value.get<long long>()));
  throw InputError(std::string(what) + " must be an integer or a \"p/q\" string");
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

json rational_map(const WeightedMultigraph& g, std::span<const Rational> values) {
  json out = json::object();
  for (std::size_t e = 0; e < g.num_edges(); ++e) out[g.edge(e).id] = to_string(values[e]);
  return out;
}

}  // namespace

WeightedMultigraph parse_graph(const json& doc) {
  if (!doc.is_object()) throw InputError("graph document must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw InputError("graph needs a \"vertices\" array");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw InputError("graph needs an \"edges\" array");

  std::vector<std::string> vertices;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& v : doc["vertices"]) {
    vertices.push_back(id_string(v, "vertex id"));
    if (!index.emplace(vertices.back(), vertices.size() - 1).second) {
      throw InputError("duplicate vertex '" + vertices.back() + "'");
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("id") || !e.contains("u") || !e.contains("v")) {
      throw InputError("each edge needs \"id\", \"u\" and \"v\"");
    }
    Edge edge;
    edge.id = id_string(e["id"], "edge id");
    const std::string u = id_string(e["u"], "edge endpoint");
    const std::string v = id_string(e["v"], "edge endpoint");
    auto iu = index.find(u);
    auto iv = index.find(v);
    if (iu == index.end() || iv == index.end()) throw InputError("edge '" + edge.id + "' references an unknown vertex");
    edge.u = iu->second;
    edge.v = iv->second;
    edge.weight = e.contains("weight") ? rational_field(e["weight"], "edge weight") : Rational(1);
    edges.push_back(std::move(edge));
  }
  return WeightedMultigraph(std::move(vertices), std::move(edges));
}

WeightedMultigraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::vector<Rational> parse_costs(const json& doc, const WeightedMultigraph& g) {
  std::vector<Rational> costs = unit_costs(g);
  if (!doc.is_object() || !doc.contains("costs") || !doc["costs"].is_object()) {
    throw InputError("costs document needs a \"costs\" object");
  }
  for (const auto& [id, value] : doc["costs"].items()) {
    const auto e = g.find_edge(id);
    if (!e) throw InputError("cost given for unknown edge '" + id + "'");
    costs[*e] = rational_field(value, "cost");
    if (sgn(costs[*e]) < 0) throw InputError("cost of edge '" + id + "' is negative");
  }
  return costs;
}

std::vector<Rational> load_costs(const std::string& path, const WeightedMultigraph& g) {
  return parse_costs(read_file(path), g);
}

std::vector<Rational> unit_costs(const WeightedMultigraph& g) { return std::vector<Rational>(g.num_edges(), Rational(1)); }

json graph_to_json(const WeightedMultigraph& g) {
  json doc;
  doc["vertices"] = g.vertices();
  doc["edges"] = json::array();
  for (const auto& e : g.edges()) {
    doc["edges"].push_back({{"id", e.id}, {"u", g.vertices()[e.u]}, {"v", g.vertices()[e.v]}, {"weight", to_string(e.weight)}});
  }
  return doc;
}

json strength_to_json(const WeightedMultigraph& g, const RatioWitness& w) {
  return {{"strength", to_string(w.value)}, {"witness_edges", edge_ids(g, w.witness_edges)}, {"iterations", w.iterations}};
}

json arboricity_to_json(const WeightedMultigraph& g, const RatioWitness& w) {
  return {{"arboricity", to_string(w.value)},
          {"witness_vertices", vertex_names(g, w.witness_vertices)},
          {"iterations", w.iterations}};
}

json homogeneity_to_json(const Homogeneity& h) {
  return {{"homogeneous", h.homogeneous}, {"alpha", to_string(h.alpha)}, {"beta", to_string(h.beta)}};
}

json plan_to_json(const WeightedMultigraph& g, const AdjustmentPlan& plan, bool include_removable) {
  json out = {{"z", rational_map(g, plan.z)},
              {"total_cost", to_string(plan.total_cost)},
              {"target_level", to_string(plan.target_level)}};
  if (include_removable) out["removable_edges"] = edge_ids(g, plan.removable_edges);
  return out;
}

json modulus_to_json(const WeightedMultigraph& g, const ModulusProfile& profile) {
  json peels = json::array();
  for (const auto& step : profile.peel_sequence) {
    peels.push_back({{"vertices", step.vertices},
                     {"edges", step.edges},
                     {"D", to_string(step.density)},
                     {"subgraph_edges", step.subgraph_edges}});
  }
  return {{"eta", rational_map(g, profile.eta)},
          {"rho", rational_map(g, profile.rho)},
          {"mod2", to_string(profile.mod2)},
          {"meo", to_string(profile.meo)},
          {"e_min", edge_ids(g, profile.e_min)},
          {"e_max", edge_ids(g, profile.e_max)},
          {"peel_sequence", peels}};
}

}  // namespace matroid_forge::io
