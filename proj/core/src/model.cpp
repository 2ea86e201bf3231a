#include "isinglearn/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "isinglearn/errors.hpp"
#include "isinglearn/rng.hpp"

namespace isinglearn {

IsingModel::IsingModel(Graph graph, std::vector<double> couplings,
                       std::vector<double> field)
    : graph_(std::move(graph)),
      couplings_(std::move(couplings)),
      field_(std::move(field)) {
  if (couplings_.size() != graph_.edge_count()) {
    throw std::invalid_argument("one coupling per edge required");
  }
  if (field_.size() != static_cast<std::size_t>(graph_.node_count())) {
    throw std::invalid_argument("one field entry per node required");
  }
  for (double j : couplings_) {
    if (!std::isfinite(j)) throw std::invalid_argument("couplings must be finite");
  }
  for (double h : field_) {
    if (!std::isfinite(h)) throw std::invalid_argument("fields must be finite");
  }
  adjacency_.resize(static_cast<std::size_t>(graph_.node_count()));
  const auto edges = graph_.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [i, j] = edges[e];
    adjacency_[static_cast<std::size_t>(i)].emplace_back(j, couplings_[e]);
    adjacency_[static_cast<std::size_t>(j)].emplace_back(i, couplings_[e]);
  }
}

double IsingModel::coupling(int i, int j) const {
  for (const auto& [nbr, value] : adjacency(i)) {
    if (nbr == j) return value;
  }
  return 0.0;
}

std::string sign_mode_name(SignMode mode) {
  return mode == SignMode::Attractive ? "attractive" : "mixed";
}

SignMode parse_sign_mode(const std::string& name) {
  if (name == "attractive") return SignMode::Attractive;
  if (name == "mixed") return SignMode::Mixed;
  throw std::invalid_argument("unknown sign mode: " + name);
}

IsingModel gen_potentials(const Graph& graph, const ParamSpec& spec) {
  if (!(spec.j_min > 0.0) || spec.j_min > spec.j_max) {
    throw std::invalid_argument("require 0 < j_min <= j_max");
  }
  Rng rng(spec.seed);
  std::vector<double> couplings;
  couplings.reserve(graph.edge_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const double magnitude =
        spec.j_min + (spec.j_max - spec.j_min) * rng.uniform_unit();
    const double sign =
        spec.sign_mode == SignMode::Attractive ? 1.0 : static_cast<double>(rng.spin());
    couplings.push_back(sign * magnitude);
  }
  std::vector<double> field(static_cast<std::size_t>(graph.node_count()), 0.0);
  return IsingModel(graph, std::move(couplings), std::move(field));
}

IsingModel parse_model_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed model JSON: ") + e.what());
  }
  if (!doc.contains("p") || !doc.contains("h") || !doc.contains("J")) {
    throw std::invalid_argument("model JSON must contain \"p\", \"h\" and \"J\"");
  }
  const int p = doc.at("p").get<int>();
  auto field = doc.at("h").get<std::vector<double>>();
  Graph graph(p);
  std::vector<std::tuple<int, int, double>> entries;
  for (const auto& row : doc.at("J")) {
    if (!row.is_array() || row.size() != 3) {
      throw std::invalid_argument("model J entries must be [i, j, value]");
    }
    const int i = row.at(0).get<int>();
    const int j = row.at(1).get<int>();
    graph.add_edge(i, j);
    entries.emplace_back(std::min(i, j), std::max(i, j), row.at(2).get<double>());
  }
  std::vector<double> couplings(graph.edge_count(), 0.0);
  const auto edges = graph.edges();
  for (const auto& [i, j, value] : entries) {
    const auto pos = std::lower_bound(edges.begin(), edges.end(), std::pair{i, j});
    couplings[static_cast<std::size_t>(pos - edges.begin())] = value;
  }
  return IsingModel(std::move(graph), std::move(couplings), std::move(field));
}

std::string model_to_json(const IsingModel& model) {
  nlohmann::json doc;
  doc["p"] = model.node_count();
  doc["h"] = model.field();
  auto couplings = nlohmann::json::array();
  const auto edges = model.graph().edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    couplings.push_back(nlohmann::json::array(
        {edges[e].first, edges[e].second, model.couplings()[e]}));
  }
  doc["J"] = couplings;
  return doc.dump(2) + "\n";
}

IsingModel load_model_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model_json(buffer.str());
}

void save_model_json(const IsingModel& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write model file: " + path.string());
  out << model_to_json(model);
  if (!out) throw IoError("error writing model file: " + path.string());
}

}  // namespace isinglearn
