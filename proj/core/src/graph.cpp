#include "isinglearn/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "isinglearn/errors.hpp"

namespace isinglearn {

Graph::Graph(int node_count) : p_(node_count) {
  if (node_count < 0) throw std::invalid_argument("node count must be >= 0");
  adjacency_.resize(static_cast<std::size_t>(node_count));
}

Graph Graph::from_edges(int node_count,
                        const std::vector<std::pair<int, int>>& edges) {
  Graph g(node_count);
  for (const auto& [i, j] : edges) g.add_edge(i, j);
  return g;
}

void Graph::check_node(int i) const {
  if (i < 0 || i >= p_) {
    throw std::invalid_argument("node index " + std::to_string(i) +
                                " out of range for p=" + std::to_string(p_));
  }
}

void Graph::add_edge(int i, int j) {
  check_node(i);
  check_node(j);
  if (i == j) throw std::invalid_argument("self-loops are not allowed");
  auto& ni = adjacency_[static_cast<std::size_t>(i)];
  const auto pos = std::lower_bound(ni.begin(), ni.end(), j);
  if (pos != ni.end() && *pos == j) {
    throw std::invalid_argument("duplicate edge {" + std::to_string(i) + "," +
                                std::to_string(j) + "}");
  }
  ni.insert(pos, j);
  auto& nj = adjacency_[static_cast<std::size_t>(j)];
  nj.insert(std::lower_bound(nj.begin(), nj.end(), i), i);
  ++k_;
}

bool Graph::has_edge(int i, int j) const {
  check_node(i);
  check_node(j);
  if (i == j) return false;
  const auto& ni = adjacency_[static_cast<std::size_t>(i)];
  return std::binary_search(ni.begin(), ni.end(), j);
}

const std::vector<int>& Graph::neighbors(int i) const {
  check_node(i);
  return adjacency_[static_cast<std::size_t>(i)];
}

int Graph::degree(int i) const {
  return static_cast<int>(neighbors(i).size());
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) {
    best = std::max(best, static_cast<int>(list.size()));
  }
  return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(k_);
  for (int i = 0; i < p_; ++i) {
    for (int j : adjacency_[static_cast<std::size_t>(i)]) {
      if (j > i) out.emplace_back(i, j);
    }
  }
  return out;
}

EditDistance edit_distance(const Graph& truth, const Graph& estimate) {
  if (truth.node_count() != estimate.node_count()) {
    throw std::invalid_argument("edit_distance requires equal node counts");
  }
  std::size_t diff = 0;
  for (const auto& [i, j] : truth.edges()) {
    if (!estimate.has_edge(i, j)) ++diff;
  }
  for (const auto& [i, j] : estimate.edges()) {
    if (!truth.has_edge(i, j)) ++diff;
  }
  EditDistance result;
  result.symmetric_difference = diff;
  result.normalized = static_cast<double>(diff) /
                      static_cast<double>(std::max<std::size_t>(1, truth.edge_count()));
  return result;
}

Graph parse_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("p") || !doc.contains("edges")) {
    throw std::invalid_argument("graph JSON must contain \"p\" and \"edges\"");
  }
  Graph g(doc.at("p").get<int>());
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("graph edge entries must be [i, j] pairs");
    }
    g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return g;
}

std::string graph_to_json(const Graph& graph) {
  nlohmann::json doc;
  doc["p"] = graph.node_count();
  auto edges = nlohmann::json::array();
  for (const auto& [i, j] : graph.edges()) {
    edges.push_back(nlohmann::json::array({i, j}));
  }
  doc["edges"] = edges;
  return doc.dump(2) + "\n";
}

Graph load_graph_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_json(buffer.str());
}

void save_graph_json(const Graph& graph, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write graph file: " + path.string());
  out << graph_to_json(graph);
  if (!out) throw IoError("error writing graph file: " + path.string());
}

}  // namespace isinglearn
