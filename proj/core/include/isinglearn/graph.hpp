#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace isinglearn {

/// Undirected simple graph on nodes 0..p-1. No self-loops, no parallel
/// edges. Neighbor lists are kept sorted, so edge enumeration and adjacency
/// queries are deterministic and always agree.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int node_count);

  static Graph from_edges(int node_count,
                          const std::vector<std::pair<int, int>>& edges);

  int node_count() const { return p_; }
  std::size_t edge_count() const { return k_; }

  /// Adds edge {i, j}. Throws std::invalid_argument on self-loops, duplicate
  /// edges or out-of-range nodes.
  void add_edge(int i, int j);

  bool has_edge(int i, int j) const;
  const std::vector<int>& neighbors(int i) const;
  int degree(int i) const;
  int max_degree() const;

  /// All edges as (i, j) with i < j, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_node(int i) const;

  int p_ = 0;
  std::size_t k_ = 0;
  std::vector<std::vector<int>> adjacency_;
};

struct EditDistance {
  std::size_t symmetric_difference = 0;  ///< |E_true Δ E_est|
  double normalized = 0.0;               ///< symmetric_difference / max(1, |E_true|)
};

/// Graph-recovery error of `estimate` against `truth`. Both graphs must have
/// the same node count. The normalized value can exceed 1 under gross
/// over-estimation.
EditDistance edit_distance(const Graph& truth, const Graph& estimate);

// JSON format: {"p": int, "edges": [[i, j], ...]} with i < j, sorted.
Graph parse_graph_json(const std::string& text);
std::string graph_to_json(const Graph& graph);
Graph load_graph_json(const std::filesystem::path& path);
void save_graph_json(const Graph& graph, const std::filesystem::path& path);

}  // namespace isinglearn
