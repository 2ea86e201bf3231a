#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "isinglearn/graph.hpp"

namespace isinglearn {

/// Pairwise binary Markov random field over spins in {-1,+1}:
///   P(x) ∝ exp(sum_{(i,j) in E} J_ij x_i x_j + sum_i h_i x_i).
/// The support of the coupling matrix equals the edge set of the graph.
class IsingModel {
 public:
  IsingModel() = default;

  /// `couplings` are parallel to graph.edges() (sorted, i < j); `field` has
  /// one entry per node. All values must be finite.
  IsingModel(Graph graph, std::vector<double> couplings, std::vector<double> field);

  const Graph& graph() const { return graph_; }
  int node_count() const { return graph_.node_count(); }

  /// J_ij for an edge, 0 for a non-edge (the sparsity convention).
  double coupling(int i, int j) const;
  const std::vector<double>& couplings() const { return couplings_; }

  double field(int i) const { return field_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& field() const { return field_; }

  /// Neighbors of i with the attached coupling values; the layout the Gibbs
  /// sweep iterates over.
  const std::vector<std::pair<int, double>>& adjacency(int i) const {
    return adjacency_[static_cast<std::size_t>(i)];
  }

 private:
  Graph graph_;
  std::vector<double> couplings_;  // parallel to graph_.edges()
  std::vector<double> field_;
  std::vector<std::vector<std::pair<int, double>>> adjacency_;
};

enum class SignMode { Attractive, Mixed };

std::string sign_mode_name(SignMode mode);
SignMode parse_sign_mode(const std::string& name);

/// Random edge potentials: magnitude uniform in [j_min, j_max]; sign +1 when
/// attractive, equiprobable +-1 when mixed.
struct ParamSpec {
  double j_min = 0.1;
  double j_max = 0.2;
  SignMode sign_mode = SignMode::Attractive;
  std::uint64_t seed = 0;
};

/// Draws edge potentials per spec over the graph's edges (in sorted edge
/// order) and sets the node potentials to zero, giving a symmetric model.
/// Deterministic given the spec seed.
IsingModel gen_potentials(const Graph& graph, const ParamSpec& spec);

// JSON format: {"p": int, "h": [...], "J": [[i, j, value], ...]} with i < j.
IsingModel parse_model_json(const std::string& text);
std::string model_to_json(const IsingModel& model);
IsingModel load_model_json(const std::filesystem::path& path);
void save_model_json(const IsingModel& model, const std::filesystem::path& path);

}  // namespace isinglearn
