#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "isinglearn/graph.hpp"

namespace isinglearn {

/// Length of the shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

/// The localized subgraph around node i with path radius gamma: the vertex
/// set stays all of V, and an edge survives iff both endpoints lie within
/// distance gamma of i. Nodes outside the ball are retained isolated.
Graph local_subgraph(const Graph& g, int i, int gamma);

/// A minimum-cardinality vertex separator between nonadjacent i and j inside
/// the localized subgraph around i.
struct SeparatorResult {
  int i = 0;
  int j = 0;
  int gamma = 0;
  std::vector<int> separator;  ///< sorted, subset of V \ {i, j}
  int size = 0;
};

/// Computes the separator by node-split unit-capacity max-flow on the
/// localized subgraph, with deterministic BFS augmenting paths. Returns size
/// 0 with an empty set when i and j are already disconnected there. Throws
/// std::invalid_argument when (i, j) is an edge of g.
SeparatorResult local_separator(const Graph& g, int i, int j, int gamma);

struct LocalSeparationReport {
  bool holds = true;
  int worst_size = 0;
  std::pair<int, int> worst_pair{-1, -1};
};

/// Checks whether every ordered nonadjacent pair (i, j) admits a separator of
/// size <= eta within the radius-gamma subgraph around i. worst_size is the
/// maximum separator size over all such pairs.
LocalSeparationReport check_local_separation(const Graph& g, int eta, int gamma);

}  // namespace isinglearn
