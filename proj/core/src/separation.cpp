#include "isinglearn/separation.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace isinglearn {
namespace {

std::vector<int> distances_from(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.node_count()), -1);
  std::queue<int> frontier;
  dist[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

/// Unit-capacity max-flow network on split nodes: node v maps to arcs
/// in(v)=2v -> out(v)=2v+1. Deterministic BFS (Edmonds-Karp) augmentation.
class SplitFlowNetwork {
 public:
  explicit SplitFlowNetwork(int nodes)
      : head_(static_cast<std::size_t>(2 * nodes), -1) {}

  static int in(int v) { return 2 * v; }
  static int out(int v) { return 2 * v + 1; }

  void add_arc(int from, int to, int capacity) {
    push_edge(from, to, capacity);
    push_edge(to, from, 0);
  }

  int max_flow(int source, int sink) {
    int total = 0;
    while (true) {
      const int pushed = augment(source, sink);
      if (pushed == 0) break;
      total += pushed;
    }
    return total;
  }

  /// Vertices reachable from `source` in the residual graph after max_flow.
  std::vector<bool> residual_reachable(int source) const {
    std::vector<bool> seen(head_.size(), false);
    std::queue<int> frontier;
    seen[static_cast<std::size_t>(source)] = true;
    frontier.push(source);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int e = head_[static_cast<std::size_t>(u)]; e >= 0; e = next_[e]) {
        if (cap_[e] > 0 && !seen[static_cast<std::size_t>(to_[e])]) {
          seen[static_cast<std::size_t>(to_[e])] = true;
          frontier.push(to_[e]);
        }
      }
    }
    return seen;
  }

 private:
  void push_edge(int from, int to, int capacity) {
    to_.push_back(to);
    cap_.push_back(capacity);
    next_.push_back(head_[static_cast<std::size_t>(from)]);
    head_[static_cast<std::size_t>(from)] = static_cast<int>(to_.size()) - 1;
  }

  int augment(int source, int sink) {
    std::vector<int> pred_edge(head_.size(), -1);
    std::queue<int> frontier;
    frontier.push(source);
    pred_edge[static_cast<std::size_t>(source)] = -2;
    while (!frontier.empty() && pred_edge[static_cast<std::size_t>(sink)] == -1) {
      const int u = frontier.front();
      frontier.pop();
      for (int e = head_[static_cast<std::size_t>(u)]; e >= 0; e = next_[e]) {
        const int w = to_[e];
        if (cap_[e] > 0 && pred_edge[static_cast<std::size_t>(w)] == -1) {
          pred_edge[static_cast<std::size_t>(w)] = e;
          frontier.push(w);
        }
      }
    }
    if (pred_edge[static_cast<std::size_t>(sink)] == -1) return 0;
    int bottleneck = std::numeric_limits<int>::max();
    for (int v = sink; v != source;) {
      const int e = pred_edge[static_cast<std::size_t>(v)];
      bottleneck = std::min(bottleneck, cap_[e]);
      v = to_[e ^ 1];
    }
    for (int v = sink; v != source;) {
      const int e = pred_edge[static_cast<std::size_t>(v)];
      cap_[e] -= bottleneck;
      cap_[e ^ 1] += bottleneck;
      v = to_[e ^ 1];
    }
    return bottleneck;
  }

  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> next_;
};

SeparatorResult separator_in(const Graph& local, int i, int j, int gamma) {
  SeparatorResult result;
  result.i = i;
  result.j = j;
  result.gamma = gamma;

  const int p = local.node_count();
  const int inf = p + 1;
  SplitFlowNetwork net(p);
  for (int v = 0; v < p; ++v) {
    const int capacity = (v == i || v == j) ? inf : 1;
    net.add_arc(SplitFlowNetwork::in(v), SplitFlowNetwork::out(v), capacity);
  }
  for (const auto& [u, w] : local.edges()) {
    net.add_arc(SplitFlowNetwork::out(u), SplitFlowNetwork::in(w), inf);
    net.add_arc(SplitFlowNetwork::out(w), SplitFlowNetwork::in(u), inf);
  }
  const int flow = net.max_flow(SplitFlowNetwork::out(i), SplitFlowNetwork::in(j));
  const auto reachable = net.residual_reachable(SplitFlowNetwork::out(i));
  for (int v = 0; v < p; ++v) {
    if (v == i || v == j) continue;
    if (reachable[static_cast<std::size_t>(SplitFlowNetwork::in(v))] &&
        !reachable[static_cast<std::size_t>(SplitFlowNetwork::out(v))]) {
      result.separator.push_back(v);
    }
  }
  result.size = static_cast<int>(result.separator.size());
  if (result.size != flow) {
    throw std::logic_error("min-cut extraction disagrees with max-flow value");
  }
  return result;
}

}  // namespace

std::optional<int> girth(const Graph& g) {
  const int p = g.node_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(p));
  std::vector<int> parent(static_cast<std::size_t>(p));
  for (int root = 0; root < p; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> frontier;
    dist[static_cast<std::size_t>(root)] = 0;
    frontier.push(root);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      if (2 * dist[static_cast<std::size_t>(u)] >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          frontier.push(w);
        } else if (w != parent[static_cast<std::size_t>(u)]) {
          best = std::min(best, dist[static_cast<std::size_t>(u)] +
                                    dist[static_cast<std::size_t>(w)] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

Graph local_subgraph(const Graph& g, int i, int gamma) {
  if (i < 0 || i >= g.node_count()) {
    throw std::invalid_argument("local_subgraph: node out of range");
  }
  if (gamma < 1) throw std::invalid_argument("local_subgraph: gamma must be >= 1");
  const auto dist = distances_from(g, i);
  auto in_ball = [&](int v) {
    const int d = dist[static_cast<std::size_t>(v)];
    return d >= 0 && d <= gamma;
  };
  Graph local(g.node_count());
  for (const auto& [u, w] : g.edges()) {
    if (in_ball(u) && in_ball(w)) local.add_edge(u, w);
  }
  return local;
}

SeparatorResult local_separator(const Graph& g, int i, int j, int gamma) {
  if (i == j) throw std::invalid_argument("local_separator: i and j must differ");
  if (g.has_edge(i, j)) {
    throw std::invalid_argument("local_separator requires a nonadjacent pair");
  }
  return separator_in(local_subgraph(g, i, gamma), i, j, gamma);
}

LocalSeparationReport check_local_separation(const Graph& g, int eta, int gamma) {
  if (eta < 0) throw std::invalid_argument("eta must be >= 0");
  if (gamma < 1) throw std::invalid_argument("gamma must be >= 1");
  LocalSeparationReport report;
  report.worst_size = 0;
  const int p = g.node_count();
  for (int i = 0; i < p; ++i) {
    const auto dist = distances_from(g, i);
    Graph local = local_subgraph(g, i, gamma);
    for (int j = 0; j < p; ++j) {
      if (j == i || g.has_edge(i, j)) continue;
      // Nodes outside the ball keep no edges, so they are separated for free.
      const int dj = dist[static_cast<std::size_t>(j)];
      if (dj < 0 || dj > gamma) continue;
      const SeparatorResult sep = separator_in(local, i, j, gamma);
      if (sep.size > report.worst_size) {
        report.worst_size = sep.size;
        report.worst_pair = {i, j};
      }
    }
  }
  report.holds = report.worst_size <= eta;
  return report;
}

}  // namespace isinglearn
