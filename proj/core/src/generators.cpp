#include "isinglearn/generators.hpp"

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "isinglearn/errors.hpp"
#include "isinglearn/rng.hpp"

namespace isinglearn {
namespace {

constexpr int kRegularRetryCap = 1000;

void add_er_edges(Graph& g, int p, double c, Rng& rng) {
  const double prob = c / static_cast<double>(p);
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (rng.uniform_unit() < prob && !g.has_edge(i, j)) {
        g.add_edge(i, j);
      }
    }
  }
}

}  // namespace

std::string kind_name(GraphKind kind) {
  switch (kind) {
    case GraphKind::Cycle: return "cycle";
    case GraphKind::ErdosRenyi: return "er";
    case GraphKind::SmallWorld: return "smallworld";
    case GraphKind::RandomRegular: return "regular";
  }
  throw std::invalid_argument("unknown graph kind");
}

GraphKind parse_kind(const std::string& name) {
  if (name == "cycle") return GraphKind::Cycle;
  if (name == "er" || name == "erdos-renyi") return GraphKind::ErdosRenyi;
  if (name == "smallworld" || name == "ws") return GraphKind::SmallWorld;
  if (name == "regular") return GraphKind::RandomRegular;
  throw std::invalid_argument("unknown graph kind: " + name);
}

Graph generate(const EnsembleSpec& spec) {
  switch (spec.kind) {
    case GraphKind::Cycle: return gen_cycle(spec.p);
    case GraphKind::ErdosRenyi: return gen_erdos_renyi(spec.p, spec.c, spec.seed);
    case GraphKind::SmallWorld:
      return gen_small_world(spec.p, spec.d, spec.c, spec.seed);
    case GraphKind::RandomRegular:
      return gen_random_regular(spec.p, spec.delta, spec.seed);
  }
  throw std::invalid_argument("unknown graph kind");
}

Graph gen_cycle(int p) {
  if (p < 3) throw std::invalid_argument("cycle requires p >= 3");
  Graph g(p);
  for (int i = 0; i < p; ++i) g.add_edge(i, (i + 1) % p);
  return g;
}

Graph gen_erdos_renyi(int p, double c, std::uint64_t seed) {
  if (p < 0) throw std::invalid_argument("node count must be >= 0");
  if (c < 0.0 || c > static_cast<double>(p)) {
    throw std::invalid_argument("average degree c must lie in [0, p]");
  }
  Graph g(p);
  Rng rng(seed);
  add_er_edges(g, p, c, rng);
  return g;
}

Graph gen_small_world(int p, int d, double c, std::uint64_t seed) {
  if (p < 3) throw std::invalid_argument("small-world requires p >= 3");
  if (d <= 0 || d % 2 != 0 || d >= p) {
    throw std::invalid_argument("ring degree d must be even, positive and < p");
  }
  if (c < 0.0 || c > static_cast<double>(p)) {
    throw std::invalid_argument("average degree c must lie in [0, p]");
  }
  Graph g(p);
  for (int i = 0; i < p; ++i) {
    for (int step = 1; step <= d / 2; ++step) {
      const int j = (i + step) % p;
      if (!g.has_edge(i, j)) g.add_edge(i, j);
    }
  }
  Rng rng(seed);
  add_er_edges(g, p, c, rng);
  return g;
}

Graph gen_random_regular(int p, int delta, std::uint64_t seed) {
  if (p <= 0 || delta < 0 || delta >= p) {
    throw std::invalid_argument("regular graph requires 0 <= delta < p");
  }
  if ((static_cast<long long>(p) * delta) % 2 != 0) {
    throw std::invalid_argument("p*delta must be even for a regular graph");
  }
  std::uint64_t state = seed;
  for (int attempt = 0; attempt < kRegularRetryCap; ++attempt) {
    Rng rng(splitmix64(state));
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(p) * delta);
    for (int v = 0; v < p; ++v) {
      for (int s = 0; s < delta; ++s) stubs.push_back(v);
    }
    rng.shuffle(stubs);
    std::set<std::pair<int, int>> edges;
    bool ok = true;
    for (std::size_t m = 0; m + 1 < stubs.size(); m += 2) {
      int a = stubs[m];
      int b = stubs[m + 1];
      if (a == b) { ok = false; break; }
      if (a > b) std::swap(a, b);
      if (!edges.emplace(a, b).second) { ok = false; break; }
    }
    if (!ok) continue;
    Graph g(p);
    for (const auto& [a, b] : edges) g.add_edge(a, b);
    return g;
  }
  throw GenerationError("random regular generation failed after " +
                        std::to_string(kRegularRetryCap) + " attempts");
}

}  // namespace isinglearn
