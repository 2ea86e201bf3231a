#pragma once

#include <cstdint>
#include <string>

#include "isinglearn/graph.hpp"

namespace isinglearn {

enum class GraphKind { Cycle, ErdosRenyi, SmallWorld, RandomRegular };

std::string kind_name(GraphKind kind);
GraphKind parse_kind(const std::string& name);

/// Parameters for the graph ensembles used in the synthetic benchmark.
/// `c` is the average degree of the Erdos-Renyi component, `d` the ring
/// degree of the small-world local graph, `delta` the degree of the random
/// regular ensemble.
struct EnsembleSpec {
  GraphKind kind = GraphKind::Cycle;
  int p = 0;
  double c = 0.0;
  int d = 2;
  int delta = 3;
  std::uint64_t seed = 0;
};

Graph generate(const EnsembleSpec& spec);

/// The p-cycle 0-1-...-(p-1)-0. Requires p >= 3.
Graph gen_cycle(int p);

/// Each of the p(p-1)/2 node pairs appears independently with probability
/// c/p. Requires 0 <= c <= p. Deterministic given seed.
Graph gen_erdos_renyi(int p, double c, std::uint64_t seed);

/// Union of a ring lattice (d/2 neighbors per side) and an independent
/// Erdos-Renyi graph with edge probability c/p. Requires d even, d < p.
Graph gen_small_world(int p, int d, double c, std::uint64_t seed);

/// Uniform simple delta-regular graph via the pairing (configuration) model
/// with rejection of self-loops and multi-edges. Requires p*delta even and
/// delta < p. Throws GenerationError after the retry cap.
Graph gen_random_regular(int p, int delta, std::uint64_t seed);

}  // namespace isinglearn
