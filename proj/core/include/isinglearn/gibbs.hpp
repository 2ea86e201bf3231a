#pragma once

#include <cstdint>

#include "isinglearn/model.hpp"
#include "isinglearn/samples.hpp"

namespace isinglearn {

struct GibbsOptions {
  int burnin_sweeps = 200;
  int thin_sweeps = 5;
};

/// Single-site Gibbs sampler with a systematic scan over nodes 0..p-1.
/// Site update: P(X_i = +1 | rest) = 1 / (1 + exp(-2 (sum_j J_ij x_j + h_i))).
/// The chain starts from a random spin configuration drawn from the same
/// seed, discards `burnin_sweeps` full sweeps, then records one sample every
/// `thin_sweeps` sweeps. Deterministic given seed.
SampleSet gibbs_sample(const IsingModel& model, int n, const GibbsOptions& options,
                       std::uint64_t seed);

SampleSet gibbs_sample(const IsingModel& model, int n, std::uint64_t seed);

}  // namespace isinglearn
