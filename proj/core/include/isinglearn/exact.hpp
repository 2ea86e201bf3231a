#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "isinglearn/model.hpp"
#include "isinglearn/samples.hpp"

namespace isinglearn {

/// Exact-inference table cap: 2^20 states.
inline constexpr int kMaxExactNodes = 20;

/// Full joint distribution of a small model as a table of 2^p probabilities.
/// Configuration index: bit i set iff x_i = +1.
class ExactJoint {
 public:
  ExactJoint(int dimension, std::vector<double> probabilities, double log_partition);

  int dimension() const { return p_; }
  double prob(std::uint32_t config) const { return table_[config]; }
  const std::vector<double>& table() const { return table_; }
  double log_partition() const { return log_partition_; }

  int spin(std::uint32_t config, int node) const {
    return (config >> node) & 1u ? +1 : -1;
  }

 private:
  int p_;
  std::vector<double> table_;
  double log_partition_;
};

/// Brute-force joint of the model, normalized to sum 1. Throws CapacityError
/// for p > 20.
ExactJoint exact_joint(const IsingModel& model);

/// Conditional variation distance: the minimum over conditioning
/// configurations x_S of the total variation between P(X_i | X_j=+1, x_S)
/// and P(X_i | X_j=-1, x_S).
double exact_cond_variation(const ExactJoint& joint, int i, int j,
                            std::span<const int> s);

struct MinCondVariation {
  double value = 0.0;
  std::vector<int> argmin;  ///< ties: smallest cardinality, then lexicographic
};

/// Minimum of exact_cond_variation over all conditioning sets S disjoint
/// from {i, j} with |S| <= eta, enumerated by increasing cardinality then
/// lexicographically; stops early on an exact zero.
MinCondVariation exact_min_cond_variation(const ExactJoint& joint, int i, int j,
                                          int eta);

/// Maximum over nonadjacent ordered pairs (i, j) of the min-over-S
/// conditional variation distance. Zero when every nonedge pair is exactly
/// separated by some set of size <= eta.
double nu_max_exact(const IsingModel& model, int eta);

/// Smallest marginal probability P(X_S = x_S) over node sets with
/// 1 <= |S| <= eta+1 and all configurations x_S.
double p_min_exact(const IsingModel& model, int eta);

/// n i.i.d. samples drawn from the exact table by inverse-CDF lookup.
/// Deterministic given seed. Oracle utility for statistical tests.
SampleSet sample_from_joint(const ExactJoint& joint, int n, std::uint64_t seed);

}  // namespace isinglearn
