#include "isinglearn/exact.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "isinglearn/errors.hpp"
#include "isinglearn/rng.hpp"

namespace isinglearn {
namespace {

void check_pair_and_set(int p, int i, int j, std::span<const int> s) {
  if (i == j) throw std::invalid_argument("i and j must differ");
  if (i < 0 || i >= p || j < 0 || j >= p) {
    throw std::invalid_argument("node index out of range");
  }
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (s[a] == i || s[a] == j) {
      throw std::invalid_argument("conditioning set overlaps {i, j}");
    }
    if (s[a] < 0 || s[a] >= p) {
      throw std::invalid_argument("conditioning node out of range");
    }
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (s[a] == s[b]) throw std::invalid_argument("conditioning set has duplicates");
    }
  }
}

/// Visits all sorted index combinations of `candidates`, by increasing
/// cardinality (0..max_size) then lexicographically. Visitor returns false
/// to stop the enumeration.
void for_each_subset(const std::vector<int>& candidates, int max_size,
                     const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> current;
  std::function<bool(std::size_t, int)> extend = [&](std::size_t start,
                                                     int remaining) -> bool {
    if (remaining == 0) return visit(current);
    for (std::size_t idx = start; idx < candidates.size(); ++idx) {
      current.push_back(candidates[idx]);
      const bool keep_going = extend(idx + 1, remaining - 1);
      current.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  for (int size = 0; size <= max_size; ++size) {
    if (size > static_cast<int>(candidates.size())) break;
    if (!extend(0, size)) return;
  }
}

}  // namespace

ExactJoint::ExactJoint(int dimension, std::vector<double> probabilities,
                       double log_partition)
    : p_(dimension), table_(std::move(probabilities)), log_partition_(log_partition) {
  if (table_.size() != (std::size_t{1} << p_)) {
    throw std::invalid_argument("joint table must have 2^p entries");
  }
}

ExactJoint exact_joint(const IsingModel& model) {
  const int p = model.node_count();
  if (p < 1) throw std::invalid_argument("model must have at least one node");
  if (p > kMaxExactNodes) {
    throw CapacityError("exact inference is capped at p <= " +
                        std::to_string(kMaxExactNodes));
  }
  const std::size_t states = std::size_t{1} << p;
  const auto edges = model.graph().edges();
  std::vector<double> energy(states, 0.0);
  for (std::size_t config = 0; config < states; ++config) {
    double e = 0.0;
    for (std::size_t idx = 0; idx < edges.size(); ++idx) {
      const auto [a, b] = edges[idx];
      const int sa = (config >> a) & 1u ? +1 : -1;
      const int sb = (config >> b) & 1u ? +1 : -1;
      e += model.couplings()[idx] * sa * sb;
    }
    for (int v = 0; v < p; ++v) {
      e += model.field(v) * ((config >> v) & 1u ? +1 : -1);
    }
    energy[config] = e;
  }
  const double max_energy = *std::max_element(energy.begin(), energy.end());
  double total = 0.0;
  for (double& e : energy) {
    e = std::exp(e - max_energy);
    total += e;
  }
  for (double& e : energy) e /= total;
  return ExactJoint(p, std::move(energy), max_energy + std::log(total));
}

double exact_cond_variation(const ExactJoint& joint, int i, int j,
                            std::span<const int> s) {
  const int p = joint.dimension();
  check_pair_and_set(p, i, j, s);
  const std::size_t contexts = std::size_t{1} << s.size();
  // marginal[xi][xj][z] accumulated over the full table
  std::vector<double> marginal(4 * contexts, 0.0);
  const std::size_t states = std::size_t{1} << p;
  for (std::size_t config = 0; config < states; ++config) {
    const std::size_t xi = (config >> i) & 1u;
    const std::size_t xj = (config >> j) & 1u;
    std::size_t z = 0;
    for (std::size_t a = 0; a < s.size(); ++a) {
      z |= ((config >> s[a]) & 1u) << a;
    }
    marginal[(z * 2 + xj) * 2 + xi] += joint.prob(static_cast<std::uint32_t>(config));
  }
  double best = 2.0;
  for (std::size_t z = 0; z < contexts; ++z) {
    const double plus_total = marginal[(z * 2 + 1) * 2 + 0] + marginal[(z * 2 + 1) * 2 + 1];
    const double minus_total = marginal[(z * 2 + 0) * 2 + 0] + marginal[(z * 2 + 0) * 2 + 1];
    double tv = 0.0;
    for (std::size_t xi = 0; xi < 2; ++xi) {
      tv += std::abs(marginal[(z * 2 + 1) * 2 + xi] / plus_total -
                     marginal[(z * 2 + 0) * 2 + xi] / minus_total);
    }
    best = std::min(best, 0.5 * tv);
  }
  return best;
}

MinCondVariation exact_min_cond_variation(const ExactJoint& joint, int i, int j,
                                          int eta) {
  if (eta < 0) throw std::invalid_argument("eta must be >= 0");
  check_pair_and_set(joint.dimension(), i, j, {});
  std::vector<int> candidates;
  for (int v = 0; v < joint.dimension(); ++v) {
    if (v != i && v != j) candidates.push_back(v);
  }
  MinCondVariation result;
  result.value = 2.0;
  for_each_subset(candidates, eta, [&](const std::vector<int>& subset) {
    const double value = exact_cond_variation(joint, i, j, subset);
    if (value < result.value) {
      result.value = value;
      result.argmin = subset;
    }
    return result.value != 0.0;
  });
  return result;
}

double nu_max_exact(const IsingModel& model, int eta) {
  const ExactJoint joint = exact_joint(model);
  const int p = model.node_count();
  double worst = 0.0;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (j == i || model.graph().has_edge(i, j)) continue;
      worst = std::max(worst, exact_min_cond_variation(joint, i, j, eta).value);
    }
  }
  return worst;
}

double p_min_exact(const IsingModel& model, int eta) {
  if (eta < 0) throw std::invalid_argument("eta must be >= 0");
  const ExactJoint joint = exact_joint(model);
  const int p = model.node_count();
  const std::size_t states = std::size_t{1} << p;
  std::vector<int> candidates(static_cast<std::size_t>(p));
  for (int v = 0; v < p; ++v) candidates[static_cast<std::size_t>(v)] = v;
  double best = 1.0;
  for_each_subset(candidates, eta + 1, [&](const std::vector<int>& subset) {
    if (subset.empty()) return true;
    const std::size_t contexts = std::size_t{1} << subset.size();
    std::vector<double> marginal(contexts, 0.0);
    for (std::size_t config = 0; config < states; ++config) {
      std::size_t z = 0;
      for (std::size_t a = 0; a < subset.size(); ++a) {
        z |= ((config >> subset[a]) & 1u) << a;
      }
      marginal[z] += joint.prob(static_cast<std::uint32_t>(config));
    }
    best = std::min(best, *std::min_element(marginal.begin(), marginal.end()));
    return true;
  });
  return best;
}

SampleSet sample_from_joint(const ExactJoint& joint, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample count must be >= 1");
  std::vector<double> cdf(joint.table().size());
  double acc = 0.0;
  for (std::size_t idx = 0; idx < cdf.size(); ++idx) {
    acc += joint.table()[idx];
    cdf[idx] = acc;
  }
  cdf.back() = 1.0;
  Rng rng(seed);
  SampleSet out(n, joint.dimension(), 2);
  for (int row = 0; row < n; ++row) {
    const double u = rng.uniform_unit();
    const auto pos = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto config = static_cast<std::uint32_t>(pos - cdf.begin());
    for (int v = 0; v < joint.dimension(); ++v) {
      out.set_symbol(row, v, static_cast<std::uint8_t>((config >> v) & 1u));
    }
  }
  return out;
}

}  // namespace isinglearn
