#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace isinglearn {

/// Deterministic random source. Wraps std::mt19937_64 (whose output sequence
/// is fully specified by the standard) and maps raw bits to distributions
/// manually, so identical seeds give identical draws on every platform and
/// standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound), bound >= 1. Rejection sampling keeps the
  /// result exactly uniform.
  std::uint64_t uniform_int(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t draw;
    do {
      draw = next_u64();
    } while (draw >= limit);
    return draw % bound;
  }

  /// Fair spin in {-1, +1}.
  int spin() { return (next_u64() & 1u) ? +1 : -1; }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[uniform_int(i)]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

/// splitmix64 step; the standard way to fan one master seed out into
/// independent streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Derives a child seed from a master seed and a path of indices, e.g.
/// (cell, trial, n, purpose). Distinct paths give statistically independent
/// streams; the mapping is stable across runs.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t state = master;
  std::uint64_t out = splitmix64(state);
  for (std::uint64_t step : path) {
    state ^= step + 0x632be59bd9b4e019ull;
    out = splitmix64(state);
  }
  return out;
}

}  // namespace isinglearn
