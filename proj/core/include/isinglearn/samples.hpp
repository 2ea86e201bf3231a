#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace isinglearn {

/// n observations of a p-dimensional discrete vector. Entries are stored as
/// symbol indices 0..alphabet_size-1; for the binary (Ising) alphabet the
/// symbols 0/1 map to spins -1/+1.
class SampleSet {
 public:
  SampleSet() = default;
  SampleSet(int n, int p, int alphabet_size = 2);

  /// Builds a binary sample set from row-major spin entries (-1/+1).
  static SampleSet from_spins(int n, int p, const std::vector<int>& spins);

  int n() const { return n_; }
  int dimension() const { return p_; }
  int alphabet_size() const { return alphabet_; }

  std::uint8_t symbol(int row, int col) const {
    return data_[static_cast<std::size_t>(row) * static_cast<std::size_t>(p_) +
                 static_cast<std::size_t>(col)];
  }
  void set_symbol(int row, int col, std::uint8_t value);

  /// Spin view of a binary entry: symbol 0 -> -1, symbol 1 -> +1.
  int spin(int row, int col) const { return symbol(row, col) ? +1 : -1; }

  bool operator==(const SampleSet& other) const = default;

 private:
  int n_ = 0;
  int p_ = 0;
  int alphabet_ = 2;
  std::vector<std::uint8_t> data_;
};

// CSV format: one row per sample, comma-separated entries in {-1, +1}
// (binary alphabet only).
SampleSet load_samples_csv(const std::filesystem::path& path);
void save_samples_csv(const SampleSet& samples, const std::filesystem::path& path);

// Compact binary format: magic "ISPN", u32 version, u64 n, u32 p, then
// bit-packed rows (LSB-first within each byte, rows padded to byte
// boundaries), little-endian header fields. Binary alphabet only.
SampleSet load_samples_binary(const std::filesystem::path& path);
void save_samples_binary(const SampleSet& samples, const std::filesystem::path& path);

}  // namespace isinglearn
