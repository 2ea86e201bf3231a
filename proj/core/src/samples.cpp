#include "isinglearn/samples.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "isinglearn/errors.hpp"

namespace isinglearn {
namespace {

constexpr std::array<char, 4> kMagic = {'I', 'S', 'P', 'N'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void write_le(std::ofstream& out, T value) {
  std::array<unsigned char, sizeof(T)> bytes{};
  for (std::size_t b = 0; b < sizeof(T); ++b) {
    bytes[b] = static_cast<unsigned char>((value >> (8 * b)) & 0xff);
  }
  out.write(reinterpret_cast<const char*>(bytes.data()), sizeof(T));
}

template <typename T>
T read_le(std::ifstream& in) {
  std::array<unsigned char, sizeof(T)> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), sizeof(T));
  T value = 0;
  for (std::size_t b = 0; b < sizeof(T); ++b) {
    value |= static_cast<T>(bytes[b]) << (8 * b);
  }
  return value;
}

void require_binary(const SampleSet& samples, const char* what) {
  if (samples.alphabet_size() != 2) {
    throw std::invalid_argument(std::string(what) +
                                " supports the binary alphabet only");
  }
}

}  // namespace

SampleSet::SampleSet(int n, int p, int alphabet_size)
    : n_(n), p_(p), alphabet_(alphabet_size) {
  if (n < 0 || p < 0) throw std::invalid_argument("sample dimensions must be >= 0");
  if (alphabet_size < 2) throw std::invalid_argument("alphabet size must be >= 2");
  data_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(p), 0);
}

SampleSet SampleSet::from_spins(int n, int p, const std::vector<int>& spins) {
  if (spins.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(p)) {
    throw std::invalid_argument("spin buffer size does not match n*p");
  }
  SampleSet out(n, p, 2);
  for (std::size_t idx = 0; idx < spins.size(); ++idx) {
    if (spins[idx] != -1 && spins[idx] != 1) {
      throw std::invalid_argument("spin entries must be -1 or +1");
    }
    out.data_[idx] = spins[idx] > 0 ? 1 : 0;
  }
  return out;
}

void SampleSet::set_symbol(int row, int col, std::uint8_t value) {
  if (value >= alphabet_) throw std::invalid_argument("symbol outside alphabet");
  data_[static_cast<std::size_t>(row) * static_cast<std::size_t>(p_) +
        static_cast<std::size_t>(col)] = value;
}

SampleSet load_samples_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open sample file: " + path.string());
  std::vector<int> spins;
  int p = -1;
  int n = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string field;
    int cols = 0;
    while (std::getline(row, field, ',')) {
      if (field == "1" || field == "+1") {
        spins.push_back(+1);
      } else if (field == "-1") {
        spins.push_back(-1);
      } else {
        throw std::invalid_argument("sample CSV entries must be -1 or +1, got '" +
                                    field + "'");
      }
      ++cols;
    }
    if (p < 0) {
      p = cols;
    } else if (cols != p) {
      throw std::invalid_argument("sample CSV rows have inconsistent widths");
    }
    ++n;
  }
  if (n == 0) throw std::invalid_argument("sample CSV contains no rows");
  return SampleSet::from_spins(n, p, spins);
}

void save_samples_csv(const SampleSet& samples, const std::filesystem::path& path) {
  require_binary(samples, "sample CSV");
  std::ofstream out(path);
  if (!out) throw IoError("cannot write sample file: " + path.string());
  for (int row = 0; row < samples.n(); ++row) {
    for (int col = 0; col < samples.dimension(); ++col) {
      if (col > 0) out << ',';
      out << (samples.spin(row, col) > 0 ? "1" : "-1");
    }
    out << '\n';
  }
  if (!out) throw IoError("error writing sample file: " + path.string());
}

SampleSet load_samples_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open sample file: " + path.string());
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) {
    throw std::invalid_argument("bad magic in binary sample file: " + path.string());
  }
  const auto version = read_le<std::uint32_t>(in);
  if (version != kVersion) {
    throw std::invalid_argument("unsupported binary sample version " +
                                std::to_string(version));
  }
  const auto n = read_le<std::uint64_t>(in);
  const auto p = read_le<std::uint32_t>(in);
  SampleSet out(static_cast<int>(n), static_cast<int>(p), 2);
  const std::size_t stride = (p + 7) / 8;
  std::vector<char> row(stride);
  for (std::uint64_t r = 0; r < n; ++r) {
    in.read(row.data(), static_cast<std::streamsize>(stride));
    if (!in) throw IoError("truncated binary sample file: " + path.string());
    for (std::uint32_t c = 0; c < p; ++c) {
      const auto byte = static_cast<unsigned char>(row[c / 8]);
      out.set_symbol(static_cast<int>(r), static_cast<int>(c),
                     (byte >> (c % 8)) & 1u);
    }
  }
  return out;
}

void save_samples_binary(const SampleSet& samples, const std::filesystem::path& path) {
  require_binary(samples, "binary sample format");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write sample file: " + path.string());
  out.write(kMagic.data(), kMagic.size());
  write_le<std::uint32_t>(out, kVersion);
  write_le<std::uint64_t>(out, static_cast<std::uint64_t>(samples.n()));
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(samples.dimension()));
  const std::size_t stride = (static_cast<std::size_t>(samples.dimension()) + 7) / 8;
  std::vector<unsigned char> row(stride);
  for (int r = 0; r < samples.n(); ++r) {
    std::fill(row.begin(), row.end(), 0);
    for (int c = 0; c < samples.dimension(); ++c) {
      if (samples.symbol(r, c)) {
        row[static_cast<std::size_t>(c) / 8] |=
            static_cast<unsigned char>(1u << (c % 8));
      }
    }
    out.write(reinterpret_cast<const char*>(row.data()),
              static_cast<std::streamsize>(stride));
  }
  if (!out) throw IoError("error writing sample file: " + path.string());
}

}  // namespace isinglearn
