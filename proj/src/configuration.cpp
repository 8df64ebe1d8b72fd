#include "rca/configuration.hpp"

#include <numeric>

#include "rca/error.hpp"

namespace rca {

Configuration::Configuration(int size, std::uint64_t word) : size_(size) {
  if (size < 1 || size > kMaxCells) {
    throw Error(ErrorKind::InvalidArgument,
                "configuration size must be in [1, 64], got " + std::to_string(size));
  }
  word_ = word & mask();
}

Configuration Configuration::from_string(std::string_view bits) {
  Configuration config(static_cast<int>(bits.size()));
  for (int i = 0; i < config.size(); ++i) {
    const char c = bits[static_cast<std::size_t>(i)];
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::InvalidArgument, "configuration string must be 0/1 only");
    }
    config.set(i, c == '1');
  }
  return config;
}

Configuration Configuration::random(int size, std::mt19937_64& rng) {
  return Configuration(size, rng());
}

std::string Configuration::to_string() const {
  std::string out(static_cast<std::size_t>(size_), '0');
  for (int i = 0; i < size_; ++i) {
    if ((*this)[i]) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

int hamming_distance(const Configuration& a, const Configuration& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::LengthMismatch, "hamming distance of unequal configurations");
  }
  return std::popcount(a.word() ^ b.word());
}

const char* to_string(NeighborhoodMode mode) noexcept {
  return mode == NeighborhoodMode::Spread ? "spread" : "standard";
}

NeighborhoodMode parse_mode(std::string_view text) {
  if (text == "standard") return NeighborhoodMode::Standard;
  if (text == "spread") return NeighborhoodMode::Spread;
  throw Error(ErrorKind::InvalidArgument, "unknown neighborhood mode: " + std::string(text));
}

bool spread_valid(int size) noexcept { return size > 0 && std::gcd(kSpreadFactor, size) == 1; }

}  // namespace rca
