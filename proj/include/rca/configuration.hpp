#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace rca {

inline constexpr int kMaxCells = 64;

/// One CA configuration q_t: a ring of 1..64 binary cells.
///
/// Cell 0 is stored in the most significant used bit of `word()`, so the
/// word read as an N-bit integer spells the cells left to right. This is
/// also the big-endian byte layout used for files.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(int size, std::uint64_t word = 0);

  /// Cells from a string of '0'/'1', cell 0 first.
  static Configuration from_string(std::string_view bits);
  static Configuration random(int size, std::mt19937_64& rng);

  int size() const noexcept { return size_; }
  std::uint64_t word() const noexcept { return word_; }
  std::uint64_t mask() const noexcept {
    return size_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size_) - 1;
  }

  bool operator[](int cell) const noexcept {
    return (word_ >> (size_ - 1 - cell)) & 1u;
  }
  void set(int cell, bool value) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (size_ - 1 - cell);
    word_ = value ? (word_ | bit) : (word_ & ~bit);
  }
  void flip(int cell) noexcept { word_ ^= std::uint64_t{1} << (size_ - 1 - cell); }

  int popcount() const noexcept { return std::popcount(word_); }

  Configuration operator~() const noexcept { return Configuration(size_, ~word_ & mask()); }

  std::string to_string() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  int size_ = 0;
  std::uint64_t word_ = 0;
};

int hamming_distance(const Configuration& a, const Configuration& b);

/// The pair (q_{t-1}, q_t) evolved by a second-order CA.
struct CAState {
  Configuration prev;
  Configuration curr;

  int size() const noexcept { return curr.size(); }
  friend bool operator==(const CAState&, const CAState&) = default;
};

enum class NeighborhoodMode {
  /// Cell i is rewritten from its own neighborhood.
  Standard,
  /// The rule output for neighborhood i lands on cell 5i mod N.
  Spread,
};

inline constexpr int kSpreadFactor = 5;

const char* to_string(NeighborhoodMode mode) noexcept;
NeighborhoodMode parse_mode(std::string_view text);

/// Whether i -> 5i mod N is a permutation of the ring.
bool spread_valid(int size) noexcept;

}  // namespace rca
