#pragma once

#include <cstdint>
#include <random>

namespace rca {

/// Generator for item `index` of a seeded experiment. Items draw from
/// independent streams, so results do not depend on evaluation order.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace rca
