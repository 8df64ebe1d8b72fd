#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rca/cipher.hpp"

namespace rca {

/// Strict-avalanche experiment over random plaintexts.
///
/// Each trial draws a plaintext q_1, a seed q_0 and one plaintext bit to
/// flip, then evolves both versions side by side. With `rule` unset every
/// trial draws its own uniformly random rule.
struct SacConfig {
  int block_size = 32;
  int radius = 2;
  NeighborhoodMode mode = NeighborhoodMode::Standard;
  int max_iterations = 64;
  int trials = 10000;
  std::optional<RulePair> rule;
  std::uint64_t seed = 1;
  /// 0 picks the hardware thread count. Results do not depend on it.
  unsigned threads = 0;
};

struct SacCurve {
  /// Entry t-1 is the mean fraction of differing cells after t iterations.
  std::vector<double> mean_flip_fraction;
  int trials = 0;
  SacConfig config;
};

/// Per-iteration Hamming distance / N between the trajectories from
/// (q0, plain) and (q0, plain with `flip_pos` flipped). No flip when
/// `flip_pos` is empty.
std::vector<double> sac_trial(const RulePair& rules, NeighborhoodMode mode, const Block& plain,
                              const Block& q0, std::optional<int> flip_pos, int max_iterations);

SacCurve sac_curve(const SacConfig& config);

inline constexpr double kSacEpsilon = 0.02;
inline constexpr int kSacWindow = 5;

/// First iteration t (1-based) from which `window` consecutive values stay
/// within [0.5 - epsilon, 0.5 + epsilon].
std::optional<int> iterations_to_sac(const SacCurve& curve, double epsilon = kSacEpsilon,
                                     int window = kSacWindow);
std::optional<int> iterations_to_sac(const std::vector<double>& curve, double epsilon = kSacEpsilon,
                                     int window = kSacWindow);

struct ModeComparison {
  SacCurve standard;
  SacCurve spread;
  std::optional<int> standard_iterations;
  std::optional<int> spread_iterations;
  /// spread / standard, when both reach the band.
  std::optional<double> ratio;
};

/// Runs the same trials (rules, plaintexts, flips) under both neighborhoods.
ModeComparison compare_modes(const SacConfig& config, double epsilon = kSacEpsilon,
                             int window = kSacWindow);

}  // namespace rca
