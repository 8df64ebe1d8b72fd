#pragma once

#include <cstdint>
#include <vector>

#include "rca/configuration.hpp"
#include "rca/rule.hpp"

namespace rca {

/// Neighborhood index of cell i, wrapping around the ring:
/// sum over j in [-r, r] of config[(i+j) mod N] * 2^(r-j).
std::uint32_t neighborhood_code(const Configuration& config, int cell, int radius);

/// Advances (q_{t-1}, q_t) to (q_t, q_{t+1}).
[[nodiscard]] CAState step_forward(const CAState& state, const RulePair& rules,
                     NeighborhoodMode mode = NeighborhoodMode::Standard);

/// Rewinds (q_t, q_{t+1}) to (q_{t-1}, q_t). Needs a complementary pair.
[[nodiscard]] CAState step_backward(const CAState& state, const RulePair& rules,
                      NeighborhoodMode mode = NeighborhoodMode::Standard);

enum class Direction { Forward, Backward };

/// Applies `steps` single steps. When `trajectory` is non-null the state
/// after every step is appended to it.
[[nodiscard]] CAState iterate(CAState state, const RulePair& rules, NeighborhoodMode mode, int steps,
                Direction direction = Direction::Forward,
                std::vector<CAState>* trajectory = nullptr);

/// Throws unless `state` has two configurations of equal size that can
/// host the rule's neighborhood and, for Spread, a valid permutation.
void validate_state(const CAState& state, const RulePair& rules, NeighborhoodMode mode);

}  // namespace rca
