#include "rca/engine.hpp"

#include "rca/error.hpp"

namespace rca {

namespace {

inline bool cell_of(std::uint64_t word, int size, int cell) {
  return (word >> (size - 1 - cell)) & 1u;
}

// Code of cell 0's window; later windows slide one cell at a time.
inline std::uint32_t first_window(std::uint64_t word, int size, int radius) {
  std::uint32_t code = 0;
  for (int j = -radius; j <= radius; ++j) {
    code = (code << 1) | cell_of(word, size, (j + size) % size);
  }
  return code;
}

// Applies the rule pair to every window of `source`. The bit for window i
// is selected by selector[i] (r1 on 1, r2 on 0) and written to cell i, or
// to 5i mod N when spreading.
template <bool kSpread>
std::uint64_t apply(const RulePair& rules, std::uint64_t source, std::uint64_t selector,
                    int size) {
  const int radius = rules.radius();
  const std::uint32_t window_mask = (std::uint32_t{1} << (2 * radius + 1)) - 1;
  const RuleTable& r1 = rules.r1();
  const RuleTable& r2 = rules.r2();

  std::uint32_t code = first_window(source, size, radius);
  std::uint64_t out = 0;
  int target = 0;
  int incoming = radius + 1;
  for (int i = 0; i < size; ++i) {
    const bool bit = cell_of(selector, size, i) ? r1[code] : r2[code];
    out |= std::uint64_t{bit} << (size - 1 - target);

    if (incoming >= size) incoming -= size;
    code = ((code << 1) & window_mask) | cell_of(source, size, incoming);
    ++incoming;
    if constexpr (kSpread) {
      target += kSpreadFactor;
      if (target >= size) target %= size;
    } else {
      ++target;
    }
  }
  return out;
}

// Inverse step for a complementary pair: q_{t-1}[i] = r1(window_i(q_t)) XNOR
// q_{t+1}[i], reading q_{t+1} at 5i mod N when spreading.
template <bool kSpread>
std::uint64_t unapply(const RuleTable& r1, std::uint64_t middle, std::uint64_t next,
                      int size) {
  const int radius = r1.radius();
  const std::uint32_t window_mask = (std::uint32_t{1} << (2 * radius + 1)) - 1;

  std::uint32_t code = first_window(middle, size, radius);
  std::uint64_t out = 0;
  int source = 0;
  int incoming = radius + 1;
  for (int i = 0; i < size; ++i) {
    const bool bit = r1[code] == cell_of(next, size, source);
    out |= std::uint64_t{bit} << (size - 1 - i);

    if (incoming >= size) incoming -= size;
    code = ((code << 1) & window_mask) | cell_of(middle, size, incoming);
    ++incoming;
    if constexpr (kSpread) {
      source += kSpreadFactor;
      if (source >= size) source %= size;
    } else {
      ++source;
    }
  }
  return out;
}

CAState forward_unchecked(const CAState& s, const RulePair& rules, NeighborhoodMode mode) {
  const int n = s.size();
  const std::uint64_t next = mode == NeighborhoodMode::Spread
                                 ? apply<true>(rules, s.curr.word(), s.prev.word(), n)
                                 : apply<false>(rules, s.curr.word(), s.prev.word(), n);
  return {s.curr, Configuration(n, next)};
}

CAState backward_unchecked(const CAState& s, const RulePair& rules, NeighborhoodMode mode) {
  const int n = s.size();
  const std::uint64_t before = mode == NeighborhoodMode::Spread
                                   ? unapply<true>(rules.r1(), s.prev.word(), s.curr.word(), n)
                                   : unapply<false>(rules.r1(), s.prev.word(), s.curr.word(), n);
  return {Configuration(n, before), s.prev};
}

}  // namespace

std::uint32_t neighborhood_code(const Configuration& config, int cell, int radius) {
  const int n = config.size();
  if (n < 2 * radius + 1) {
    throw Error(ErrorKind::InvalidArgument, "configuration narrower than the neighborhood");
  }
  std::uint32_t code = 0;
  for (int j = -radius; j <= radius; ++j) {
    code = (code << 1) | config[((cell + j) % n + n) % n];
  }
  return code;
}

void validate_state(const CAState& state, const RulePair& rules, NeighborhoodMode mode) {
  const int n = state.curr.size();
  if (state.prev.size() != n) {
    throw Error(ErrorKind::LengthMismatch, "q_{t-1} and q_t differ in size");
  }
  if (n < 2 * rules.radius() + 1) {
    throw Error(ErrorKind::InvalidArgument,
                "size " + std::to_string(n) + " cannot hold a radius-" +
                    std::to_string(rules.radius()) + " neighborhood");
  }
  if (mode == NeighborhoodMode::Spread && !spread_valid(n)) {
    throw Error(ErrorKind::InvalidMode,
                "spread neighborhood needs gcd(5, N) = 1, N = " + std::to_string(n));
  }
}

CAState step_forward(const CAState& state, const RulePair& rules, NeighborhoodMode mode) {
  validate_state(state, rules, mode);
  return forward_unchecked(state, rules, mode);
}

CAState step_backward(const CAState& state, const RulePair& rules, NeighborhoodMode mode) {
  validate_state(state, rules, mode);
  if (!rules.complementary()) {
    throw Error(ErrorKind::InvalidArgument, "backward stepping needs a complementary rule pair");
  }
  return backward_unchecked(state, rules, mode);
}

CAState iterate(CAState state, const RulePair& rules, NeighborhoodMode mode, int steps,
                Direction direction, std::vector<CAState>* trajectory) {
  if (steps < 0) throw Error(ErrorKind::InvalidArgument, "negative step count");
  validate_state(state, rules, mode);
  if (direction == Direction::Backward && !rules.complementary()) {
    throw Error(ErrorKind::InvalidArgument, "backward stepping needs a complementary rule pair");
  }
  if (trajectory != nullptr) trajectory->reserve(trajectory->size() + steps);
  for (int t = 0; t < steps; ++t) {
    state = direction == Direction::Forward ? forward_unchecked(state, rules, mode)
                                            : backward_unchecked(state, rules, mode);
    if (trajectory != nullptr) trajectory->push_back(state);
  }
  return state;
}

}  // namespace rca
