#include "rca/sac.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "rca/error.hpp"
#include "rca/random.hpp"

namespace rca {

namespace {

void check_config(const SacConfig& c) {
  if (c.trials < 1) throw Error(ErrorKind::InvalidArgument, "SAC needs at least one trial");
  if (c.max_iterations < 1) {
    throw Error(ErrorKind::InvalidArgument, "SAC needs at least one iteration");
  }
  if (c.rule && c.rule->radius() != c.radius) {
    throw Error(ErrorKind::InvalidArgument, "SAC rule radius differs from configured radius");
  }
  validate_state({Configuration(c.block_size), Configuration(c.block_size)},
                 RulePair(RuleTable(c.radius)), c.mode);
}

// Adds per-iteration differing-cell counts of one trial to `counts`.
void accumulate_trial(const RulePair& rules, NeighborhoodMode mode, const Block& plain,
                      const Block& q0, std::optional<int> flip_pos,
                      std::vector<std::uint64_t>& counts) {
  CAState a{q0, plain};
  CAState b = a;
  if (flip_pos) b.curr.flip(*flip_pos);
  for (auto& count : counts) {
    a = iterate(a, rules, mode, 1);
    b = iterate(b, rules, mode, 1);
    count += static_cast<std::uint64_t>(hamming_distance(a.curr, b.curr));
  }
}

std::vector<std::uint64_t> flip_counts(const SacConfig& config) {
  const int n = config.block_size;
  const std::size_t iterations = static_cast<std::size_t>(config.max_iterations);
  const std::size_t trials = static_cast<std::size_t>(config.trials);

  unsigned threads = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::min<std::size_t>(trials, 64)));
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(iterations));

  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned id) {
    auto& counts = partial[id];
    for (std::size_t t = next++; t < trials; t = next++) {
      std::mt19937_64 rng = substream(config.seed, t);
      const RulePair rules =
          config.rule ? *config.rule : RulePair(RuleTable::random(config.radius, rng));
      const Block plain = Block::random(n, rng);
      const Block q0 = Block::random(n, rng);
      const int flip = std::uniform_int_distribution<int>(0, n - 1)(rng);
      accumulate_trial(rules, config.mode, plain, q0, flip, counts);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker, k);
  }

  std::vector<std::uint64_t> total(iterations, 0);
  for (const auto& counts : partial) {
    for (std::size_t i = 0; i < iterations; ++i) total[i] += counts[i];
  }
  return total;
}

}  // namespace

std::vector<double> sac_trial(const RulePair& rules, NeighborhoodMode mode, const Block& plain,
                              const Block& q0, std::optional<int> flip_pos, int max_iterations) {
  if (max_iterations < 0) throw Error(ErrorKind::InvalidArgument, "negative iteration count");
  if (plain.size() != q0.size()) throw Error(ErrorKind::LengthMismatch, "plaintext and seed differ in size");
  if (flip_pos && (*flip_pos < 0 || *flip_pos >= plain.size())) {
    throw Error(ErrorKind::InvalidArgument, "flip position outside the block");
  }
  validate_state({q0, plain}, rules, mode);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_iterations), 0);
  accumulate_trial(rules, mode, plain, q0, flip_pos, counts);
  std::vector<double> out(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out[i] = static_cast<double>(counts[i]) / plain.size();
  }
  return out;
}

SacCurve sac_curve(const SacConfig& config) {
  check_config(config);
  const auto counts = flip_counts(config);
  const double denom = static_cast<double>(config.trials) * config.block_size;
  SacCurve curve{std::vector<double>(counts.size()), config.trials, config};
  for (std::size_t i = 0; i < counts.size(); ++i) {
    curve.mean_flip_fraction[i] = static_cast<double>(counts[i]) / denom;
  }
  return curve;
}

std::optional<int> iterations_to_sac(const std::vector<double>& curve, double epsilon,
                                     int window) {
  if (!(epsilon > 0.0) || window < 1) {
    throw Error(ErrorKind::InvalidArgument, "SAC band needs epsilon > 0 and window >= 1");
  }
  int run = 0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    run = std::abs(curve[i] - 0.5) <= epsilon ? run + 1 : 0;
    if (run == window) return static_cast<int>(i) - window + 2;
  }
  return std::nullopt;
}

std::optional<int> iterations_to_sac(const SacCurve& curve, double epsilon, int window) {
  return iterations_to_sac(curve.mean_flip_fraction, epsilon, window);
}

ModeComparison compare_modes(const SacConfig& config, double epsilon, int window) {
  if (!spread_valid(config.block_size)) {
    throw Error(ErrorKind::InvalidMode, "spread neighborhood needs gcd(5, N) = 1, N = " +
                                            std::to_string(config.block_size));
  }
  SacConfig standard = config;
  standard.mode = NeighborhoodMode::Standard;
  SacConfig spread = config;
  spread.mode = NeighborhoodMode::Spread;

  ModeComparison out{sac_curve(standard), sac_curve(spread), {}, {}, {}};
  out.standard_iterations = iterations_to_sac(out.standard, epsilon, window);
  out.spread_iterations = iterations_to_sac(out.spread, epsilon, window);
  if (out.standard_iterations && out.spread_iterations) {
    out.ratio = static_cast<double>(*out.spread_iterations) / *out.standard_iterations;
  }
  return out;
}

}  // namespace rca
