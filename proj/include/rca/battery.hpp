#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "rca/stat_tests.hpp"

namespace rca::nist {

/// A named test in the battery. New tests plug in by appending one.
struct TestSpec {
  std::string name;
  std::function<TestOutcome(Bits)> run;
};

struct BatteryParams {
  int block_frequency_length = 128;
  int universal_block_length = 7;
  int universal_init_blocks = 1280;
};

/// Frequency, block frequency, runs, rank, DFT, universal.
std::vector<TestSpec> default_tests(const BatteryParams& params = {});

struct TestSummary {
  std::string name;
  std::vector<TestOutcome> outcomes;  ///< one per sequence, in input order
  std::size_t passes = 0;
  double proportion = 0.0;
  double threshold = 0.0;
  /// Chi-square p-value of the p-value histogram over ten bins.
  double uniformity = 0.0;
  bool passed = false;
};

struct BatteryReport {
  std::size_t sequences = 0;
  std::vector<TestSummary> tests;

  const TestSummary& at(const std::string& name) const;
};

/// Lower end of the pass-proportion confidence interval:
/// (1 - alpha) - 3 * sqrt(alpha * (1 - alpha) / k).
double proportion_threshold(std::size_t sequences, double alpha = kAlpha);

BatteryReport run_battery(const std::vector<BitStream>& streams,
                          const std::vector<TestSpec>& tests = default_tests());

/// Streams produced on demand by `produce(index)`, which must be safe to
/// call from several threads. threads == 0 picks the hardware count.
BatteryReport run_battery(std::size_t count, const std::function<BitStream(std::size_t)>& produce,
                          const std::vector<TestSpec>& tests = default_tests(),
                          unsigned threads = 0);

}  // namespace rca::nist
