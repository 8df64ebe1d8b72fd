#include "rca/battery.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <cmath>
#include <thread>

#include "rca/error.hpp"
#include "rca/special_functions.hpp"

namespace rca::nist {

std::vector<TestSpec> default_tests(const BatteryParams& params) {
  return {
      {"frequency", [](Bits b) { return frequency_test(b); }},
      {"block_frequency",
       [m = params.block_frequency_length](Bits b) { return block_frequency_test(b, m); }},
      {"runs", [](Bits b) { return runs_test(b); }},
      {"matrix_rank", [](Bits b) { return matrix_rank_test(b); }},
      {"dft", [](Bits b) { return dft_test(b); }},
      {"universal",
       [l = params.universal_block_length, q = params.universal_init_blocks](Bits b) {
         return universal_test(b, l, q);
       }},
  };
}

const TestSummary& BatteryReport::at(const std::string& name) const {
  for (const auto& t : tests) {
    if (t.name == name) return t;
  }
  throw Error(ErrorKind::InvalidArgument, "no test named " + name + " in report");
}

double proportion_threshold(std::size_t sequences, double alpha) {
  const double p_hat = 1.0 - alpha;
  return p_hat - 3.0 * std::sqrt(p_hat * alpha / static_cast<double>(sequences));
}

namespace {

double pvalue_uniformity(const std::vector<TestOutcome>& outcomes) {
  constexpr int kBins = 10;
  std::array<double, kBins> counts{};
  for (const auto& o : outcomes) {
    const int bin = std::min(kBins - 1, static_cast<int>(o.p_value * kBins));
    counts[static_cast<std::size_t>(bin)] += 1.0;
  }
  const double expected = static_cast<double>(outcomes.size()) / kBins;
  double chi2 = 0.0;
  for (double c : counts) chi2 += (c - expected) * (c - expected) / expected;
  return math::igamc((kBins - 1) / 2.0, chi2 / 2.0);
}

}  // namespace

BatteryReport run_battery(const std::vector<BitStream>& streams,
                          const std::vector<TestSpec>& tests) {
  return run_battery(
      streams.size(), [&streams](std::size_t i) { return streams[i]; }, tests, 1);
}

BatteryReport run_battery(std::size_t count, const std::function<BitStream(std::size_t)>& produce,
                          const std::vector<TestSpec>& tests, unsigned threads) {
  BatteryReport report;
  report.sequences = count;
  report.tests.resize(tests.size());
  for (std::size_t t = 0; t < tests.size(); ++t) {
    report.tests[t].name = tests[t].name;
    report.tests[t].outcomes.resize(count);
  }

  // Workers claim sequence indices and write into fixed slots, so the
  // result does not depend on scheduling.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        const BitStream stream = produce(i);
        for (std::size_t t = 0; t < tests.size(); ++t) {
          report.tests[t].outcomes[i] = tests[t].run(stream);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  const double threshold = count > 0 ? proportion_threshold(count) : 0.0;
  for (auto& summary : report.tests) {
    summary.passes = static_cast<std::size_t>(std::count_if(
        summary.outcomes.begin(), summary.outcomes.end(), [](const auto& o) { return o.pass(); }));
    summary.proportion =
        count > 0 ? static_cast<double>(summary.passes) / static_cast<double>(count) : 0.0;
    summary.threshold = threshold;
    summary.uniformity = count > 0 ? pvalue_uniformity(summary.outcomes) : 0.0;
    summary.passed = count > 0 && summary.proportion >= threshold;
  }
  return report;
}

}  // namespace rca::nist
