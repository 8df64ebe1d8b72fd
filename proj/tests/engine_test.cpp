#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "oracle.hpp"
#include "rca/engine.hpp"
#include "rca/error.hpp"

namespace rca {
namespace {

std::vector<int> table_vector(const RuleTable& t) {
  std::vector<int> out(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) out[k] = t[k];
  return out;
}

oracle::Cells to_cells(const Configuration& c) { return oracle::cells(c.to_string()); }

TEST(NeighborhoodCode, AllZerosIsZero) {
  const Configuration zeros(16);
  for (int r = 1; r <= 3; ++r) {
    for (int i = 0; i < 16; ++i) EXPECT_EQ(neighborhood_code(zeros, i, r), 0u);
  }
}

TEST(NeighborhoodCode, AllOnesRadiusOne) {
  const Configuration ones = ~Configuration(10);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(neighborhood_code(ones, i, 1), 7u);
}

TEST(NeighborhoodCode, LeftmostCellMostSignificant) {
  // Window (c2, c3, c4) of 00010000 is 0,1,0.
  EXPECT_EQ(neighborhood_code(Configuration::from_string("00010000"), 3, 1), 2u);
  EXPECT_EQ(neighborhood_code(Configuration::from_string("00010000"), 4, 1), 4u);
  EXPECT_EQ(neighborhood_code(Configuration::from_string("00010000"), 2, 1), 1u);
}

TEST(NeighborhoodCode, WrapsAroundTheRing) {
  const Configuration c = Configuration::from_string("10000001");
  EXPECT_EQ(neighborhood_code(c, 0, 1), 0b110u);  // (c7, c0, c1)
  EXPECT_EQ(neighborhood_code(c, 7, 1), 0b011u);  // (c6, c7, c0)
}

TEST(StepForward, ZeroRuleComplementsPrevious) {
  std::mt19937_64 rng(1);
  const RulePair rules{RuleTable(2)};
  for (int k = 0; k < 50; ++k) {
    const CAState s{Configuration::random(32, rng), Configuration::random(32, rng)};
    const CAState next = step_forward(s, rules);
    EXPECT_EQ(next.prev, s.curr);
    EXPECT_EQ(next.curr, ~s.prev);
  }
}

TEST(StepForward, Rule236HandExample) {
  // prev is all zeros, so rule 19 (the complement of 236) drives every cell.
  // Windows of 00010000 are 0,0,1,2,4,0,0,0; rule 236 maps them to
  // 0,0,0,1,0,0,0,0, and the complement gives 11101111.
  const RulePair rules{RuleTable::from_integer(1, 236)};
  const CAState s{Configuration::from_string("00000000"), Configuration::from_string("00010000")};
  const CAState next = step_forward(s, rules);
  EXPECT_EQ(next.curr.to_string(), "11101111");
  EXPECT_EQ(step_backward(next, rules), s);
}

TEST(StepForward, AgreesWithCellwiseOracle) {
  std::mt19937_64 rng(2);
  for (int n : {5, 8, 13, 32, 33, 64}) {
    for (int r = 1; r <= 6 && 2 * r + 1 <= n; ++r) {
      for (bool spread : {false, true}) {
        if (spread && !spread_valid(n)) continue;
        const RulePair rules(RuleTable::random(r, rng));
        const auto r1 = table_vector(rules.r1());
        const auto r2 = table_vector(rules.r2());
        for (int k = 0; k < 20; ++k) {
          const CAState s{Configuration::random(n, rng), Configuration::random(n, rng)};
          const CAState next = step_forward(
              s, rules, spread ? NeighborhoodMode::Spread : NeighborhoodMode::Standard);
          EXPECT_EQ(oracle::str(oracle::step(to_cells(s.prev), to_cells(s.curr), r1, r2, r, spread)),
                    next.curr.to_string())
              << "n=" << n << " r=" << r << " spread=" << spread;
        }
      }
    }
  }
}

TEST(StepForward, NonComplementaryPairUsesBothTables) {
  std::mt19937_64 rng(4);
  const RulePair rules = RulePair::arbitrary(RuleTable::random(2, rng), RuleTable::random(2, rng));
  const auto r1 = table_vector(rules.r1());
  const auto r2 = table_vector(rules.r2());
  const CAState s{Configuration::random(16, rng), Configuration::random(16, rng)};
  EXPECT_EQ(step_forward(s, rules).curr.to_string(),
            oracle::str(oracle::step(to_cells(s.prev), to_cells(s.curr), r1, r2, 2, false)));
  EXPECT_THROW((void)step_backward(s, rules), Error);
}

TEST(Reversibility, ExhaustiveSixCellsRadiusOne) {
  std::mt19937_64 rng(6);
  for (bool spread : {false, true}) {
    const auto mode = spread ? NeighborhoodMode::Spread : NeighborhoodMode::Standard;
    const RulePair rules(RuleTable::random(1, rng));
    for (std::uint64_t state = 0; state < (1u << 12); ++state) {
      const CAState s{Configuration(6, state >> 6), Configuration(6, state)};
      ASSERT_EQ(step_backward(step_forward(s, rules, mode), rules, mode), s);
      ASSERT_EQ(step_forward(step_backward(s, rules, mode), rules, mode), s);
    }
  }
}

TEST(Reversibility, RandomStatesAllRadiiBothModes) {
  std::mt19937_64 rng(7);
  for (int n : {32, 64}) {
    for (int r = 1; r <= 6; ++r) {
      for (auto mode : {NeighborhoodMode::Standard, NeighborhoodMode::Spread}) {
        const RulePair rules(RuleTable::random(r, rng));
        for (int k = 0; k < 1000; ++k) {
          const CAState s{Configuration::random(n, rng), Configuration::random(n, rng)};
          ASSERT_EQ(step_backward(step_forward(s, rules, mode), rules, mode), s);
          ASSERT_EQ(step_forward(step_backward(s, rules, mode), rules, mode), s);
        }
      }
    }
  }
}

TEST(TimeSymmetry, StandardModeSwapRecoversPrevious) {
  std::mt19937_64 rng(8);
  for (int r = 1; r <= 6; ++r) {
    const RulePair rules(RuleTable::random(r, rng));
    for (int k = 0; k < 500; ++k) {
      const CAState s{Configuration::random(32, rng), Configuration::random(32, rng)};
      const CAState next = step_forward(s, rules);
      const CAState swapped{next.curr, next.prev};
      EXPECT_EQ(step_forward(swapped, rules), (CAState{s.curr, s.prev}));
    }
  }
}

TEST(Spread, FiveIsAPermutationWhenCoprime) {
  for (int n = 1; n <= 64; ++n) {
    std::set<int> image;
    for (int i = 0; i < n; ++i) image.insert((5 * i) % n);
    EXPECT_EQ(static_cast<int>(image.size()) == n, spread_valid(n)) << n;
  }
}

TEST(Spread, RejectsMultiplesOfFive) {
  const RulePair rules(RuleTable(1));
  const CAState s{Configuration(35), Configuration(35)};
  EXPECT_THROW((void)step_forward(s, rules, NeighborhoodMode::Spread), Error);
  try {
    (void)step_backward(s, rules, NeighborhoodMode::Spread);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidMode);
  }
}

TEST(Iterate, ZeroStepsIsIdentity) {
  std::mt19937_64 rng(9);
  const RulePair rules(RuleTable::random(2, rng));
  const CAState s{Configuration::random(32, rng), Configuration::random(32, rng)};
  EXPECT_EQ(iterate(s, rules, NeighborhoodMode::Standard, 0), s);
}

TEST(Iterate, ComposesSingleSteps) {
  std::mt19937_64 rng(10);
  const RulePair rules(RuleTable::random(3, rng));
  const CAState s{Configuration::random(64, rng), Configuration::random(64, rng)};
  for (auto mode : {NeighborhoodMode::Standard, NeighborhoodMode::Spread}) {
    EXPECT_EQ(iterate(s, rules, mode, 2), step_forward(step_forward(s, rules, mode), rules, mode));
    const CAState far = iterate(s, rules, mode, 37);
    EXPECT_EQ(iterate(far, rules, mode, 37, Direction::Backward), s);
  }
}

TEST(Iterate, RecordsTrajectory) {
  std::mt19937_64 rng(12);
  const RulePair rules(RuleTable::random(1, rng));
  const CAState s{Configuration::random(8, rng), Configuration::random(8, rng)};
  std::vector<CAState> path;
  const CAState end = iterate(s, rules, NeighborhoodMode::Standard, 4, Direction::Forward, &path);
  ASSERT_EQ(path.size(), 4u);
  EXPECT_EQ(path.front(), step_forward(s, rules));
  EXPECT_EQ(path.back(), end);
}

TEST(Iterate, Errors) {
  const RulePair rules(RuleTable(3));
  EXPECT_THROW((void)iterate({Configuration(6), Configuration(6)}, rules, NeighborhoodMode::Standard, 1),
               Error);  // 6 < 2r+1
  EXPECT_THROW((void)iterate({Configuration(8), Configuration(9)}, RulePair(RuleTable(1)),
                       NeighborhoodMode::Standard, 1),
               Error);
  EXPECT_THROW((void)iterate({Configuration(8), Configuration(8)}, RulePair(RuleTable(1)),
                       NeighborhoodMode::Standard, -1),
               Error);
}

}  // namespace
}  // namespace rca
