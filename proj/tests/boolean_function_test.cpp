#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "rca/boolean_function.hpp"
#include "rca/error.hpp"

namespace rca {
namespace {

struct Vars {
  bool a, b, c, d, e;
};

// a is the most significant input bit (the leftmost neighbor).
Vars unpack(std::uint32_t x) {
  return {(x >> 4 & 1u) != 0, (x >> 3 & 1u) != 0, (x >> 2 & 1u) != 0, (x >> 1 & 1u) != 0,
          (x & 1u) != 0};
}

BooleanFunction random_function(int n, std::mt19937_64& rng) {
  std::vector<std::uint8_t> t(std::size_t{1} << n);
  for (auto& v : t) v = static_cast<std::uint8_t>(rng() & 1u);
  return BooleanFunction(n, t);
}

// Minimum distance to all 2^(n+1) affine functions, by enumeration.
int brute_force_nonlinearity(const BooleanFunction& f) {
  int best = static_cast<int>(f.size());
  for (std::uint32_t w = 0; w < f.size(); ++w) {
    for (int c = 0; c < 2; ++c) {
      int dist = 0;
      for (std::uint32_t x = 0; x < f.size(); ++x) {
        const bool affine = ((std::popcount(w & x) & 1) ^ c) != 0;
        dist += f(x) != affine;
      }
      best = std::min(best, dist);
    }
  }
  return best;
}

TEST(RuleFormulas, Rule55555555IsNotE) {
  const auto f = to_boolean_function(RuleTable::from_integer(2, 0x55555555));
  for (std::uint32_t x = 0; x < 32; ++x) EXPECT_EQ(f(x), !unpack(x).e) << x;
}

TEST(RuleFormulas, Rule1IsAllNegatedConjunction) {
  const auto f = to_boolean_function(RuleTable::from_integer(2, 0x1));
  for (std::uint32_t x = 0; x < 32; ++x) {
    const Vars v = unpack(x);
    EXPECT_EQ(f(x), !v.a && !v.b && !v.c && !v.d && !v.e) << x;
  }
}

TEST(RuleFormulas, Rule2B722D4IsXorOfConjunctions) {
  const auto f = to_boolean_function(RuleTable::from_integer(2, 0x2B722D4));
  for (std::uint32_t x = 0; x < 32; ++x) {
    const auto [a, b, c, d, e] = unpack(x);
    const bool formula = (a && !b && !c && !d) ^ (b && !c && !d && e) ^ (!b && c && d && e) ^
                         (!b && c && !d && !e) ^ (!b && !c && d && !e) ^
                         (a && !b && c && !d && e) ^ (!a && b && c && !d && e) ^
                         (!a && !b && c && d && !e);
    EXPECT_EQ(f(x), formula) << x;
  }
}

TEST(Balance, NamedRules) {
  EXPECT_TRUE(is_balanced(to_boolean_function(RuleTable::from_integer(2, 0x55555555))));
  EXPECT_FALSE(is_balanced(to_boolean_function(RuleTable::from_integer(2, 0x1))));
  const auto f = to_boolean_function(RuleTable::from_integer(2, 0x2B722D4));
  EXPECT_EQ(f.weight(), 13u);
  EXPECT_FALSE(is_balanced(f));
}

TEST(Walsh, ConstantZero) {
  const auto w = walsh_spectrum(BooleanFunction(5, std::vector<std::uint8_t>(32, 0)));
  EXPECT_EQ(w.coefficients[0], 32);
  for (std::size_t k = 1; k < 32; ++k) EXPECT_EQ(w.coefficients[k], 0);
}

TEST(Walsh, NotEConcentratesOnE) {
  const auto w = walsh_spectrum(to_boolean_function(RuleTable::from_integer(2, 0x55555555)));
  for (std::size_t k = 0; k < 32; ++k) EXPECT_EQ(std::abs(w.coefficients[k]), k == 1 ? 32 : 0);
}

TEST(Walsh, MatchesDirectSumAndParseval) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 7; ++n) {
    const auto f = random_function(n, rng);
    const auto w = walsh_spectrum(f);
    std::int64_t energy = 0;
    for (std::uint32_t omega = 0; omega < f.size(); ++omega) {
      std::int64_t direct = 0;
      for (std::uint32_t x = 0; x < f.size(); ++x) {
        direct += ((f(x) ? 1 : 0) ^ (std::popcount(omega & x) & 1)) ? -1 : 1;
      }
      EXPECT_EQ(w.coefficients[omega], direct);
      energy += direct * direct;
    }
    EXPECT_EQ(energy, std::int64_t{1} << (2 * n));
    EXPECT_EQ(is_balanced(f), w.coefficients[0] == 0);
  }
}

TEST(Nonlinearity, KnownValues) {
  EXPECT_EQ(nonlinearity(to_boolean_function(RuleTable::from_integer(2, 0x55555555))), 0);
  EXPECT_EQ(nonlinearity(to_boolean_function(RuleTable::from_integer(2, 0x1))), 1);
}

TEST(Nonlinearity, SpectrumAgreesWithAffineDistance) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + static_cast<int>(k % 5);
    const auto f = random_function(n, rng);
    EXPECT_EQ(nonlinearity(f), brute_force_nonlinearity(f));
  }
}

TEST(Nonlinearity, FiveVariableBound) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 2000; ++k) EXPECT_LE(nonlinearity(random_function(5, rng)), 12);
}

TEST(Anf, SimpleForms) {
  EXPECT_TRUE(anf(BooleanFunction(5, std::vector<std::uint8_t>(32, 0))).monomials.empty());
  EXPECT_EQ(anf(BooleanFunction(5, std::vector<std::uint8_t>(32, 0))).to_string(), "0");
  const Anf not_e = anf(to_boolean_function(RuleTable::from_integer(2, 0x55555555)));
  EXPECT_EQ(not_e.monomials, (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(not_e.to_string(), "1 ⊕ e");
}

TEST(Anf, RoundTripProperty) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 2000; ++k) {
    const auto f = random_function(5, rng);
    const Anf poly = anf(f);
    EXPECT_EQ(poly.to_function(), f);
  }
  const auto wide = random_function(9, rng);
  EXPECT_EQ(anf(wide).to_function(), wide);
  EXPECT_EQ(variable_name(9, 0), "x1");
}

TEST(Reversibility, ComplementPairsEnumerated) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 5; ++k) {
    const RulePair rules(RuleTable::random(1, rng));
    EXPECT_TRUE(verify_pair_reversibility(rules, 6, NeighborhoodMode::Standard));
    EXPECT_TRUE(verify_pair_reversibility(rules, 6, NeighborhoodMode::Spread));
  }
}

TEST(Reversibility, EqualZeroRulesAreNotInjective) {
  const RuleTable zero(1);
  EXPECT_FALSE(verify_pair_reversibility(RulePair::arbitrary(zero, zero), 6,
                                         NeighborhoodMode::Standard));
  std::mt19937_64 rng(6);
  const RuleTable r = RuleTable::random(2, rng);
  EXPECT_FALSE(verify_pair_reversibility(RulePair::arbitrary(r, r), 32,
                                         NeighborhoodMode::Standard, 1, 1000));
}

TEST(Reversibility, SpreadSampled) {
  std::mt19937_64 rng(7);
  EXPECT_TRUE(verify_pair_reversibility(RulePair(RuleTable::random(2, rng)), 32,
                                        NeighborhoodMode::Spread, 9, 100000));
}

TEST(Report, CollectsMetrics) {
  const RuleReport report = analyze_rule(RuleTable::from_integer(2, 0x55555555), 6,
                                         NeighborhoodMode::Standard);
  EXPECT_EQ(report.hex, "55555555");
  EXPECT_EQ(report.weight, 16u);
  EXPECT_TRUE(report.balanced);
  EXPECT_EQ(report.nonlinearity, 0);
  EXPECT_EQ(report.anf, "1 ⊕ e");
  EXPECT_TRUE(report.reversible);
}

TEST(BooleanFunction, RejectsBadLength) {
  EXPECT_THROW(BooleanFunction(3, std::vector<std::uint8_t>(7)), Error);
}

}  // namespace
}  // namespace rca
