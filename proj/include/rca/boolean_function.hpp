#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rca/configuration.hpp"
#include "rca/rule.hpp"

namespace rca {

/// Truth table over n inputs. Input x has variable 0 (the leftmost
/// neighbor, named `a` for five variables) as its most significant bit.
class BooleanFunction {
 public:
  BooleanFunction(int n_vars, std::vector<std::uint8_t> truth_table);

  int n_vars() const noexcept { return n_vars_; }
  std::size_t size() const noexcept { return table_.size(); }
  bool operator()(std::uint32_t x) const noexcept { return table_[x] != 0; }
  const std::vector<std::uint8_t>& truth_table() const noexcept { return table_; }
  std::size_t weight() const noexcept;

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  int n_vars_;
  std::vector<std::uint8_t> table_;
};

BooleanFunction to_boolean_function(const RuleTable& rule);

bool is_balanced(const BooleanFunction& f);

/// W(w) = sum_x (-1)^(f(x) xor w.x), computed with the fast transform.
struct WalshSpectrum {
  std::vector<std::int64_t> coefficients;
};

WalshSpectrum walsh_spectrum(const BooleanFunction& f);

/// 2^(n-1) - max|W| / 2: distance to the nearest affine function.
int nonlinearity(const BooleanFunction& f);

/// Algebraic normal form: XOR of monomials, each a mask of input bits
/// (same bit layout as the truth-table index).
struct Anf {
  int n_vars = 0;
  std::vector<std::uint32_t> monomials;

  bool evaluate(std::uint32_t x) const noexcept;
  BooleanFunction to_function() const;
  /// "1 ⊕ e", "a ⊕ bc", ...; variables a.. for up to 5 inputs, x1.. beyond.
  std::string to_string() const;
};

Anf anf(const BooleanFunction& f);

std::string variable_name(int n_vars, int var_index);

/// Whether (q_{t-1}, q_t) -> (q_t, q_{t+1}) is one-to-one. Enumerates all
/// 2^(2N) states when 2N <= 20, otherwise samples `samples` random states
/// looking for a roundtrip failure or a collision.
bool verify_pair_reversibility(const RulePair& rules, int size, NeighborhoodMode mode,
                               std::uint64_t seed = 0x5eed, int samples = 100000);

struct RuleReport {
  std::string hex;
  int radius = 0;
  std::size_t weight = 0;
  bool balanced = false;
  int nonlinearity = 0;
  std::string anf;
  bool reversible = false;
  int checked_size = 0;
  NeighborhoodMode mode = NeighborhoodMode::Standard;
};

RuleReport analyze_rule(const RuleTable& rule, int size, NeighborhoodMode mode);

}  // namespace rca
