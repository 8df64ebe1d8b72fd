#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rca {

inline constexpr int kMaxRadius = 8;

/// Truth table of a radius-r rule over 2r+1 binary cells.
///
/// Entry k is the output for the neighborhood whose cells, read from
/// i-r to i+r, spell k in binary with the leftmost cell most significant
/// (Wolfram numbering: rule 236 at r=1 has bit k of 236 as entry k).
class RuleTable {
 public:
  /// All-zeros table.
  explicit RuleTable(int radius);

  /// Table from the low 2^(2r+1) bits of `value`; only r <= 2 fits.
  static RuleTable from_integer(int radius, std::uint64_t value);

  /// Parses a hex string, with or without 0x prefix. Shorter strings are
  /// zero-extended; set bits beyond the table width are rejected.
  static RuleTable from_hex(int radius, std::string_view hex);

  /// Every entry drawn uniformly.
  static RuleTable random(int radius, std::mt19937_64& rng);

  /// Uniform over tables with exactly half the entries set.
  static RuleTable random_balanced(int radius, std::mt19937_64& rng);

  int radius() const noexcept { return radius_; }
  /// Number of neighborhood inputs, 2r+1.
  int arity() const noexcept { return 2 * radius_ + 1; }
  /// Table length d = 2^(2r+1).
  std::size_t size() const noexcept { return std::size_t{1} << arity(); }

  bool operator[](std::size_t code) const noexcept {
    return (words_[code >> 6] >> (code & 63)) & 1u;
  }
  void set(std::size_t code, bool value);

  std::size_t weight() const noexcept;

  /// Lowercase hex, ceil(d/4) digits, most significant first.
  std::string to_hex() const;

  /// Integer value of the table; throws if d > 64.
  std::uint64_t to_integer() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const RuleTable&, const RuleTable&) = default;

 private:
  void check_radius() const;

  int radius_;
  std::vector<std::uint64_t> words_;
};

/// Bitwise complement, which is the integer identity R2 = 2^d - R1 - 1.
RuleTable complement_rule(const RuleTable& r1);

/// The two tables driving a second-order CA. r1 fires where the previous
/// configuration holds 1, r2 where it holds 0.
class RulePair {
 public:
  /// Reversible pair (r1, complement of r1).
  explicit RulePair(RuleTable r1);

  /// Arbitrary pair, for analysis of non-reversible constructions.
  static RulePair arbitrary(RuleTable r1, RuleTable r2);

  const RuleTable& r1() const noexcept { return r1_; }
  const RuleTable& r2() const noexcept { return r2_; }
  int radius() const noexcept { return r1_.radius(); }
  bool complementary() const noexcept { return complementary_; }

  friend bool operator==(const RulePair&, const RulePair&) = default;

 private:
  RulePair(RuleTable r1, RuleTable r2);

  RuleTable r1_;
  RuleTable r2_;
  bool complementary_;
};

}  // namespace rca
