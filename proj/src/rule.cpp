#include "rca/rule.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "rca/error.hpp"

namespace rca {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

RuleTable::RuleTable(int radius) : radius_(radius) {
  check_radius();
  words_.assign((size() + 63) / 64, 0);
}

void RuleTable::check_radius() const {
  if (radius_ < 1 || radius_ > kMaxRadius) {
    throw Error(ErrorKind::InvalidArgument,
                "radius must be in [1, " + std::to_string(kMaxRadius) + "], got " +
                    std::to_string(radius_));
  }
}

RuleTable RuleTable::from_integer(int radius, std::uint64_t value) {
  RuleTable table(radius);
  if (table.size() < 64 && (value >> table.size()) != 0) {
    throw Error(ErrorKind::InvalidArgument, "rule value does not fit a radius-" +
                                                std::to_string(radius) + " table");
  }
  if (table.size() > 64) {
    throw Error(ErrorKind::InvalidArgument, "from_integer needs radius <= 2");
  }
  table.words_[0] = value;
  return table;
}

RuleTable RuleTable::from_hex(int radius, std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty()) throw Error(ErrorKind::InvalidArgument, "empty rule hex string");

  RuleTable table(radius);
  std::size_t bit = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
    const int nibble = hex_value(*it);
    if (nibble < 0) {
      throw Error(ErrorKind::InvalidArgument, "bad hex digit in rule: " + std::string(hex));
    }
    for (int k = 0; k < 4; ++k) {
      if (((nibble >> k) & 1) == 0) continue;
      if (bit + k >= table.size()) {
        throw Error(ErrorKind::InvalidArgument,
                    "rule " + std::string(hex) + " exceeds " + std::to_string(table.size()) +
                        " table bits");
      }
      table.set(bit + k, true);
    }
  }
  return table;
}

RuleTable RuleTable::random(int radius, std::mt19937_64& rng) {
  RuleTable table(radius);
  for (auto& w : table.words_) w = rng();
  if (table.size() < 64) table.words_[0] &= (std::uint64_t{1} << table.size()) - 1;
  return table;
}

RuleTable RuleTable::random_balanced(int radius, std::mt19937_64& rng) {
  RuleTable table(radius);
  std::vector<std::size_t> codes(table.size());
  std::iota(codes.begin(), codes.end(), std::size_t{0});
  std::shuffle(codes.begin(), codes.end(), rng);
  for (std::size_t k = 0; k < codes.size() / 2; ++k) table.set(codes[k], true);
  return table;
}

void RuleTable::set(std::size_t code, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (code & 63);
  auto& w = words_[code >> 6];
  w = value ? (w | bit) : (w & ~bit);
}

std::size_t RuleTable::weight() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::string RuleTable::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = (size() + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    int nibble = 0;
    for (int k = 0; k < 4; ++k) {
      const std::size_t code = 4 * d + k;
      if (code < size() && (*this)[code]) nibble |= 1 << k;
    }
    out[digits - 1 - d] = kDigits[nibble];
  }
  return out;
}

std::uint64_t RuleTable::to_integer() const {
  if (size() > 64) throw Error(ErrorKind::InvalidArgument, "table wider than 64 bits");
  return words_[0];
}

RuleTable complement_rule(const RuleTable& r1) {
  RuleTable r2(r1.radius());
  for (std::size_t k = 0; k < r1.size(); ++k) r2.set(k, !r1[k]);
  return r2;
}

RulePair::RulePair(RuleTable r1) : RulePair(r1, complement_rule(r1)) {}

RulePair::RulePair(RuleTable r1, RuleTable r2)
    : r1_(std::move(r1)), r2_(std::move(r2)) {
  if (r1_.radius() != r2_.radius()) {
    throw Error(ErrorKind::InvalidArgument, "rule pair radii differ");
  }
  complementary_ = complement_rule(r1_) == r2_;
}

RulePair RulePair::arbitrary(RuleTable r1, RuleTable r2) {
  return RulePair(std::move(r1), std::move(r2));
}

}  // namespace rca
