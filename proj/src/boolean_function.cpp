#include "rca/boolean_function.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <random>

#include "rca/engine.hpp"
#include "rca/error.hpp"

namespace rca {

BooleanFunction::BooleanFunction(int n_vars, std::vector<std::uint8_t> truth_table)
    : n_vars_(n_vars), table_(std::move(truth_table)) {
  if (n_vars < 1 || n_vars > 2 * kMaxRadius + 1 ||
      table_.size() != (std::size_t{1} << n_vars)) {
    throw Error(ErrorKind::InvalidArgument, "truth table length must be 2^n_vars");
  }
  for (auto& v : table_) v = v ? 1 : 0;
}

std::size_t BooleanFunction::weight() const noexcept {
  return static_cast<std::size_t>(std::count(table_.begin(), table_.end(), 1));
}

BooleanFunction to_boolean_function(const RuleTable& rule) {
  std::vector<std::uint8_t> table(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k) table[k] = rule[k];
  return BooleanFunction(rule.arity(), std::move(table));
}

bool is_balanced(const BooleanFunction& f) { return 2 * f.weight() == f.size(); }

WalshSpectrum walsh_spectrum(const BooleanFunction& f) {
  std::vector<std::int64_t> w(f.size());
  for (std::size_t x = 0; x < w.size(); ++x) w[x] = f(static_cast<std::uint32_t>(x)) ? -1 : 1;
  for (std::size_t h = 1; h < w.size(); h <<= 1) {
    for (std::size_t i = 0; i < w.size(); i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t u = w[j];
        const std::int64_t v = w[j + h];
        w[j] = u + v;
        w[j + h] = u - v;
      }
    }
  }
  return {std::move(w)};
}

int nonlinearity(const BooleanFunction& f) {
  const auto spectrum = walsh_spectrum(f);
  std::int64_t peak = 0;
  for (auto c : spectrum.coefficients) peak = std::max(peak, std::abs(c));
  return static_cast<int>((std::int64_t{1} << (f.n_vars() - 1)) - peak / 2);
}

Anf anf(const BooleanFunction& f) {
  std::vector<std::uint8_t> c = f.truth_table();
  for (std::size_t h = 1; h < c.size(); h <<= 1) {
    for (std::size_t x = 0; x < c.size(); ++x) {
      if (x & h) c[x] ^= c[x ^ h];
    }
  }
  Anf out{f.n_vars(), {}};
  for (std::size_t m = 0; m < c.size(); ++m) {
    if (c[m]) out.monomials.push_back(static_cast<std::uint32_t>(m));
  }
  return out;
}

bool Anf::evaluate(std::uint32_t x) const noexcept {
  bool value = false;
  for (auto m : monomials) value ^= (x & m) == m;
  return value;
}

BooleanFunction Anf::to_function() const {
  std::vector<std::uint8_t> table(std::size_t{1} << n_vars);
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = evaluate(static_cast<std::uint32_t>(x));
  return BooleanFunction(n_vars, std::move(table));
}

std::string variable_name(int n_vars, int var_index) {
  if (n_vars <= 5) return std::string(1, static_cast<char>('a' + var_index));
  return "x" + std::to_string(var_index + 1);
}

std::string Anf::to_string() const {
  if (monomials.empty()) return "0";
  // Degree first, then by leftmost variable.
  std::vector<std::uint32_t> sorted = monomials;
  std::sort(sorted.begin(), sorted.end(), [](std::uint32_t a, std::uint32_t b) {
    const int da = std::popcount(a), db = std::popcount(b);
    if (da != db) return da < db;
    return a > b;
  });
  const char* joiner = n_vars <= 5 ? "" : "*";
  std::string out;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (k > 0) out += " ⊕ ";
    const std::uint32_t m = sorted[k];
    if (m == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for (int v = 0; v < n_vars; ++v) {
      if ((m >> (n_vars - 1 - v)) & 1u) {
        if (!first) out += joiner;
        out += variable_name(n_vars, v);
        first = false;
      }
    }
  }
  return out;
}

bool verify_pair_reversibility(const RulePair& rules, int size, NeighborhoodMode mode,
                               std::uint64_t seed, int samples) {
  validate_state({Configuration(size), Configuration(size)}, rules, mode);
  if (2 * size <= 20) {
    const std::uint64_t states = std::uint64_t{1} << (2 * size);
    std::vector<bool> seen(states, false);
    for (std::uint64_t s = 0; s < states; ++s) {
      const CAState in{Configuration(size, s >> size), Configuration(size, s)};
      const CAState out = step_forward(in, rules, mode);
      const std::uint64_t image = (out.prev.word() << size) | out.curr.word();
      if (seen[image]) return false;
      seen[image] = true;
    }
    return true;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_cell(0, size - 1);
  for (int k = 0; k < samples; ++k) {
    const CAState in{Configuration::random(size, rng), Configuration::random(size, rng)};
    const CAState out = step_forward(in, rules, mode);
    if (rules.complementary() && step_backward(out, rules, mode) != in) return false;
    CAState twin = in;
    twin.prev.flip(pick_cell(rng));
    if (step_forward(twin, rules, mode) == out) return false;
  }
  return true;
}

RuleReport analyze_rule(const RuleTable& rule, int size, NeighborhoodMode mode) {
  const BooleanFunction f = to_boolean_function(rule);
  RuleReport report;
  report.hex = rule.to_hex();
  report.radius = rule.radius();
  report.weight = f.weight();
  report.balanced = is_balanced(f);
  report.nonlinearity = nonlinearity(f);
  report.anf = anf(f).to_string();
  report.reversible = verify_pair_reversibility(RulePair(rule), size, mode);
  report.checked_size = size;
  report.mode = mode;
  return report;
}

}  // namespace rca
