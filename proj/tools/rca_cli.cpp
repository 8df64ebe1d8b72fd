// Command-line front end: keygen, encrypt, decrypt, keystream, sac, nist,
// analyze-rule.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "rca/battery.hpp"
#include "rca/boolean_function.hpp"
#include "rca/cipher.hpp"
#include "rca/error.hpp"
#include "rca/io.hpp"
#include "rca/random.hpp"
#include "rca/sac.hpp"

namespace {

using namespace rca;

enum ExitCode {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kIo = 3,
  kLengthMismatch = 4,
  kInvalidMode = 5,
  kInvalidArgument = 6,
  kStreamTooShort = 7,
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io: return kIo;
    case ErrorKind::LengthMismatch: return kLengthMismatch;
    case ErrorKind::InvalidMode: return kInvalidMode;
    case ErrorKind::InvalidArgument: return kInvalidArgument;
    case ErrorKind::StreamTooShort: return kStreamTooShort;
  }
  return kFailure;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) | device();
}

/// "random" draws a uniform table, "balanced" a table of weight d/2,
/// anything else is parsed as hex.
RuleTable make_rule(const std::string& spec, int radius, std::mt19937_64& rng) {
  if (spec == "random") return RuleTable::random(radius, rng);
  if (spec == "balanced") return RuleTable::random_balanced(radius, rng);
  return RuleTable::from_hex(radius, spec);
}

std::string fixed(double value, int digits) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << value;
  return out.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    io::write_file_atomic(path, text);
  }
}

struct KeyOptions {
  int radius = 2;
  int size = 32;
  int iterations = 16;
  std::string mode = "standard";
  std::string rule = "random";
};

void add_key_options(CLI::App& cmd, KeyOptions& opt) {
  cmd.add_option("--radius", opt.radius, "Neighborhood radius r")->capture_default_str();
  cmd.add_option("--size", opt.size, "Block size N in bits")->capture_default_str();
  cmd.add_option("--iterations", opt.iterations, "Iteration parameter n (n-1 steps)")
      ->capture_default_str();
  cmd.add_option("--mode", opt.mode, "standard or spread")
      ->check(CLI::IsMember({"standard", "spread"}))
      ->capture_default_str();
}

int run_keygen(const KeyOptions& opt, std::optional<std::uint64_t> seed_flag,
               const std::string& out) {
  const std::uint64_t seed = resolve_seed(seed_flag);
  std::mt19937_64 rng(seed);
  const CipherKey key(RulePair(make_rule(opt.rule, opt.radius, rng)), opt.size, opt.iterations,
                      parse_mode(opt.mode));
  io::write_key_file(out, key);
  std::cout << "seed=" << seed << '\n' << io::format_key(key);
  return kOk;
}

int run_encrypt(const std::string& key_path, const std::string& in, const std::string& out,
                std::optional<std::uint64_t> seed_flag, bool padded) {
  const CipherKey key = io::read_key_file(key_path);
  std::vector<std::uint8_t> data = io::read_file(in);
  if (padded) data = io::pad(data, static_cast<std::size_t>(key.block_size() / 8));
  const auto blocks = io::unpack_blocks(data, key.block_size());
  if (blocks.empty()) throw Error(ErrorKind::LengthMismatch, "empty plaintext");
  const std::uint64_t seed = resolve_seed(seed_flag);
  std::mt19937_64 rng(seed);
  const CiphertextBundle bundle = encrypt_message(blocks, key, rng);
  io::write_file_atomic(out, io::pack_bundle(bundle));
  std::cout << "seed=" << seed << '\n';
  return kOk;
}

int run_decrypt(const std::string& key_path, const std::string& in, const std::string& out,
                bool padded) {
  const CipherKey key = io::read_key_file(key_path);
  const CiphertextBundle bundle = io::unpack_bundle(io::read_file(in), key.block_size());
  std::vector<std::uint8_t> data = io::pack_blocks(decrypt_message(bundle, key));
  if (padded) data = io::unpad(data);
  io::write_file_atomic(out, data);
  return kOk;
}

int run_keystream(const std::string& key_path, std::size_t bits,
                  std::optional<std::uint64_t> seed_flag, const std::string& out, bool ascii) {
  const CipherKey key = io::read_key_file(key_path);
  const std::uint64_t seed = resolve_seed(seed_flag);
  std::mt19937_64 rng(seed);
  const CAState start{Block::random(key.block_size(), rng), Block::random(key.block_size(), rng)};
  const auto stream = keystream(key, start, bits);
  if (ascii) {
    std::string text(stream.size(), '0');
    for (std::size_t i = 0; i < stream.size(); ++i) text[i] = stream[i] ? '1' : '0';
    write_text(out, text + "\n");
  } else {
    io::write_file_atomic(out, io::pack_bits(stream));
  }
  std::cerr << "seed=" << seed << '\n';
  return kOk;
}

struct SacOptions {
  int size = 32;
  int radius = 2;
  std::string mode = "standard";
  int trials = 10000;
  int max_iter = 64;
  std::string rule = "balanced";
  double epsilon = kSacEpsilon;
  int window = kSacWindow;
  std::string out;
};

std::string curve_csv(const SacCurve& curve, const std::string& rule_label, double epsilon,
                      int window) {
  std::ostringstream csv;
  csv << "# size=" << curve.config.block_size << " radius=" << curve.config.radius
      << " mode=" << to_string(curve.config.mode) << " rule=" << rule_label
      << " trials=" << curve.trials << " seed=" << curve.config.seed << '\n';
  csv << "iteration,mean_flip_fraction\n";
  for (std::size_t t = 0; t < curve.mean_flip_fraction.size(); ++t) {
    csv << t + 1 << ',' << fixed(curve.mean_flip_fraction[t], 6) << '\n';
  }
  const auto reached = iterations_to_sac(curve, epsilon, window);
  csv << "# iterations_to_sac=" << (reached ? std::to_string(*reached) : "not-reached")
      << " epsilon=" << epsilon << " window=" << window << '\n';
  return csv.str();
}

int run_sac(const SacOptions& opt, std::optional<std::uint64_t> seed_flag) {
  const std::uint64_t seed = resolve_seed(seed_flag);
  std::mt19937_64 rng(seed);
  SacConfig config;
  config.block_size = opt.size;
  config.radius = opt.radius;
  config.trials = opt.trials;
  config.max_iterations = opt.max_iter;
  config.seed = seed;
  std::string rule_label = "per-trial";
  if (opt.rule != "per-trial") {
    config.rule = RulePair(make_rule(opt.rule, opt.radius, rng));
    rule_label = config.rule->r1().to_hex();
  }

  std::string text;
  if (opt.mode == "both") {
    const ModeComparison cmp = compare_modes(config, opt.epsilon, opt.window);
    text = curve_csv(cmp.standard, rule_label, opt.epsilon, opt.window) +
           curve_csv(cmp.spread, rule_label, opt.epsilon, opt.window);
    text += "# spread_to_standard_ratio=" + (cmp.ratio ? fixed(*cmp.ratio, 4) : "undefined") + '\n';
  } else {
    config.mode = parse_mode(opt.mode);
    text = curve_csv(sac_curve(config), rule_label, opt.epsilon, opt.window);
  }
  write_text(opt.out, text);
  return kOk;
}

struct NistOptions {
  std::string in;
  std::string format = "binary";
  std::string key;
  KeyOptions gen;
  std::size_t bits = 1000000;
  std::size_t sequences = 100;
  std::string out;
};

int run_nist(NistOptions opt, std::optional<std::uint64_t> seed_flag) {
  std::ostringstream header;
  std::optional<nist::BatteryReport> report;

  if (!opt.in.empty()) {
    const auto raw = io::read_file(opt.in);
    const nist::BitStream all =
        opt.format == "ascii"
            ? io::parse_ascii_bits(std::string_view(reinterpret_cast<const char*>(raw.data()),
                                                    raw.size()))
            : io::unpack_bits(raw);
    const std::size_t available = all.size() / opt.bits;
    if (available == 0) {
      throw Error(ErrorKind::StreamTooShort, "input holds fewer than --bits bits");
    }
    const std::size_t count = std::min(available, opt.sequences);
    header << "# source=" << opt.in << " sequences=" << count << " bits=" << opt.bits << '\n';
    report = nist::run_battery(count, [&](std::size_t i) {
      const auto first = all.begin() + static_cast<std::ptrdiff_t>(i * opt.bits);
      return nist::BitStream(first, first + static_cast<std::ptrdiff_t>(opt.bits));
    });
  } else {
    const std::uint64_t seed = resolve_seed(seed_flag);
    std::mt19937_64 rng(seed);
    const CipherKey key =
        !opt.key.empty()
            ? io::read_key_file(opt.key)
            : CipherKey(RulePair(make_rule(opt.gen.rule, opt.gen.radius, rng)), opt.gen.size,
                        opt.gen.iterations, parse_mode(opt.gen.mode));
    header << "# keystream radius=" << key.radius() << " size=" << key.block_size()
           << " mode=" << to_string(key.mode()) << " rule=" << key.rules().r1().to_hex()
           << " sequences=" << opt.sequences << " bits=" << opt.bits << " seed=" << seed << '\n';
    report = nist::run_battery(opt.sequences, [&](std::size_t i) {
      std::mt19937_64 stream_rng = substream(seed, i);
      const CAState start{Block::random(key.block_size(), stream_rng),
                          Block::random(key.block_size(), stream_rng)};
      return keystream(key, start, opt.bits);
    });
  }

  std::ostringstream table;
  table << header.str();
  table << std::left << std::setw(18) << "test" << std::setw(10) << "passes" << std::setw(12)
        << "proportion" << std::setw(11) << "threshold" << std::setw(12) << "median_p"
        << "verdict\n";
  std::ostringstream csv;
  csv << header.str()
      << "test,sequences,passes,proportion,threshold,uniformity_p,median_p,verdict\n";
  for (const auto& t : report->tests) {
    std::vector<double> ps;
    for (const auto& o : t.outcomes) ps.push_back(o.p_value);
    std::nth_element(ps.begin(), ps.begin() + static_cast<std::ptrdiff_t>(ps.size() / 2), ps.end());
    const double median = ps[ps.size() / 2];
    const char* verdict = t.passed ? "+" : "-";
    table << std::left << std::setw(18) << t.name << std::setw(10)
          << (std::to_string(t.passes) + "/" + std::to_string(report->sequences)) << std::setw(12)
          << fixed(t.proportion, 4) << std::setw(11) << fixed(t.threshold, 4) << std::setw(12)
          << fixed(median, 6) << verdict << '\n';
    csv << t.name << ',' << report->sequences << ',' << t.passes << ',' << fixed(t.proportion, 6)
        << ',' << fixed(t.threshold, 6) << ',' << fixed(t.uniformity, 6) << ','
        << fixed(median, 6) << ',' << (t.passed ? "pass" : "fail") << '\n';
  }
  std::cout << table.str();
  if (!opt.out.empty()) io::write_file_atomic(opt.out, csv.str());
  return kOk;
}

int run_analyze(const std::vector<std::string>& rules, int radius, std::optional<int> size,
                const std::string& mode) {
  const int n = size.value_or(std::max(6, 2 * radius + 1));
  for (const auto& hex : rules) {
    const RuleReport r = analyze_rule(RuleTable::from_hex(radius, hex), n, parse_mode(mode));
    std::cout << "rule: " << r.hex << '\n'
              << "radius: " << r.radius << '\n'
              << "weight: " << r.weight << '/' << (std::size_t{1} << (2 * r.radius + 1)) << '\n'
              << "balanced: " << (r.balanced ? "yes" : "no") << '\n'
              << "nonlinearity: " << r.nonlinearity << '\n'
              << "anf: " << r.anf << '\n'
              << "reversible: " << (r.reversible ? "yes" : "no") << " (N=" << r.checked_size
              << ", " << to_string(r.mode) << ", "
              << (2 * r.checked_size <= 20 ? "enumerated" : "sampled") << ")\n\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reversible cellular-automaton block cipher and evaluation tools"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  std::string key_path, in_path, out_path;
  bool padded = false;

  KeyOptions keygen_opt;
  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a key file");
  add_key_options(*keygen_cmd, keygen_opt);
  keygen_cmd->add_option("--rule", keygen_opt.rule, "random, balanced or hex")
      ->capture_default_str();
  keygen_cmd->add_option("--seed", seed, "RNG seed (OS entropy if absent)");
  keygen_cmd->add_option("--out", out_path, "Key file to write")->required();

  auto* encrypt_cmd = app.add_subcommand("encrypt", "Encrypt a file");
  encrypt_cmd->add_option("--key", key_path)->required();
  encrypt_cmd->add_option("--in", in_path)->required();
  encrypt_cmd->add_option("--out", out_path)->required();
  encrypt_cmd->add_option("--seed", seed, "Seed for q0 (OS entropy if absent)");
  encrypt_cmd->add_flag("--pad", padded, "Apply 10* padding");

  auto* decrypt_cmd = app.add_subcommand("decrypt", "Decrypt a file");
  decrypt_cmd->add_option("--key", key_path)->required();
  decrypt_cmd->add_option("--in", in_path)->required();
  decrypt_cmd->add_option("--out", out_path)->required();
  decrypt_cmd->add_flag("--pad", padded, "Strip 10* padding");

  std::size_t stream_bits = 1000000;
  bool ascii = false;
  auto* keystream_cmd = app.add_subcommand("keystream", "Write CA keystream bits");
  keystream_cmd->add_option("--key", key_path)->required();
  keystream_cmd->add_option("--bits", stream_bits)->capture_default_str();
  keystream_cmd->add_option("--seed", seed, "Seed for (q0, q1)");
  keystream_cmd->add_option("--out", out_path)->required();
  keystream_cmd->add_flag("--ascii", ascii, "Write 0/1 text instead of packed bytes");

  SacOptions sac_opt;
  auto* sac_cmd = app.add_subcommand("sac", "Strict avalanche curve as CSV");
  sac_cmd->add_option("--size", sac_opt.size)->capture_default_str();
  sac_cmd->add_option("--radius", sac_opt.radius)->capture_default_str();
  sac_cmd->add_option("--mode", sac_opt.mode, "standard, spread or both")
      ->check(CLI::IsMember({"standard", "spread", "both"}))
      ->capture_default_str();
  sac_cmd->add_option("--trials", sac_opt.trials)->capture_default_str();
  sac_cmd->add_option("--max-iter", sac_opt.max_iter)->capture_default_str();
  sac_cmd->add_option("--rule", sac_opt.rule, "hex, random, balanced or per-trial")
      ->capture_default_str();
  sac_cmd->add_option("--seed", seed);
  sac_cmd->add_option("--epsilon", sac_opt.epsilon)->capture_default_str();
  sac_cmd->add_option("--window", sac_opt.window)->capture_default_str();
  sac_cmd->add_option("--out", sac_opt.out, "CSV path (stdout if absent)");

  NistOptions nist_opt;
  nist_opt.gen.rule = "balanced";
  auto* nist_cmd = app.add_subcommand("nist", "Six-test randomness battery");
  nist_cmd->add_option("--in", nist_opt.in, "Bitstream file to test");
  nist_cmd->add_option("--format", nist_opt.format)
      ->check(CLI::IsMember({"binary", "ascii"}))
      ->capture_default_str();
  nist_cmd->add_option("--key", nist_opt.key, "Key file for keystream generation");
  add_key_options(*nist_cmd, nist_opt.gen);
  nist_cmd->add_option("--rule", nist_opt.gen.rule, "hex, random or balanced")
      ->capture_default_str();
  nist_cmd->add_option("--bits", nist_opt.bits, "Bits per sequence")->capture_default_str();
  nist_cmd->add_option("--sequences", nist_opt.sequences)->capture_default_str();
  nist_cmd->add_option("--seed", seed);
  nist_cmd->add_option("--out", nist_opt.out, "CSV path");

  std::vector<std::string> analyze_rules;
  int analyze_radius = 2;
  std::optional<int> analyze_size;
  std::string analyze_mode = "standard";
  auto* analyze_cmd = app.add_subcommand("analyze-rule", "Boolean-function report for rules");
  analyze_cmd->add_option("--rule", analyze_rules, "Rule in hex (repeatable)")->required();
  analyze_cmd->add_option("--radius", analyze_radius)->capture_default_str();
  analyze_cmd->add_option("--size", analyze_size, "Ring size for the reversibility check");
  analyze_cmd->add_option("--mode", analyze_mode)
      ->check(CLI::IsMember({"standard", "spread"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*keygen_cmd) return run_keygen(keygen_opt, seed, out_path);
    if (*encrypt_cmd) return run_encrypt(key_path, in_path, out_path, seed, padded);
    if (*decrypt_cmd) return run_decrypt(key_path, in_path, out_path, padded);
    if (*keystream_cmd) return run_keystream(key_path, stream_bits, seed, out_path, ascii);
    if (*sac_cmd) return run_sac(sac_opt, seed);
    if (*nist_cmd) {
      if (!nist_opt.in.empty() && !nist_opt.key.empty()) {
        throw Error(ErrorKind::InvalidArgument, "--in and --key are mutually exclusive");
      }
      return run_nist(nist_opt, seed);
    }
    if (*analyze_cmd) return run_analyze(analyze_rules, analyze_radius, analyze_size, analyze_mode);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: failure: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
