#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "rca/error.hpp"
#include "rca/io.hpp"

namespace rca::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(const std::map<std::string, std::string, std::less<>>& fields,
              std::string_view name) {
  const auto it = fields.find(name);
  if (it == fields.end()) {
    throw Error(ErrorKind::InvalidArgument, "key file is missing '" + std::string(name) + "'");
  }
  int value = 0;
  const auto& text = it->second;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "key field '" + std::string(name) + "' is not an integer: " + text);
  }
  return value;
}

void check_byte_aligned(int block_size) {
  if (block_size % 8 != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "file formats need a block size that is a multiple of 8");
  }
}

}  // namespace

std::string format_key(const CipherKey& key) {
  std::ostringstream out;
  out << "radius=" << key.radius() << '\n'
      << "block_size=" << key.block_size() << '\n'
      << "iterations=" << key.iterations() << '\n'
      << "mode=" << to_string(key.mode()) << '\n'
      << "rule=" << key.rules().r1().to_hex() << '\n';
  return out.str();
}

CipherKey parse_key(std::string_view text) {
  std::map<std::string, std::string, std::less<>> fields;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::InvalidArgument, "key line without '=': " + std::string(line));
    }
    fields[std::string(trim(line.substr(0, eq)))] = std::string(trim(line.substr(eq + 1)));
  }
  const int radius = parse_int(fields, "radius");
  const int block_size = parse_int(fields, "block_size");
  const int iterations = parse_int(fields, "iterations");
  const auto mode = fields.find("mode");
  const auto rule = fields.find("rule");
  if (mode == fields.end() || rule == fields.end()) {
    throw Error(ErrorKind::InvalidArgument, "key file needs mode and rule");
  }
  return CipherKey(RulePair(RuleTable::from_hex(radius, rule->second)), block_size, iterations,
                   parse_mode(mode->second));
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

CipherKey read_key_file(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  return parse_key(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

void write_key_file(const std::filesystem::path& path, const CipherKey& key) {
  write_file_atomic(path, format_key(key));
}

void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorKind::Io, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot rename onto " + path.string() + ": " + ec.message());
}

void write_file_atomic(const std::filesystem::path& path, std::string_view text) {
  write_file_atomic(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()),
                                    text.size()));
}

std::vector<std::uint8_t> pack_blocks(std::span<const Block> blocks) {
  std::vector<std::uint8_t> bytes;
  for (const Block& block : blocks) {
    check_byte_aligned(block.size());
    for (int shift = block.size() - 8; shift >= 0; shift -= 8) {
      bytes.push_back(static_cast<std::uint8_t>(block.word() >> shift));
    }
  }
  return bytes;
}

std::vector<Block> unpack_blocks(std::span<const std::uint8_t> bytes, int block_size) {
  check_byte_aligned(block_size);
  const std::size_t block_bytes = static_cast<std::size_t>(block_size) / 8;
  if (bytes.size() % block_bytes != 0) {
    throw Error(ErrorKind::LengthMismatch,
                "data length " + std::to_string(bytes.size()) +
                    " bytes is not a multiple of the " + std::to_string(block_bytes) +
                    "-byte block");
  }
  std::vector<Block> blocks;
  blocks.reserve(bytes.size() / block_bytes);
  for (std::size_t off = 0; off < bytes.size(); off += block_bytes) {
    std::uint64_t word = 0;
    for (std::size_t k = 0; k < block_bytes; ++k) word = (word << 8) | bytes[off + k];
    blocks.emplace_back(block_size, word);
  }
  return blocks;
}

std::vector<std::uint8_t> pack_bundle(const CiphertextBundle& bundle) {
  std::vector<Block> all = bundle.blocks;
  all.push_back(bundle.final_data);
  return pack_blocks(all);
}

CiphertextBundle unpack_bundle(std::span<const std::uint8_t> bytes, int block_size) {
  std::vector<Block> all = unpack_blocks(bytes, block_size);
  if (all.size() < 2) {
    throw Error(ErrorKind::LengthMismatch,
                "ciphertext needs at least one block plus the final-data block");
  }
  Block final_data = all.back();
  all.pop_back();
  return {std::move(all), final_data};
}

std::vector<std::uint8_t> pad(std::span<const std::uint8_t> bytes, std::size_t block_bytes) {
  std::vector<std::uint8_t> out(bytes.begin(), bytes.end());
  out.push_back(0x80);
  while (out.size() % block_bytes != 0) out.push_back(0);
  return out;
}

std::vector<std::uint8_t> unpad(std::span<const std::uint8_t> bytes) {
  std::size_t end = bytes.size();
  while (end > 0 && bytes[end - 1] == 0) --end;
  if (end == 0 || bytes[end - 1] != 0x80) {
    throw Error(ErrorKind::InvalidArgument, "missing 10* padding marker");
  }
  return {bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(end - 1)};
}

std::vector<std::uint8_t> unpack_bits(std::span<const std::uint8_t> bytes) {
  std::vector<std::uint8_t> bits;
  bits.reserve(bytes.size() * 8);
  for (std::uint8_t b : bytes) {
    for (int k = 7; k >= 0; --k) bits.push_back((b >> k) & 1u);
  }
  return bits;
}

std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) bytes[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  }
  return bytes;
}

std::vector<std::uint8_t> parse_ascii_bits(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0' || c == '1') {
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c != ' ' && c != '\n' && c != '\r' && c != '\t') {
      throw Error(ErrorKind::InvalidArgument, "ASCII bitstream holds a non-0/1 character");
    }
  }
  return bits;
}

}  // namespace rca::io
