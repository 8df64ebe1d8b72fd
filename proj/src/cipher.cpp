#include "rca/cipher.hpp"

#include "rca/error.hpp"

namespace rca {

namespace {

void check_block(const Block& block, const CipherKey& key, const char* what) {
  if (block.size() != key.block_size()) {
    throw Error(ErrorKind::LengthMismatch, std::string(what) + " has " +
                                               std::to_string(block.size()) +
                                               " bits, key expects " +
                                               std::to_string(key.block_size()));
  }
}

}  // namespace

CipherKey::CipherKey(RulePair rules, int block_size, int iterations, NeighborhoodMode mode)
    : rules_(std::move(rules)), block_size_(block_size), iterations_(iterations), mode_(mode) {
  if (!rules_.complementary()) {
    throw Error(ErrorKind::InvalidArgument, "cipher key needs a complementary rule pair");
  }
  if (block_size < 2 * radius() + 1 || block_size > kMaxCells) {
    throw Error(ErrorKind::InvalidArgument,
                "block size " + std::to_string(block_size) + " invalid for radius " +
                    std::to_string(radius()));
  }
  if (iterations < kMinIterations) {
    throw Error(ErrorKind::InvalidArgument,
                "iterations must be >= 3 (n = 2 leaves the plaintext as ciphertext)");
  }
  if (mode == NeighborhoodMode::Spread && !spread_valid(block_size)) {
    throw Error(ErrorKind::InvalidMode, "spread neighborhood needs gcd(5, N) = 1, N = " +
                                            std::to_string(block_size));
  }
}

CipherKey keygen(int radius, int block_size, int iterations, NeighborhoodMode mode,
                 std::mt19937_64& entropy) {
  return CipherKey(RulePair(RuleTable::random(radius, entropy)), block_size, iterations, mode);
}

EncryptedBlock encrypt_block(const Block& plain, const Block& seed, const CipherKey& key) {
  check_block(plain, key, "plaintext block");
  check_block(seed, key, "seed block");
  const CAState out =
      iterate({seed, plain}, key.rules(), key.mode(), key.iterations() - 1, Direction::Forward);
  return {out.prev, out.curr};
}

DecryptedBlock decrypt_block(const Block& cipher, const Block& final_data, const CipherKey& key) {
  check_block(cipher, key, "ciphertext block");
  check_block(final_data, key, "final data");
  const CAState out = iterate({cipher, final_data}, key.rules(), key.mode(),
                              key.iterations() - 1, Direction::Backward);
  return {out.curr, out.prev};
}

DecryptedBlock decrypt_block_by_time_reversal(const Block& cipher, const Block& final_data,
                                              const CipherKey& key) {
  check_block(cipher, key, "ciphertext block");
  check_block(final_data, key, "final data");
  if (key.mode() != NeighborhoodMode::Standard) {
    throw Error(ErrorKind::InvalidMode, "time-reversal decryption needs standard mode");
  }
  // (q_n, q_{n-1}) -> after n-1 steps (q_1, q_0).
  const CAState start = iterate({final_data, cipher}, key.rules(), key.mode(),
                                key.iterations() - 1, Direction::Forward);
  return {start.prev, start.curr};
}

CiphertextBundle encrypt_message(std::span<const Block> plain, const CipherKey& key,
                                 const Block& seed) {
  if (plain.empty()) throw Error(ErrorKind::InvalidArgument, "empty message");
  CiphertextBundle bundle{{}, seed};
  bundle.blocks.reserve(plain.size());
  for (const Block& block : plain) {
    EncryptedBlock enc = encrypt_block(block, bundle.final_data, key);
    bundle.blocks.push_back(enc.cipher);
    bundle.final_data = enc.final_data;
  }
  return bundle;
}

CiphertextBundle encrypt_message(std::span<const Block> plain, const CipherKey& key,
                                 std::mt19937_64& rng) {
  return encrypt_message(plain, key, Block::random(key.block_size(), rng));
}

std::vector<Block> decrypt_message(const CiphertextBundle& bundle, const CipherKey& key) {
  if (bundle.blocks.empty()) throw Error(ErrorKind::InvalidArgument, "empty ciphertext bundle");
  std::vector<Block> plain(bundle.blocks.size());
  Block final_data = bundle.final_data;
  for (std::size_t k = bundle.blocks.size(); k-- > 0;) {
    DecryptedBlock dec = decrypt_block(bundle.blocks[k], final_data, key);
    plain[k] = dec.plain;
    final_data = dec.seed;
  }
  return plain;
}

std::vector<std::uint8_t> keystream(const CipherKey& key, const CAState& seed,
                                    std::size_t nbits) {
  validate_state(seed, key.rules(), key.mode());
  check_block(seed.curr, key, "keystream seed");
  std::vector<std::uint8_t> bits;
  bits.reserve(nbits);
  CAState state = seed;
  const int n = key.block_size();
  while (bits.size() < nbits) {
    state = iterate(state, key.rules(), key.mode(), 1);
    for (int i = 0; i < n && bits.size() < nbits; ++i) bits.push_back(state.curr[i]);
  }
  return bits;
}

}  // namespace rca
