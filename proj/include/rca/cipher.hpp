#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "rca/configuration.hpp"
#include "rca/engine.hpp"
#include "rca/rule.hpp"

namespace rca {

using Block = Configuration;

/// Secret parameters of the CA block cipher. The per-message seed q_0 is
/// not part of the key.
class CipherKey {
 public:
  static constexpr int kMinIterations = 3;

  CipherKey(RulePair rules, int block_size, int iterations,
            NeighborhoodMode mode = NeighborhoodMode::Standard);

  const RulePair& rules() const noexcept { return rules_; }
  int radius() const noexcept { return rules_.radius(); }
  int block_size() const noexcept { return block_size_; }
  int iterations() const noexcept { return iterations_; }
  NeighborhoodMode mode() const noexcept { return mode_; }

  friend bool operator==(const CipherKey&, const CipherKey&) = default;

 private:
  RulePair rules_;
  int block_size_;
  int iterations_;
  NeighborhoodMode mode_;
};

/// Draws r1 uniformly over all 2^(2r+1)-entry tables; r2 is its complement.
CipherKey keygen(int radius, int block_size, int iterations, NeighborhoodMode mode,
                 std::mt19937_64& entropy);

struct EncryptedBlock {
  Block cipher;      ///< q_{n-1}
  Block final_data;  ///< q_n, needed for decryption
};

struct DecryptedBlock {
  Block plain;  ///< q_1
  Block seed;   ///< q_0
};

/// Runs n-1 forward steps from (q_0 = seed, q_1 = plain).
EncryptedBlock encrypt_block(const Block& plain, const Block& seed, const CipherKey& key);

/// Runs n-1 backward steps from (q_{n-1} = cipher, q_n = final_data).
DecryptedBlock decrypt_block(const Block& cipher, const Block& final_data, const CipherKey& key);

/// The swap-and-iterate-forward decryption route: start from
/// (q_0 = final_data, q_1 = cipher) and step forward. Only valid in
/// Standard mode, where the CA is time-symmetric.
DecryptedBlock decrypt_block_by_time_reversal(const Block& cipher, const Block& final_data,
                                              const CipherKey& key);

struct CiphertextBundle {
  std::vector<Block> blocks;
  /// q_n of the last block. Must reach the receiver over a secure channel.
  Block final_data;
};

/// Chains blocks: block k+1 uses block k's final data as its q_0.
CiphertextBundle encrypt_message(std::span<const Block> plain, const CipherKey& key,
                                 const Block& seed);
CiphertextBundle encrypt_message(std::span<const Block> plain, const CipherKey& key,
                                 std::mt19937_64& rng);

std::vector<Block> decrypt_message(const CiphertextBundle& bundle, const CipherKey& key);

/// Concatenation of q_2, q_3, ... from `seed`, truncated to `nbits`.
/// Bits are returned one per byte (0 or 1).
std::vector<std::uint8_t> keystream(const CipherKey& key, const CAState& seed,
                                    std::size_t nbits);

}  // namespace rca
