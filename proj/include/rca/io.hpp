#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rca/cipher.hpp"

namespace rca::io {

/// Key file text: one key=value per line for radius, block_size,
/// iterations, mode and rule (r1 as lowercase hex). Blank lines and
/// lines starting with '#' are ignored.
std::string format_key(const CipherKey& key);
CipherKey parse_key(std::string_view text);

CipherKey read_key_file(const std::filesystem::path& path);
void write_key_file(const std::filesystem::path& path, const CipherKey& key);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_file_atomic(const std::filesystem::path& path, std::string_view text);

/// Blocks to bytes, cell 0 of block 0 in the most significant bit of byte 0.
/// Block size must be a multiple of 8.
std::vector<std::uint8_t> pack_blocks(std::span<const Block> blocks);
std::vector<Block> unpack_blocks(std::span<const std::uint8_t> bytes, int block_size);

/// Ciphertext file = ciphertext blocks followed by the final-data block.
std::vector<std::uint8_t> pack_bundle(const CiphertextBundle& bundle);
CiphertextBundle unpack_bundle(std::span<const std::uint8_t> bytes, int block_size);

/// 10* padding: append 0x80 then zero bytes up to a multiple of
/// `block_bytes`. Always adds at least one byte.
std::vector<std::uint8_t> pad(std::span<const std::uint8_t> bytes, std::size_t block_bytes);
std::vector<std::uint8_t> unpad(std::span<const std::uint8_t> bytes);

/// One bit per output byte, MSB of each input byte first.
std::vector<std::uint8_t> unpack_bits(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits);

/// ASCII '0'/'1' text; whitespace is skipped, anything else is an error.
std::vector<std::uint8_t> parse_ascii_bits(std::string_view text);

}  // namespace rca::io
