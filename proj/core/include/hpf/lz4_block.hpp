#pragma once

// LZ4 block format, self-contained. The encoder is a greedy single-pass
// match finder (hash table over 4-byte windows); the decoder accepts any
// conformant block and validates bounds, so a corrupt frame surfaces as a
// codec error rather than undefined behavior.

#include <cstdint>
#include <span>
#include <vector>

namespace hpf::lz4 {

std::vector<std::uint8_t> compress_block(std::span<const std::uint8_t> src);

/// Decompresses a block whose original size is known exactly (ours always
/// is: the content frame stores it). Throws codec errors on malformed input
/// or a size mismatch.
std::vector<std::uint8_t> decompress_block(std::span<const std::uint8_t> src,
                                           std::uint64_t original_size);

/// Worst-case compressed size for a given input size.
constexpr std::uint64_t compress_bound(std::uint64_t n) { return n + n / 255 + 16; }

}  // namespace hpf::lz4
