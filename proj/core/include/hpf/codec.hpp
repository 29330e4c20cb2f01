#pragma once

// Per-record payload transform applied before a content frame is appended to
// a part file. Codec 0 stores bytes as-is; codec 1 is the LZ4 block format.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace hpf {

enum class CodecId : std::uint8_t {
    identity = 0,
    lz4 = 1,
};

std::string_view codec_name(CodecId id);
CodecId codec_from_name(std::string_view name);
CodecId codec_from_id(std::uint8_t id);

std::vector<std::uint8_t> codec_compress(CodecId id, std::span<const std::uint8_t> content);

/// Inverse transform; `original_size` comes from the content frame header.
/// Size mismatches and malformed payloads throw integrity/codec errors.
std::vector<std::uint8_t> codec_decompress(CodecId id, std::span<const std::uint8_t> payload,
                                           std::uint64_t original_size);

}  // namespace hpf
