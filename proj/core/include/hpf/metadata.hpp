#pragma once

// Fixed-size on-disk structures: the 24-byte per-file metadata record, the
// content frame that wraps each stored payload, and the length-prefixed
// _names roster. All integers big-endian.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hpf/hashing.hpp"

namespace hpf {

/// One file's index entry. Encodes to exactly 24 bytes:
/// key u64 | part_position u32 | offset u64 | stored_size u32.
struct MetadataRecord {
    FileKey key;
    std::uint32_t part_position = 0;  // index i of "part-<i>"
    std::uint64_t offset = 0;         // byte offset into the part object
    std::uint32_t stored_size = 0;    // on-disk frame length, header included

    static constexpr std::uint64_t kEncodedSize = 24;

    void encode(std::uint8_t* out) const;
    static MetadataRecord decode(std::span<const std::uint8_t> bytes);

    friend bool operator==(const MetadataRecord&, const MetadataRecord&) = default;
};

/// Splits a byte buffer into complete 24-byte records; `tail_bytes` reports
/// how many trailing bytes did not form a whole record (a torn final write).
std::vector<MetadataRecord> decode_record_stream(std::span<const std::uint8_t> bytes,
                                                 std::uint64_t* tail_bytes = nullptr);

std::vector<std::uint8_t> encode_records(std::span<const MetadataRecord> records);

/// Content frame: original_size u32 | payload. stored_size of the record is
/// the whole frame, so one ranged read fetches it exactly.
struct ContentFrame {
    std::uint32_t original_size = 0;
    std::vector<std::uint8_t> payload;

    static constexpr std::uint64_t kHeaderSize = 4;

    std::vector<std::uint8_t> encode() const;
    static ContentFrame decode(std::span<const std::uint8_t> bytes);
};

/// _names framing: repeated [u32 length | UTF-8 bytes].
std::vector<std::uint8_t> encode_name(std::string_view name);

/// Strict parse of a whole _names object; a torn entry is a format error.
std::vector<std::string> decode_names(std::span<const std::uint8_t> bytes);

/// Lenient parse used by recovery: stops at the first incomplete entry.
std::vector<std::string> decode_names_prefix(std::span<const std::uint8_t> bytes);

}  // namespace hpf
