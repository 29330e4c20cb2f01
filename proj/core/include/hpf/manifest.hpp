#pragma once

// Persistent container state, stored as canonical JSON in the "_manifest"
// object: format version, codec, capacity and part configuration, the
// extendible directory's shape, and the file count. The manifest rewrite is
// the commit point for directory shape changes.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hpf/codec.hpp"
#include "hpf/metadata.hpp"

namespace hpf {

struct PartInfo {
    std::uint32_t id = 0;
    std::uint64_t length = 0;

    friend bool operator==(const PartInfo&, const PartInfo&) = default;
};

struct ArchiveManifest {
    static constexpr std::uint32_t kFormatVersion = 1;

    std::uint32_t format_version = kFormatVersion;
    CodecId codec = CodecId::identity;
    std::uint64_t bucket_capacity = 0;
    std::uint64_t max_part_size = 0;  // 0 = unlimited
    std::uint32_t workers = 2;
    std::vector<PartInfo> parts;
    std::vector<std::uint8_t> directory_shape;  // ExtendibleDirectory::serialize_shape bytes
    std::uint64_t file_count = 0;

    std::vector<std::uint8_t> to_bytes() const;
    static ArchiveManifest from_bytes(std::span<const std::uint8_t> bytes);
};

/// Object names inside an archive.
namespace object_names {
inline constexpr std::string_view kManifest = "_manifest";
inline constexpr std::string_view kNames = "_names";
inline constexpr std::string_view kTemporaryIndex = "_temporaryIndex";
inline std::string part(std::uint32_t i) { return "part-" + std::to_string(i); }
inline std::string index(std::uint32_t id) { return "index-" + std::to_string(id); }
}  // namespace object_names

/// How many 24-byte records fit in one block: with the 128 MiB default this
/// is 128*1024*1024/24 = 5,592,405, the per-index-file cap.
constexpr std::uint64_t max_records_for_block(std::uint64_t block_size_bytes) {
    return block_size_bytes / MetadataRecord::kEncodedSize;
}

inline constexpr std::uint64_t kDefaultBlockSize = 128ULL * 1024 * 1024;

}  // namespace hpf
