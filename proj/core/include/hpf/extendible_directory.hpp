#pragma once

// In-memory extendible hash table routing each key to a bucket (one bucket
// per index file). Splits redistribute by the next suffix bit and double the
// slot table when the splitting bucket is at global depth.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "hpf/hashing.hpp"
#include "hpf/metadata.hpp"

namespace hpf {

struct Bucket {
    std::uint32_t id = 0;
    unsigned local_depth = 0;
    // Authoritative count even when records are not resident; loaded buckets
    // keep record_count == records.size().
    std::uint64_t record_count = 0;
    bool loaded = false;
    std::map<std::uint64_t, MetadataRecord> records;
};

class ExtendibleDirectory {
public:
    /// Fresh directory: global depth 0, one empty loaded bucket with id 0.
    explicit ExtendibleDirectory(std::uint64_t capacity);

    unsigned global_depth() const noexcept { return global_depth_; }
    std::uint64_t capacity() const noexcept { return capacity_; }
    std::uint64_t record_count() const noexcept;

    /// Bucket id the key routes to: slots[key's low global_depth bits].
    std::uint32_t locate_bucket(FileKey key) const;

    /// Stores the record in its bucket, splitting first (possibly more than
    /// once) if the bucket is at capacity. Returns the ids of every bucket
    /// whose record set changed. Throws duplicate-key and leaves the
    /// directory untouched if the key is already present.
    std::set<std::uint32_t> insert(const MetadataRecord& record);

    /// Splits a full bucket; returns the new bucket's id. The new id is
    /// always max-so-far + 1 so index file names are never reused.
    std::uint32_t split_bucket(std::uint32_t bucket_id);

    const Bucket& bucket(std::uint32_t id) const;
    const std::vector<std::uint32_t>& slots() const noexcept { return slots_; }
    std::vector<std::uint32_t> bucket_ids() const;

    /// Suffix bit pattern every key in the bucket shares (its low
    /// local_depth bits).
    std::uint64_t bucket_suffix(std::uint32_t id) const;

    /// Replaces a non-resident bucket's record set (used when an index file
    /// body is read back before an append).
    void load_bucket(std::uint32_t id, std::map<std::uint64_t, MetadataRecord> records);
    bool bucket_loaded(std::uint32_t id) const { return bucket(id).loaded; }

    /// Shape serialization: global depth, slot table, per-bucket
    /// {id, local_depth, record_count}. Records are not included; they live
    /// in the index files.
    std::vector<std::uint8_t> serialize_shape() const;
    static ExtendibleDirectory deserialize_shape(std::span<const std::uint8_t> bytes,
                                                 std::uint64_t capacity);

private:
    Bucket& bucket_mut(std::uint32_t id);

    std::uint64_t capacity_;
    unsigned global_depth_ = 0;
    std::vector<std::uint32_t> slots_;
    std::map<std::uint32_t, Bucket> buckets_;
    std::uint32_t next_bucket_id_ = 1;
};

}  // namespace hpf
