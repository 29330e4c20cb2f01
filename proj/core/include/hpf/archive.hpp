#pragma once

// The container: creation (parallel merge into part objects + two-level
// index build), append with per-bucket index rewrites, open with crash
// recovery driven by the _temporaryIndex marker, and single-read metadata
// lookup followed by a single ranged content read.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hpf/codec.hpp"
#include "hpf/extendible_directory.hpp"
#include "hpf/hashing.hpp"
#include "hpf/manifest.hpp"
#include "hpf/metadata.hpp"
#include "hpf/monotone_index.hpp"
#include "hpf/storage.hpp"

namespace hpf {

struct ArchiveConfig {
    std::uint32_t workers = 2;
    std::uint64_t bucket_capacity = 200000;
    std::uint64_t max_part_size = 0;  // 0 = unlimited, otherwise parts rotate
    CodecId codec = CodecId::identity;
    // One index file must fit a single block; the effective bucket capacity
    // is capped at block_size / 24.
    std::uint64_t block_size = kDefaultBlockSize;
};

struct InputFile {
    std::string name;
    std::function<std::vector<std::uint8_t>()> source;

    static InputFile from_bytes(std::string name, std::vector<std::uint8_t> bytes) {
        auto shared = std::make_shared<std::vector<std::uint8_t>>(std::move(bytes));
        return InputFile{std::move(name), [shared] { return *shared; }};
    }
};

struct BucketStats {
    std::uint32_t id = 0;
    unsigned local_depth = 0;
    std::uint64_t record_count = 0;
    std::uint64_t upsilon = 0;
    double bits_per_key = 0.0;
};

struct ArchiveStats {
    std::uint64_t file_count = 0;
    unsigned global_depth = 0;
    std::uint64_t bucket_capacity = 0;
    CodecId codec = CodecId::identity;
    std::uint32_t workers = 0;
    std::vector<PartInfo> parts;
    std::vector<BucketStats> buckets;
    std::uint64_t stored_bytes = 0;  // sum of part lengths
};

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_passed() const {
        for (const auto& c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }
};

class Archive {
public:
    /// Builds a new container at `archive_path` (which must be absent) from
    /// the given files. config.workers merge threads append to their own
    /// part objects; the _temporaryIndex object exists for the duration and
    /// its deletion is the final commit step.
    static Archive create(std::shared_ptr<StorageBackend> backend, std::string archive_path,
                          std::span<const InputFile> files, ArchiveConfig config = {});

    /// Opens an existing container. If a _temporaryIndex marker is present
    /// a crashed create/append is recovered first: index files are rebuilt
    /// from surviving bodies plus the marker's complete records.
    static Archive open(std::shared_ptr<StorageBackend> backend, std::string archive_path);

    /// Adds files to an open, clean archive. Only buckets that receive
    /// records have their index files rebuilt (written to "<name>.tmp",
    /// then swapped in); untouched index files stay byte-identical.
    void append(std::span<const InputFile> files);

    /// Single-read metadata lookup: locate bucket, evaluate the monotone
    /// index (loading its header on first touch, one ranged read), then one
    /// 24-byte ranged read of the record. Non-members cost zero body reads.
    std::optional<MetadataRecord> find_metadata(std::string_view name);

    /// find_metadata plus one ranged read of the content frame, decoded and
    /// decompressed back to the original bytes.
    std::optional<std::vector<std::uint8_t>> read_file(std::string_view name);

    /// All archived names in append order.
    std::vector<std::string> list_names();

    ArchiveStats stats();
    VerifyReport verify();

    const ArchiveManifest& manifest() const noexcept { return manifest_; }
    const ExtendibleDirectory& directory() const noexcept { return directory_; }
    const std::string& archive_path() const noexcept { return path_; }

    std::string object_path(std::string_view object_name) const;
    /// Serialized index length of one bucket (loads the header if needed).
    std::uint64_t bucket_upsilon(std::uint32_t bucket_id);

    /// Pins / unpins every index object (models keeping index blocks in the
    /// DataNodes' cache).
    void pin_index_objects();
    void unpin_index_objects();

private:
    struct LoadedHeader {
        MonotoneIndex index;
        std::uint64_t upsilon = 0;
    };

    Archive(std::shared_ptr<StorageBackend> backend, std::string path, ArchiveManifest manifest,
            ExtendibleDirectory directory);

    std::shared_ptr<const LoadedHeader> header(std::uint32_t bucket_id);
    void ensure_bucket_records(std::uint32_t bucket_id);
    void write_index_file(std::uint32_t bucket_id, bool replace_existing);
    void commit_manifest();
    std::vector<PartInfo> scan_part_roster() const;

    /// Parallel merge shared by create and append. Returns the ids of every
    /// bucket whose record set changed.
    std::set<std::uint32_t> merge_files(std::span<const InputFile> files);

    static void recover(StorageBackend& backend, const std::string& path,
                        const ArchiveManifest& manifest);

    std::shared_ptr<StorageBackend> backend_;
    std::string path_;
    ArchiveManifest manifest_;
    ExtendibleDirectory directory_;

    struct HeaderCache {
        std::mutex mutex;
        std::map<std::uint32_t, std::shared_ptr<const LoadedHeader>> loaded;
    };
    std::unique_ptr<HeaderCache> headers_ = std::make_unique<HeaderCache>();
};

}  // namespace hpf
