#pragma once

// Abstract object store standing in for HDFS: ranged reads, atomic appends,
// atomic rename, listing, and pinning (an object marked memory-resident, the
// stand-in for centralized cache management). Two reference backends: an
// in-memory map and a local directory tree.

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace hpf {

/// Namespace-relative object path ("archive1/part-0"). Throws on traversal
/// or empty/absolute paths.
void validate_object_path(const std::string& path);

class StorageBackend {
public:
    virtual ~StorageBackend() = default;

    /// Creates an empty object. Conflict error if it already exists.
    virtual void create(const std::string& path) = 0;
    /// Appends atomically (a failed call leaves the object untouched).
    /// Returns the object's new length.
    virtual std::uint64_t append(const std::string& path, std::span<const std::uint8_t> bytes) = 0;
    virtual std::vector<std::uint8_t> read_range(const std::string& path, std::uint64_t offset,
                                                 std::uint64_t length) = 0;
    virtual std::uint64_t length(const std::string& path) = 0;
    virtual void remove(const std::string& path) = 0;
    /// Atomic; destination must be absent.
    virtual void rename(const std::string& src, const std::string& dst) = 0;
    /// All object paths starting with `prefix`, sorted.
    virtual std::vector<std::string> list(const std::string& prefix) = 0;
    virtual bool exists(const std::string& path) = 0;

    /// Marks an object memory-resident. Reads stay correct either way; the
    /// metered wrapper counts reads of pinned objects separately.
    virtual void pin(const std::string& path) = 0;
    virtual void unpin(const std::string& path) = 0;
    virtual bool pinned(const std::string& path) = 0;
};

std::vector<std::uint8_t> read_all(StorageBackend& backend, const std::string& path);

/// create + append in one go; replaces an existing object.
void put_object(StorageBackend& backend, const std::string& path,
                std::span<const std::uint8_t> bytes);

/// Crash-safe replace: write "<path>.tmp", delete the old object, rename the
/// temp over it. A reader that finds only the temp has a complete copy.
void atomic_put(StorageBackend& backend, const std::string& path,
                std::span<const std::uint8_t> bytes);

struct BackendOptions {
    // Stand-in for a deferred-flush storage policy; reference backends
    // record it and change nothing else.
    bool deferred_flush_hint = false;
};

class MemoryBackend : public StorageBackend {
public:
    explicit MemoryBackend(BackendOptions options = {}) : options_(options) {}

    void create(const std::string& path) override;
    std::uint64_t append(const std::string& path, std::span<const std::uint8_t> bytes) override;
    std::vector<std::uint8_t> read_range(const std::string& path, std::uint64_t offset,
                                         std::uint64_t length) override;
    std::uint64_t length(const std::string& path) override;
    void remove(const std::string& path) override;
    void rename(const std::string& src, const std::string& dst) override;
    std::vector<std::string> list(const std::string& prefix) override;
    bool exists(const std::string& path) override;
    void pin(const std::string& path) override;
    void unpin(const std::string& path) override;
    bool pinned(const std::string& path) override;

    const BackendOptions& options() const noexcept { return options_; }

private:
    std::vector<std::uint8_t>& object(const std::string& path);

    BackendOptions options_;
    std::mutex mutex_;
    std::map<std::string, std::vector<std::uint8_t>> objects_;
    std::set<std::string> pinned_;
};

class LocalDirBackend : public StorageBackend {
public:
    explicit LocalDirBackend(std::filesystem::path root, BackendOptions options = {});

    void create(const std::string& path) override;
    std::uint64_t append(const std::string& path, std::span<const std::uint8_t> bytes) override;
    std::vector<std::uint8_t> read_range(const std::string& path, std::uint64_t offset,
                                         std::uint64_t length) override;
    std::uint64_t length(const std::string& path) override;
    void remove(const std::string& path) override;
    void rename(const std::string& src, const std::string& dst) override;
    std::vector<std::string> list(const std::string& prefix) override;
    bool exists(const std::string& path) override;
    void pin(const std::string& path) override;
    void unpin(const std::string& path) override;
    bool pinned(const std::string& path) override;

    const std::filesystem::path& root() const noexcept { return root_; }

private:
    std::filesystem::path resolve(const std::string& path) const;

    std::filesystem::path root_;
    BackendOptions options_;
    std::mutex mutex_;
    // Pinned objects keep a resident copy that mutations update in step.
    std::map<std::string, std::vector<std::uint8_t>> resident_;
};

}  // namespace hpf
