#pragma once

// Two simplified comparison containers that reproduce the asymptotic access
// behavior of the classic merged-file formats: a sequence-style container
// found by linear scan (O(n)) and a map-style container with a sparse index
// over sorted keys (binary search plus a bounded forward scan).

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hpf/storage.hpp"

namespace hpf {

using NamedContent = std::pair<std::string, std::vector<std::uint8_t>>;

/// Single data object of concatenated [u32 name_len | name | u32 size |
/// content] frames; lookup scans from the start.
class ScanContainer {
public:
    static ScanContainer build(std::shared_ptr<StorageBackend> backend, std::string path,
                               std::span<const NamedContent> files);
    static ScanContainer open(std::shared_ptr<StorageBackend> backend, std::string path);

    std::optional<std::vector<std::uint8_t>> get(std::string_view name);

    std::uint64_t container_bytes() const;
    const std::string& data_object() const noexcept { return data_path_; }

private:
    ScanContainer(std::shared_ptr<StorageBackend> backend, std::string data_path)
        : backend_(std::move(backend)), data_path_(std::move(data_path)) {}

    std::shared_ptr<StorageBackend> backend_;
    std::string data_path_;
};

/// Sorted data object of [u64 key | u32 size | content] frames plus a sparse
/// index holding every 128th key as [u64 key | u64 offset]. Lookup binary
/// searches the sparse index, then scans forward at most one interval.
class SparseContainer {
public:
    static constexpr std::uint64_t kIndexInterval = 128;

    static SparseContainer build(std::shared_ptr<StorageBackend> backend, std::string path,
                                 std::span<const NamedContent> files);
    static SparseContainer open(std::shared_ptr<StorageBackend> backend, std::string path);

    std::optional<std::vector<std::uint8_t>> get(std::string_view name);
    std::optional<std::vector<std::uint8_t>> get_by_key(std::uint64_t key);

    std::uint64_t container_bytes() const;
    const std::string& data_object() const noexcept { return data_path_; }
    const std::string& index_object() const noexcept { return index_path_; }

private:
    SparseContainer(std::shared_ptr<StorageBackend> backend, std::string data_path,
                    std::string index_path)
        : backend_(std::move(backend)),
          data_path_(std::move(data_path)),
          index_path_(std::move(index_path)) {}

    std::shared_ptr<StorageBackend> backend_;
    std::string data_path_;
    std::string index_path_;
};

}  // namespace hpf
