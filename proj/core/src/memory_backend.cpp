#include <algorithm>

#include "hpf/errors.hpp"
#include "hpf/storage.hpp"

namespace hpf {

void validate_object_path(const std::string& path) {
    if (path.empty()) {
        throw_error(ErrorCode::invalid_config, "object path is empty");
    }
    if (path.front() == '/' || path.back() == '/') {
        throw_error(ErrorCode::invalid_config, "object path must be relative: " + path);
    }
    if (path.find('\0') != std::string::npos) {
        throw_error(ErrorCode::invalid_config, "object path contains NUL");
    }
    std::size_t start = 0;
    while (start <= path.size()) {
        std::size_t end = path.find('/', start);
        if (end == std::string::npos) end = path.size();
        std::string_view component(path.data() + start, end - start);
        if (component.empty() || component == "." || component == "..") {
            throw_error(ErrorCode::invalid_config,
                        "object path escapes the backend root: " + path);
        }
        start = end + 1;
    }
}

std::vector<std::uint8_t> read_all(StorageBackend& backend, const std::string& path) {
    return backend.read_range(path, 0, backend.length(path));
}

void put_object(StorageBackend& backend, const std::string& path,
                std::span<const std::uint8_t> bytes) {
    if (backend.exists(path)) backend.remove(path);
    backend.create(path);
    if (!bytes.empty()) backend.append(path, bytes);
}

void atomic_put(StorageBackend& backend, const std::string& path,
                std::span<const std::uint8_t> bytes) {
    std::string tmp = path + ".tmp";
    put_object(backend, tmp, bytes);
    if (backend.exists(path)) backend.remove(path);
    backend.rename(tmp, path);
}

std::vector<std::uint8_t>& MemoryBackend::object(const std::string& path) {
    auto it = objects_.find(path);
    if (it == objects_.end()) {
        throw_error(ErrorCode::not_found, "no object at " + path);
    }
    return it->second;
}

void MemoryBackend::create(const std::string& path) {
    validate_object_path(path);
    std::lock_guard lock(mutex_);
    if (!objects_.emplace(path, std::vector<std::uint8_t>{}).second) {
        throw_error(ErrorCode::conflict, "object already exists at " + path);
    }
}

std::uint64_t MemoryBackend::append(const std::string& path,
                                    std::span<const std::uint8_t> bytes) {
    std::lock_guard lock(mutex_);
    auto& obj = object(path);
    obj.insert(obj.end(), bytes.begin(), bytes.end());
    return obj.size();
}

std::vector<std::uint8_t> MemoryBackend::read_range(const std::string& path,
                                                    std::uint64_t offset, std::uint64_t length) {
    std::lock_guard lock(mutex_);
    const auto& obj = object(path);
    if (offset + length > obj.size()) {
        throw_error(ErrorCode::range, "read [" + std::to_string(offset) + ", " +
                                          std::to_string(offset + length) + ") past end of " +
                                          path + " (length " + std::to_string(obj.size()) + ")");
    }
    return std::vector<std::uint8_t>(obj.begin() + offset, obj.begin() + offset + length);
}

std::uint64_t MemoryBackend::length(const std::string& path) {
    std::lock_guard lock(mutex_);
    return object(path).size();
}

void MemoryBackend::remove(const std::string& path) {
    std::lock_guard lock(mutex_);
    if (objects_.erase(path) == 0) {
        throw_error(ErrorCode::not_found, "no object at " + path);
    }
    pinned_.erase(path);
}

void MemoryBackend::rename(const std::string& src, const std::string& dst) {
    validate_object_path(dst);
    std::lock_guard lock(mutex_);
    auto it = objects_.find(src);
    if (it == objects_.end()) {
        throw_error(ErrorCode::not_found, "no object at " + src);
    }
    if (objects_.contains(dst)) {
        throw_error(ErrorCode::conflict, "rename target already exists: " + dst);
    }
    objects_.emplace(dst, std::move(it->second));
    objects_.erase(it);
    if (pinned_.erase(src) > 0) pinned_.insert(dst);
}

std::vector<std::string> MemoryBackend::list(const std::string& prefix) {
    std::lock_guard lock(mutex_);
    std::vector<std::string> out;
    for (const auto& [path, bytes] : objects_) {
        if (path.starts_with(prefix)) out.push_back(path);
    }
    return out;
}

bool MemoryBackend::exists(const std::string& path) {
    std::lock_guard lock(mutex_);
    return objects_.contains(path);
}

void MemoryBackend::pin(const std::string& path) {
    std::lock_guard lock(mutex_);
    object(path);
    pinned_.insert(path);
}

void MemoryBackend::unpin(const std::string& path) {
    std::lock_guard lock(mutex_);
    object(path);
    pinned_.erase(path);
}

bool MemoryBackend::pinned(const std::string& path) {
    std::lock_guard lock(mutex_);
    return pinned_.contains(path);
}

}  // namespace hpf
