#include <fstream>
#include <system_error>

#include "hpf/errors.hpp"
#include "hpf/storage.hpp"

namespace fs = std::filesystem;

namespace hpf {

LocalDirBackend::LocalDirBackend(fs::path root, BackendOptions options)
    : root_(std::move(root)), options_(options) {
    fs::create_directories(root_);
}

fs::path LocalDirBackend::resolve(const std::string& path) const {
    validate_object_path(path);
    return root_ / fs::path(path);
}

void LocalDirBackend::create(const std::string& path) {
    fs::path p = resolve(path);
    std::lock_guard lock(mutex_);
    if (fs::exists(p)) {
        throw_error(ErrorCode::conflict, "object already exists at " + path);
    }
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) {
        throw_error(ErrorCode::io, "cannot create " + path);
    }
}

std::uint64_t LocalDirBackend::append(const std::string& path,
                                      std::span<const std::uint8_t> bytes) {
    fs::path p = resolve(path);
    std::lock_guard lock(mutex_);
    if (!fs::is_regular_file(p)) {
        throw_error(ErrorCode::not_found, "no object at " + path);
    }
    {
        std::ofstream out(p, std::ios::binary | std::ios::app);
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) {
            throw_error(ErrorCode::io, "append to " + path + " failed");
        }
    }
    auto resident = resident_.find(path);
    if (resident != resident_.end()) {
        resident->second.insert(resident->second.end(), bytes.begin(), bytes.end());
    }
    return fs::file_size(p);
}

std::vector<std::uint8_t> LocalDirBackend::read_range(const std::string& path,
                                                      std::uint64_t offset,
                                                      std::uint64_t length) {
    fs::path p = resolve(path);
    std::lock_guard lock(mutex_);
    auto resident = resident_.find(path);
    if (resident != resident_.end()) {
        const auto& bytes = resident->second;
        if (offset + length > bytes.size()) {
            throw_error(ErrorCode::range, "read past end of " + path);
        }
        return std::vector<std::uint8_t>(bytes.begin() + offset, bytes.begin() + offset + length);
    }
    if (!fs::is_regular_file(p)) {
        throw_error(ErrorCode::not_found, "no object at " + path);
    }
    std::uint64_t size = fs::file_size(p);
    if (offset + length > size) {
        throw_error(ErrorCode::range, "read [" + std::to_string(offset) + ", " +
                                          std::to_string(offset + length) + ") past end of " +
                                          path + " (length " + std::to_string(size) + ")");
    }
    std::ifstream in(p, std::ios::binary);
    in.seekg(static_cast<std::streamoff>(offset));
    std::vector<std::uint8_t> out(length);
    in.read(reinterpret_cast<char*>(out.data()), static_cast<std::streamsize>(length));
    if (!in && length > 0) {
        throw_error(ErrorCode::io, "short read from " + path);
    }
    return out;
}

std::uint64_t LocalDirBackend::length(const std::string& path) {
    fs::path p = resolve(path);
    std::lock_guard lock(mutex_);
    if (!fs::is_regular_file(p)) {
        throw_error(ErrorCode::not_found, "no object at " + path);
    }
    return fs::file_size(p);
}

void LocalDirBackend::remove(const std::string& path) {
    fs::path p = resolve(path);
    std::lock_guard lock(mutex_);
    if (!fs::is_regular_file(p)) {
        throw_error(ErrorCode::not_found, "no object at " + path);
    }
    fs::remove(p);
    resident_.erase(path);
}

void LocalDirBackend::rename(const std::string& src, const std::string& dst) {
    fs::path src_p = resolve(src);
    fs::path dst_p = resolve(dst);
    std::lock_guard lock(mutex_);
    if (!fs::is_regular_file(src_p)) {
        throw_error(ErrorCode::not_found, "no object at " + src);
    }
    if (fs::exists(dst_p)) {
        throw_error(ErrorCode::conflict, "rename target already exists: " + dst);
    }
    fs::create_directories(dst_p.parent_path());
    fs::rename(src_p, dst_p);
    auto resident = resident_.find(src);
    if (resident != resident_.end()) {
        resident_.emplace(dst, std::move(resident->second));
        resident_.erase(resident);
    }
}

std::vector<std::string> LocalDirBackend::list(const std::string& prefix) {
    std::lock_guard lock(mutex_);
    std::vector<std::string> out;
    if (!fs::exists(root_)) return out;
    for (const auto& entry : fs::recursive_directory_iterator(root_)) {
        if (!entry.is_regular_file()) continue;
        std::string rel = entry.path().lexically_relative(root_).generic_string();
        if (rel.starts_with(prefix)) out.push_back(rel);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool LocalDirBackend::exists(const std::string& path) {
    fs::path p = resolve(path);
    std::lock_guard lock(mutex_);
    return fs::is_regular_file(p);
}

void LocalDirBackend::pin(const std::string& path) {
    fs::path p = resolve(path);
    std::lock_guard lock(mutex_);
    if (!fs::is_regular_file(p)) {
        throw_error(ErrorCode::not_found, "no object at " + path);
    }
    if (resident_.contains(path)) return;
    std::uint64_t size = fs::file_size(p);
    std::ifstream in(p, std::ios::binary);
    std::vector<std::uint8_t> bytes(size);
    in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(size));
    resident_.emplace(path, std::move(bytes));
}

void LocalDirBackend::unpin(const std::string& path) {
    fs::path p = resolve(path);
    std::lock_guard lock(mutex_);
    if (!fs::is_regular_file(p)) {
        throw_error(ErrorCode::not_found, "no object at " + path);
    }
    resident_.erase(path);
}

bool LocalDirBackend::pinned(const std::string& path) {
    std::lock_guard lock(mutex_);
    return resident_.contains(path);
}

}  // namespace hpf
