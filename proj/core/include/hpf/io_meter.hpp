#pragma once

// IO operation counting. Access-cost claims in this project are made in
// operation and byte counts, and this meter is the single source of truth
// for them.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace hpf {

struct IoCounters {
    std::uint64_t read_ops = 0;
    std::uint64_t read_bytes = 0;
    std::uint64_t write_ops = 0;
    std::uint64_t write_bytes = 0;
    std::uint64_t seek_like_ops = 0;    // ranged reads whose start != previous end
    std::uint64_t cached_read_ops = 0;  // reads served from a pinned object

    IoCounters& operator+=(const IoCounters& other) {
        read_ops += other.read_ops;
        read_bytes += other.read_bytes;
        write_ops += other.write_ops;
        write_bytes += other.write_bytes;
        seek_like_ops += other.seek_like_ops;
        cached_read_ops += other.cached_read_ops;
        return *this;
    }
};

struct ReadRecord {
    std::string path;
    std::uint64_t offset = 0;
    std::uint64_t length = 0;
};

class IoMeter {
public:
    void record_read(const std::string& path, std::uint64_t offset, std::uint64_t length,
                     bool cached) {
        std::lock_guard lock(mutex_);
        auto& per = per_path_[path];
        if (cached) {
            per.cached_read_ops += 1;
            total_.cached_read_ops += 1;
        } else {
            per.read_ops += 1;
            per.read_bytes += length;
            total_.read_ops += 1;
            total_.read_bytes += length;
        }
        auto it = last_read_end_.find(path);
        if (it == last_read_end_.end() || it->second != offset) {
            per.seek_like_ops += 1;
            total_.seek_like_ops += 1;
        }
        last_read_end_[path] = offset + length;
        last_read_ = ReadRecord{path, offset, length};
    }

    void record_write(const std::string& path, std::uint64_t length) {
        std::lock_guard lock(mutex_);
        auto& per = per_path_[path];
        per.write_ops += 1;
        per.write_bytes += length;
        total_.write_ops += 1;
        total_.write_bytes += length;
    }

    IoCounters total() const {
        std::lock_guard lock(mutex_);
        return total_;
    }

    IoCounters for_path(const std::string& path) const {
        std::lock_guard lock(mutex_);
        auto it = per_path_.find(path);
        return it == per_path_.end() ? IoCounters{} : it->second;
    }

    std::map<std::string, IoCounters> per_path() const {
        std::lock_guard lock(mutex_);
        return per_path_;
    }

    std::optional<ReadRecord> last_read() const {
        std::lock_guard lock(mutex_);
        return last_read_;
    }

    void reset() {
        std::lock_guard lock(mutex_);
        total_ = IoCounters{};
        per_path_.clear();
        last_read_end_.clear();
        last_read_.reset();
    }

private:
    mutable std::mutex mutex_;
    IoCounters total_;
    std::map<std::string, IoCounters> per_path_;
    std::map<std::string, std::uint64_t> last_read_end_;
    std::optional<ReadRecord> last_read_;
};

}  // namespace hpf
