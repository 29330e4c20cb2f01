#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>

#include "hpf/storage.hpp"

namespace hpf {

/// Simulates a client crash: mutations up to a scheduled index succeed, the
/// scheduled one and everything after raise injected-failure. Reads keep
/// working, the way a restarted client inspects surviving state.
class FaultInjectingBackend : public StorageBackend {
public:
    explicit FaultInjectingBackend(std::shared_ptr<StorageBackend> inner,
                                   std::optional<std::uint64_t> fail_from = std::nullopt)
        : inner_(std::move(inner)), fail_from_(fail_from) {}

    void set_fail_from(std::optional<std::uint64_t> fail_from) {
        std::lock_guard lock(mutex_);
        fail_from_ = fail_from;
        mutation_count_ = 0;
    }

    /// Mutations attempted so far (create/append/remove/rename).
    std::uint64_t mutation_count() const {
        std::lock_guard lock(mutex_);
        return mutation_count_;
    }

    void create(const std::string& path) override {
        gate();
        inner_->create(path);
    }
    std::uint64_t append(const std::string& path, std::span<const std::uint8_t> bytes) override {
        gate();
        return inner_->append(path, bytes);
    }
    void remove(const std::string& path) override {
        gate();
        inner_->remove(path);
    }
    void rename(const std::string& src, const std::string& dst) override {
        gate();
        inner_->rename(src, dst);
    }

    std::vector<std::uint8_t> read_range(const std::string& path, std::uint64_t offset,
                                         std::uint64_t length) override {
        return inner_->read_range(path, offset, length);
    }
    std::uint64_t length(const std::string& path) override { return inner_->length(path); }
    std::vector<std::string> list(const std::string& prefix) override {
        return inner_->list(prefix);
    }
    bool exists(const std::string& path) override { return inner_->exists(path); }
    void pin(const std::string& path) override { inner_->pin(path); }
    void unpin(const std::string& path) override { inner_->unpin(path); }
    bool pinned(const std::string& path) override { return inner_->pinned(path); }

private:
    void gate();

    std::shared_ptr<StorageBackend> inner_;
    mutable std::mutex mutex_;
    std::optional<std::uint64_t> fail_from_;
    std::uint64_t mutation_count_ = 0;
};

}  // namespace hpf
