#pragma once

#include <memory>

#include "hpf/io_meter.hpp"
#include "hpf/storage.hpp"

namespace hpf {

/// Counts every operation against a shared IoMeter and forwards to the
/// wrapped backend. Reads of pinned objects count as cached_read_ops
/// instead of read_ops.
class MeteredBackend : public StorageBackend {
public:
    MeteredBackend(std::shared_ptr<StorageBackend> inner, std::shared_ptr<IoMeter> meter)
        : inner_(std::move(inner)), meter_(std::move(meter)) {}

    void create(const std::string& path) override {
        inner_->create(path);
        meter_->record_write(path, 0);
    }

    std::uint64_t append(const std::string& path, std::span<const std::uint8_t> bytes) override {
        std::uint64_t len = inner_->append(path, bytes);
        meter_->record_write(path, bytes.size());
        return len;
    }

    std::vector<std::uint8_t> read_range(const std::string& path, std::uint64_t offset,
                                         std::uint64_t length) override {
        auto out = inner_->read_range(path, offset, length);
        meter_->record_read(path, offset, length, inner_->pinned(path));
        return out;
    }

    std::uint64_t length(const std::string& path) override { return inner_->length(path); }

    void remove(const std::string& path) override {
        inner_->remove(path);
        meter_->record_write(path, 0);
    }

    void rename(const std::string& src, const std::string& dst) override {
        inner_->rename(src, dst);
        meter_->record_write(src, 0);
        meter_->record_write(dst, 0);
    }

    std::vector<std::string> list(const std::string& prefix) override {
        return inner_->list(prefix);
    }

    bool exists(const std::string& path) override { return inner_->exists(path); }
    void pin(const std::string& path) override { inner_->pin(path); }
    void unpin(const std::string& path) override { inner_->unpin(path); }
    bool pinned(const std::string& path) override { return inner_->pinned(path); }

    IoMeter& meter() noexcept { return *meter_; }
    const std::shared_ptr<IoMeter>& meter_ptr() const noexcept { return meter_; }

private:
    std::shared_ptr<StorageBackend> inner_;
    std::shared_ptr<IoMeter> meter_;
};

}  // namespace hpf
