#include "hpf/baseline.hpp"

#include <algorithm>
#include <map>

#include "hpf/endian.hpp"
#include "hpf/errors.hpp"
#include "hpf/hashing.hpp"

namespace hpf {

namespace {

constexpr std::uint64_t kScanChunk = 64 * 1024;

/// Sequential reader over one object, fetching fixed chunks as the parser
/// consumes them. Models streaming a merged file from its start.
class ChunkedReader {
public:
    ChunkedReader(StorageBackend& backend, std::string path, std::uint64_t start_offset = 0)
        : backend_(backend),
          path_(std::move(path)),
          object_len_(backend.length(path_)),
          fetch_offset_(start_offset),
          consumed_(start_offset) {}

    std::uint64_t object_length() const noexcept { return object_len_; }
    std::uint64_t position() const noexcept { return consumed_; }
    bool exhausted() const noexcept { return consumed_ >= object_len_; }

    bool fill(std::uint64_t need) {
        while (buffer_.size() - cursor_ < need) {
            if (fetch_offset_ >= object_len_) return false;
            std::uint64_t len = std::min(kScanChunk, object_len_ - fetch_offset_);
            auto chunk = backend_.read_range(path_, fetch_offset_, len);
            fetch_offset_ += len;
            buffer_.insert(buffer_.end(), chunk.begin(), chunk.end());
        }
        return true;
    }

    std::uint32_t u32be() {
        require(4);
        std::uint32_t v = load_u32be(buffer_.data() + cursor_);
        advance(4);
        return v;
    }

    std::uint64_t u64be() {
        require(8);
        std::uint64_t v = load_u64be(buffer_.data() + cursor_);
        advance(8);
        return v;
    }

    std::vector<std::uint8_t> bytes(std::uint64_t n) {
        require(n);
        std::vector<std::uint8_t> out(buffer_.begin() + cursor_, buffer_.begin() + cursor_ + n);
        advance(n);
        return out;
    }

private:
    void require(std::uint64_t need) {
        if (!fill(need)) {
            throw FormatError("container truncated mid-frame", consumed_);
        }
    }

    void advance(std::uint64_t n) {
        cursor_ += n;
        consumed_ += n;
        // Trim the consumed prefix so memory stays bounded by one chunk.
        if (cursor_ >= kScanChunk) {
            buffer_.erase(buffer_.begin(), buffer_.begin() + cursor_);
            cursor_ = 0;
        }
    }

    StorageBackend& backend_;
    std::string path_;
    std::uint64_t object_len_;
    std::uint64_t fetch_offset_;
    std::uint64_t consumed_;
    std::size_t cursor_ = 0;
    std::vector<std::uint8_t> buffer_;
};

}  // namespace

ScanContainer ScanContainer::build(std::shared_ptr<StorageBackend> backend, std::string path,
                                   std::span<const NamedContent> files) {
    std::string data_path = path + "/seq-data";
    std::vector<std::uint8_t> bytes;
    for (const auto& [name, content] : files) {
        ByteWriter w;
        w.u32be(static_cast<std::uint32_t>(name.size()));
        w.raw(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(name.data()),
                                            name.size()));
        w.u32be(static_cast<std::uint32_t>(content.size()));
        w.raw(content);
        auto frame = w.take();
        bytes.insert(bytes.end(), frame.begin(), frame.end());
    }
    put_object(*backend, data_path, bytes);
    return ScanContainer(std::move(backend), std::move(data_path));
}

ScanContainer ScanContainer::open(std::shared_ptr<StorageBackend> backend, std::string path) {
    return ScanContainer(std::move(backend), path + "/seq-data");
}

std::optional<std::vector<std::uint8_t>> ScanContainer::get(std::string_view name) {
    ChunkedReader reader(*backend_, data_path_);
    while (!reader.exhausted()) {
        std::uint32_t name_len = reader.u32be();
        std::vector<std::uint8_t> frame_name = reader.bytes(name_len);
        std::uint32_t size = reader.u32be();
        std::vector<std::uint8_t> content = reader.bytes(size);
        if (name.size() == frame_name.size() &&
            std::equal(name.begin(), name.end(),
                       reinterpret_cast<const char*>(frame_name.data()))) {
            return content;
        }
    }
    return std::nullopt;
}

std::uint64_t ScanContainer::container_bytes() const { return backend_->length(data_path_); }

SparseContainer SparseContainer::build(std::shared_ptr<StorageBackend> backend, std::string path,
                                       std::span<const NamedContent> files) {
    std::map<std::uint64_t, const NamedContent*> by_key;
    for (const NamedContent& f : files) {
        if (!by_key.emplace(name_hash(f.first).value, &f).second) {
            throw_error(ErrorCode::duplicate_key,
                        "two names share a key in the sparse container input");
        }
    }

    std::string data_path = path + "/map-data";
    std::string index_path = path + "/map-index";
    std::vector<std::uint8_t> data;
    std::vector<std::uint8_t> index;
    std::uint64_t position = 0;
    for (const auto& [key, file] : by_key) {
        if (position % kIndexInterval == 0) {
            ByteWriter w;
            w.u64be(key);
            w.u64be(data.size());
            auto entry = w.take();
            index.insert(index.end(), entry.begin(), entry.end());
        }
        ByteWriter w;
        w.u64be(key);
        w.u32be(static_cast<std::uint32_t>(file->second.size()));
        w.raw(file->second);
        auto frame = w.take();
        data.insert(data.end(), frame.begin(), frame.end());
        ++position;
    }
    put_object(*backend, data_path, data);
    put_object(*backend, index_path, index);
    return SparseContainer(std::move(backend), std::move(data_path), std::move(index_path));
}

SparseContainer SparseContainer::open(std::shared_ptr<StorageBackend> backend,
                                      std::string path) {
    return SparseContainer(std::move(backend), path + "/map-data", path + "/map-index");
}

std::optional<std::vector<std::uint8_t>> SparseContainer::get(std::string_view name) {
    return get_by_key(name_hash(name).value);
}

std::optional<std::vector<std::uint8_t>> SparseContainer::get_by_key(std::uint64_t key) {
    constexpr std::uint64_t kEntrySize = 16;
    std::uint64_t entries = backend_->length(index_path_) / kEntrySize;
    if (entries == 0) return std::nullopt;

    // Binary search the sparse index for the greatest sampled key <= key;
    // every probe is one ranged read of a 16-byte entry.
    auto entry_key = [&](std::uint64_t i) {
        auto bytes = backend_->read_range(index_path_, i * kEntrySize, 8);
        return load_u64be(bytes.data());
    };
    if (entry_key(0) > key) return std::nullopt;
    std::uint64_t lo = 0, hi = entries;
    while (hi - lo > 1) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (entry_key(mid) <= key) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    auto entry = backend_->read_range(index_path_, lo * kEntrySize, kEntrySize);
    std::uint64_t start_offset = load_u64be(entry.data() + 8);

    // Forward scan from the sampled position: sorted keys bound the window
    // to one index interval.
    ChunkedReader reader(*backend_, data_path_, start_offset);
    for (std::uint64_t scanned = 0; scanned < kIndexInterval && !reader.exhausted(); ++scanned) {
        std::uint64_t frame_key = reader.u64be();
        std::uint32_t size = reader.u32be();
        if (frame_key == key) return reader.bytes(size);
        if (frame_key > key) return std::nullopt;
        reader.bytes(size);
    }
    return std::nullopt;
}

std::uint64_t SparseContainer::container_bytes() const {
    return backend_->length(data_path_) + backend_->length(index_path_);
}

}  // namespace hpf
