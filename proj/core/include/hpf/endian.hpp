#pragma once

// Big-endian load/store helpers. Every multi-byte integer in the container
// formats is big-endian, so all (de)serialization funnels through these.

#include <cstdint>
#include <cstddef>
#include <span>
#include <vector>

#include "hpf/errors.hpp"

namespace hpf {

inline void store_u16be(std::uint16_t v, std::uint8_t* out) {
    out[0] = static_cast<std::uint8_t>(v >> 8);
    out[1] = static_cast<std::uint8_t>(v);
}

inline void store_u32be(std::uint32_t v, std::uint8_t* out) {
    out[0] = static_cast<std::uint8_t>(v >> 24);
    out[1] = static_cast<std::uint8_t>(v >> 16);
    out[2] = static_cast<std::uint8_t>(v >> 8);
    out[3] = static_cast<std::uint8_t>(v);
}

inline void store_u64be(std::uint64_t v, std::uint8_t* out) {
    store_u32be(static_cast<std::uint32_t>(v >> 32), out);
    store_u32be(static_cast<std::uint32_t>(v), out + 4);
}

inline std::uint16_t load_u16be(const std::uint8_t* in) {
    return static_cast<std::uint16_t>((std::uint16_t(in[0]) << 8) | std::uint16_t(in[1]));
}

inline std::uint32_t load_u32be(const std::uint8_t* in) {
    return (std::uint32_t(in[0]) << 24) | (std::uint32_t(in[1]) << 16) |
           (std::uint32_t(in[2]) << 8) | std::uint32_t(in[3]);
}

inline std::uint64_t load_u64be(const std::uint8_t* in) {
    return (std::uint64_t(load_u32be(in)) << 32) | load_u32be(in + 4);
}

/// Cursor over a byte buffer that throws FormatError (with the failing
/// offset) on under-run instead of reading past the end.
class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::size_t offset() const noexcept { return offset_; }
    std::size_t remaining() const noexcept { return bytes_.size() - offset_; }

    std::uint8_t u8() { return take(1)[0]; }
    std::uint16_t u16be() { return load_u16be(take(2).data()); }
    std::uint32_t u32be() { return load_u32be(take(4).data()); }
    std::uint64_t u64be() { return load_u64be(take(8).data()); }

    std::span<const std::uint8_t> take(std::size_t n) {
        if (remaining() < n) {
            throw FormatError("truncated input, needed " + std::to_string(n) +
                                  " more bytes but only " + std::to_string(remaining()) +
                                  " remain",
                              offset_);
        }
        auto out = bytes_.subspan(offset_, n);
        offset_ += n;
        return out;
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t offset_ = 0;
};

class ByteWriter {
public:
    void u8(std::uint8_t v) { bytes_.push_back(v); }
    void u16be(std::uint16_t v) { grow(2, [&](std::uint8_t* p) { store_u16be(v, p); }); }
    void u32be(std::uint32_t v) { grow(4, [&](std::uint8_t* p) { store_u32be(v, p); }); }
    void u64be(std::uint64_t v) { grow(8, [&](std::uint8_t* p) { store_u64be(v, p); }); }
    void raw(std::span<const std::uint8_t> bytes) {
        bytes_.insert(bytes_.end(), bytes.begin(), bytes.end());
    }

    std::vector<std::uint8_t> take() { return std::move(bytes_); }
    std::size_t size() const noexcept { return bytes_.size(); }

private:
    template <typename F>
    void grow(std::size_t n, F fill) {
        bytes_.resize(bytes_.size() + n);
        fill(bytes_.data() + bytes_.size() - n);
    }

    std::vector<std::uint8_t> bytes_;
};

}  // namespace hpf
