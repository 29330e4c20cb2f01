#pragma once

// Order-preserving minimal perfect hash over one bucket's sorted keys,
// realized as an Elias-Fano encoding of the strictly increasing key
// sequence. rank(k) is the key's position among the bucket's sorted keys;
// unlike a generic MPHF the encoding is lossless, so non-members are
// detected directly.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hpf/bitvector.hpp"

namespace hpf {

class MonotoneIndex {
public:
    static constexpr char kMagic[4] = {'H', 'P', 'F', 'M'};
    static constexpr std::uint16_t kFormatVersion = 1;
    /// One sampled select position per this many set bits (~0.125 bits/key).
    static constexpr std::uint64_t kSelectSampleInterval = 512;

    MonotoneIndex() = default;

    /// Builds from a strictly increasing key sequence. Throws not-sorted /
    /// duplicate-key on bad input. The result is immutable.
    static MonotoneIndex build(std::span<const std::uint64_t> sorted_keys);

    /// Exact rank of `key` among the encoded keys, or nullopt if `key` is
    /// not a member.
    std::optional<std::uint64_t> rank(std::uint64_t key) const;

    /// Reconstructs the key with the given rank. rank < size().
    std::uint64_t key_at(std::uint64_t rank) const;

    std::uint64_t size() const noexcept { return n_; }
    bool empty() const noexcept { return n_ == 0; }
    std::uint8_t low_bit_width() const noexcept { return l_; }

    /// Encoding bits per key: high + low + select samples, excluding the
    /// constant-size header. 0 for an empty index.
    double bits_per_key() const noexcept;

    /// Byte length of serialize()'s output; the record body of an index
    /// file starts at exactly this offset.
    std::uint64_t serialized_size() const noexcept;

    std::vector<std::uint8_t> serialize() const;

    /// Parses a serialized index that occupies the whole span. Trailing
    /// bytes are a format error.
    static MonotoneIndex deserialize(std::span<const std::uint8_t> bytes);

    /// Parses a serialized index from the front of `bytes`, ignoring
    /// whatever follows. Sets `consumed` to the exact byte length.
    static MonotoneIndex deserialize_prefix(std::span<const std::uint8_t> bytes,
                                            std::uint64_t* consumed);

    /// Upper bound on serialized_size() for an index built by this class
    /// over `record_count` keys. Lets a reader fetch the whole header with
    /// one ranged read before it knows the exact length.
    static std::uint64_t header_read_bound(std::uint64_t record_count);

    friend bool operator==(const MonotoneIndex& a, const MonotoneIndex& b) {
        return a.n_ == b.n_ && a.l_ == b.l_ && a.high_ == b.high_ &&
               a.low_ == b.low_ && a.samples_ == b.samples_;
    }

private:
    /// Position of the one with the given rank in high_.
    std::uint64_t select1(std::uint64_t rank) const;
    /// High part of the key at the given rank: select1(rank) - rank.
    std::uint64_t high_at(std::uint64_t rank) const;

    std::uint64_t n_ = 0;
    std::uint8_t l_ = 0;
    BitVector high_;
    BitVector low_;
    std::vector<std::uint64_t> samples_;
};

}  // namespace hpf
