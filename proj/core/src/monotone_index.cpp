#include "hpf/monotone_index.hpp"

#include <bit>
#include <cstring>
#include <string>

#include "hpf/endian.hpp"
#include "hpf/errors.hpp"
#include "hpf/hashing.hpp"

namespace hpf {

namespace {

std::uint64_t shr(std::uint64_t v, unsigned s) { return s >= 64 ? 0 : v >> s; }
std::uint64_t shl(std::uint64_t v, unsigned s) { return s >= 64 ? 0 : v << s; }

// floor(log2(max(1, (max_key + 1) / n))); the +1 can overflow 64 bits, so
// the quotient is taken in 128-bit arithmetic.
std::uint8_t choose_low_bit_width(std::uint64_t max_key, std::uint64_t n) {
    unsigned __int128 universe = static_cast<unsigned __int128>(max_key) + 1;
    unsigned __int128 q = universe / n;
    if (q == 0) q = 1;
    if ((q >> 64) != 0) return 64;
    std::uint64_t q64 = static_cast<std::uint64_t>(q);
    return static_cast<std::uint8_t>(std::bit_width(q64) - 1);
}

constexpr std::uint64_t kFixedHeaderBytes = 4 + 2 + 8 + 1 + 8;  // magic..high_len
constexpr std::uint64_t kSampleCountBytes = 4;

std::uint64_t sample_count_for(std::uint64_t n) {
    return (n + MonotoneIndex::kSelectSampleInterval - 1) / MonotoneIndex::kSelectSampleInterval;
}

}  // namespace

MonotoneIndex MonotoneIndex::build(std::span<const std::uint64_t> sorted_keys) {
    MonotoneIndex idx;
    idx.n_ = sorted_keys.size();
    if (idx.n_ == 0) return idx;

    for (std::size_t i = 1; i < sorted_keys.size(); ++i) {
        if (sorted_keys[i] == sorted_keys[i - 1]) {
            throw_error(ErrorCode::duplicate_key,
                        "key " + std::to_string(sorted_keys[i]) + " appears twice at ranks " +
                            std::to_string(i - 1) + " and " + std::to_string(i));
        }
        if (sorted_keys[i] < sorted_keys[i - 1]) {
            throw_error(ErrorCode::not_sorted,
                        "keys not strictly increasing at rank " + std::to_string(i));
        }
    }

    idx.l_ = choose_low_bit_width(sorted_keys.back(), idx.n_);
    for (std::size_t i = 0; i < sorted_keys.size(); ++i) {
        std::uint64_t high = shr(sorted_keys[i], idx.l_);
        std::uint64_t target = high + i;
        idx.high_.append_zeros(target - idx.high_.size());
        if (i % kSelectSampleInterval == 0) idx.samples_.push_back(idx.high_.size());
        idx.high_.push_back(true);
        idx.low_.append_bits(sorted_keys[i] & low_bits_mask(idx.l_), idx.l_);
    }
    return idx;
}

std::uint64_t MonotoneIndex::select1(std::uint64_t rank) const {
    std::uint64_t sample = samples_[rank / kSelectSampleInterval];
    return high_.select1_from(sample, rank % kSelectSampleInterval);
}

std::uint64_t MonotoneIndex::high_at(std::uint64_t rank) const {
    return select1(rank) - rank;
}

std::uint64_t MonotoneIndex::key_at(std::uint64_t rank) const {
    return shl(high_at(rank), l_) | low_.get_bits(rank * l_, l_);
}

std::optional<std::uint64_t> MonotoneIndex::rank(std::uint64_t key) const {
    if (n_ == 0) return std::nullopt;
    std::uint64_t h = shr(key, l_);
    std::uint64_t lo = key & low_bits_mask(l_);

    // First rank whose high part is >= h.
    std::uint64_t begin = 0, end = n_;
    while (begin < end) {
        std::uint64_t mid = begin + (end - begin) / 2;
        if (high_at(mid) < h) {
            begin = mid + 1;
        } else {
            end = mid;
        }
    }
    if (begin == n_ || high_at(begin) != h) return std::nullopt;

    // First rank whose high part is > h; low parts are strictly increasing
    // in between, so the final step is a plain binary search on them.
    std::uint64_t group_end;
    {
        std::uint64_t b = begin, e = n_;
        while (b < e) {
            std::uint64_t mid = b + (e - b) / 2;
            if (high_at(mid) <= h) {
                b = mid + 1;
            } else {
                e = mid;
            }
        }
        group_end = b;
    }

    std::uint64_t b = begin, e = group_end;
    while (b < e) {
        std::uint64_t mid = b + (e - b) / 2;
        std::uint64_t mid_low = low_.get_bits(mid * l_, l_);
        if (mid_low < lo) {
            b = mid + 1;
        } else {
            e = mid;
        }
    }
    if (b < group_end && low_.get_bits(b * l_, l_) == lo) return b;
    return std::nullopt;
}

double MonotoneIndex::bits_per_key() const noexcept {
    if (n_ == 0) return 0.0;
    double encoding_bits = static_cast<double>(high_.size()) +
                           static_cast<double>(n_) * l_ +
                           64.0 * static_cast<double>(samples_.size());
    return encoding_bits / static_cast<double>(n_);
}

std::uint64_t MonotoneIndex::serialized_size() const noexcept {
    return kFixedHeaderBytes + high_.byte_size() + low_.byte_size() + kSampleCountBytes +
           8 * samples_.size();
}

std::vector<std::uint8_t> MonotoneIndex::serialize() const {
    ByteWriter w;
    w.raw(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(kMagic), 4));
    w.u16be(kFormatVersion);
    w.u64be(n_);
    w.u8(l_);
    w.u64be(high_.size());
    auto high_bytes = high_.to_bytes();
    w.raw(high_bytes);
    auto low_bytes = low_.to_bytes();
    w.raw(low_bytes);
    w.u32be(static_cast<std::uint32_t>(samples_.size()));
    for (std::uint64_t s : samples_) w.u64be(s);
    return w.take();
}

MonotoneIndex MonotoneIndex::deserialize_prefix(std::span<const std::uint8_t> bytes,
                                                std::uint64_t* consumed) {
    ByteReader r(bytes);
    auto magic = r.take(4);
    if (std::memcmp(magic.data(), kMagic, 4) != 0) {
        throw FormatError("bad monotone index magic", 0);
    }
    std::uint16_t version = r.u16be();
    if (version != kFormatVersion) {
        throw FormatError("unsupported monotone index version " + std::to_string(version), 4);
    }
    MonotoneIndex idx;
    idx.n_ = r.u64be();
    idx.l_ = r.u8();
    if (idx.l_ > 64) {
        throw FormatError("low bit width " + std::to_string(idx.l_) + " exceeds 64", 14);
    }
    std::uint64_t high_len = r.u64be();
    std::uint64_t high_bytes = (high_len + 7) / 8;
    idx.high_ = BitVector::from_bytes(r.take(high_bytes).data(), high_len);
    std::uint64_t low_len = idx.n_ * idx.l_;
    std::uint64_t low_bytes = (low_len + 7) / 8;
    idx.low_ = BitVector::from_bytes(r.take(low_bytes).data(), low_len);
    std::uint64_t sample_offset = r.offset();
    std::uint32_t sample_count = r.u32be();
    if (sample_count != sample_count_for(idx.n_)) {
        throw FormatError("sample count " + std::to_string(sample_count) +
                              " does not match key count " + std::to_string(idx.n_),
                          sample_offset);
    }
    idx.samples_.reserve(sample_count);
    for (std::uint32_t i = 0; i < sample_count; ++i) {
        std::uint64_t s = r.u64be();
        if (s >= high_len || (!idx.samples_.empty() && s <= idx.samples_.back())) {
            throw FormatError("select sample " + std::to_string(i) + " out of order or range",
                              sample_offset);
        }
        idx.samples_.push_back(s);
    }

    // The high bit vector must carry exactly one set bit per key.
    std::uint64_t ones = idx.high_.popcount();
    if (ones != idx.n_) {
        throw FormatError("high bits carry " + std::to_string(ones) + " ones for " +
                              std::to_string(idx.n_) + " keys",
                          kFixedHeaderBytes);
    }

    if (consumed != nullptr) *consumed = r.offset();
    return idx;
}

MonotoneIndex MonotoneIndex::deserialize(std::span<const std::uint8_t> bytes) {
    std::uint64_t consumed = 0;
    MonotoneIndex idx = deserialize_prefix(bytes, &consumed);
    if (consumed != bytes.size()) {
        throw FormatError("trailing bytes after monotone index", consumed);
    }
    return idx;
}

std::uint64_t MonotoneIndex::header_read_bound(std::uint64_t record_count) {
    // For an index built here, the high part of the last key is < 2n, so the
    // high vector is < 3n bits; low parts are at most 64 bits each.
    std::uint64_t n = record_count;
    return kFixedHeaderBytes + (3 * n + 7) / 8 + 8 * n + kSampleCountBytes +
           8 * sample_count_for(n) + 16;
}

}  // namespace hpf
