#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace hpf {

/// Append-only bit vector backed by 64-bit words. Bit i lives at bit (i % 64)
/// of word (i / 64); the serialized byte view is the same stream taken 8 bits
/// at a time, LSB first.
class BitVector {
public:
    BitVector() = default;

    void push_back(bool bit) {
        if (size_ % 64 == 0) words_.push_back(0);
        if (bit) words_.back() |= 1ULL << (size_ % 64);
        ++size_;
    }

    void append_zeros(std::uint64_t count) {
        for (std::uint64_t i = 0; i < count; ++i) push_back(false);
    }

    /// Append the low `count` bits of `value`, LSB first. count <= 64.
    void append_bits(std::uint64_t value, unsigned count) {
        for (unsigned j = 0; j < count; ++j) push_back((value >> j) & 1);
    }

    /// Read `count` bits starting at `pos`, LSB first. count <= 64.
    std::uint64_t get_bits(std::uint64_t pos, unsigned count) const {
        std::uint64_t out = 0;
        for (unsigned j = 0; j < count; ++j) {
            if ((*this)[pos + j]) out |= 1ULL << j;
        }
        return out;
    }

    bool operator[](std::uint64_t i) const {
        return (words_[i / 64] >> (i % 64)) & 1;
    }

    std::uint64_t size() const noexcept { return size_; }
    std::uint64_t byte_size() const noexcept { return (size_ + 7) / 8; }

    std::vector<std::uint8_t> to_bytes() const {
        std::vector<std::uint8_t> out(byte_size());
        for (std::size_t j = 0; j < out.size(); ++j) {
            out[j] = static_cast<std::uint8_t>(words_[j / 8] >> (8 * (j % 8)));
        }
        return out;
    }

    static BitVector from_bytes(const std::uint8_t* bytes, std::uint64_t n_bits) {
        BitVector bv;
        bv.size_ = n_bits;
        bv.words_.assign((n_bits + 63) / 64, 0);
        std::uint64_t n_bytes = (n_bits + 7) / 8;
        for (std::uint64_t j = 0; j < n_bytes; ++j) {
            bv.words_[j / 8] |= std::uint64_t(bytes[j]) << (8 * (j % 8));
        }
        // Clear any garbage above the last valid bit.
        if (n_bits % 64 != 0 && !bv.words_.empty()) {
            bv.words_.back() &= (1ULL << (n_bits % 64)) - 1;
        }
        return bv;
    }

    /// Position of the rank-th set bit (rank counts from 0), scanning from
    /// the given start position. Caller guarantees the bit exists.
    std::uint64_t select1_from(std::uint64_t start_pos, std::uint64_t rank_after_start) const {
        std::uint64_t word_idx = start_pos / 64;
        std::uint64_t word = words_[word_idx] & ~((start_pos % 64) ? ((1ULL << (start_pos % 64)) - 1) : 0);
        std::uint64_t remaining = rank_after_start;
        for (;;) {
            unsigned ones = static_cast<unsigned>(std::popcount(word));
            if (remaining < ones) {
                // The target bit is inside this word.
                std::uint64_t w = word;
                for (std::uint64_t k = 0; k < remaining; ++k) w &= w - 1;
                return word_idx * 64 + static_cast<std::uint64_t>(std::countr_zero(w));
            }
            remaining -= ones;
            ++word_idx;
            word = words_[word_idx];
        }
    }

    std::uint64_t popcount() const noexcept {
        std::uint64_t ones = 0;
        for (std::uint64_t w : words_) ones += static_cast<unsigned>(std::popcount(w));
        return ones;
    }

    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    std::vector<std::uint64_t> words_;
    std::uint64_t size_ = 0;
};

}  // namespace hpf
