#pragma once

// Name-to-key hashing and key-to-slot routing. The 64-bit key is a file's
// only identity inside a container, so both functions are pinned bit-exactly:
// FNV-1a over the name's UTF-8 bytes, slots from the key's low bits.

#include <cstdint>
#include <string_view>

#include "hpf/errors.hpp"

namespace hpf {

/// 64-bit key derived from a file name. Identical name yields an identical
/// key on every platform and run.
struct FileKey {
    std::uint64_t value = 0;

    friend constexpr auto operator<=>(const FileKey&, const FileKey&) = default;
};

inline constexpr std::uint64_t kFnvOffsetBasis = 14695981039346656037ULL;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

constexpr FileKey name_hash(std::string_view name) noexcept {
    std::uint64_t h = kFnvOffsetBasis;
    for (unsigned char byte : name) {
        h ^= byte;
        h *= kFnvPrime;
    }
    return FileKey{h};
}

constexpr std::uint64_t low_bits_mask(unsigned bits) noexcept {
    return bits >= 64 ? ~0ULL : (1ULL << bits) - 1;
}

/// Slot index in [0, 2^global_depth): the key's low global_depth bits.
inline std::uint64_t bucket_slot(FileKey key, unsigned global_depth) {
    if (global_depth > 64) {
        throw_error(ErrorCode::invalid_depth,
                    "global depth " + std::to_string(global_depth) + " exceeds 64");
    }
    return key.value & low_bits_mask(global_depth);
}

}  // namespace hpf
