#include "hpf/lz4_block.hpp"

#include <cstring>

#include "hpf/errors.hpp"

namespace hpf::lz4 {

namespace {

constexpr std::size_t kMinMatch = 4;
// A match may not start within the last 12 bytes of the block, and the last
// 5 bytes are always literals.
constexpr std::size_t kMfLimit = 12;
constexpr std::size_t kLastLiterals = 5;
constexpr std::size_t kMaxOffset = 65535;
constexpr unsigned kHashBits = 14;

std::uint32_t read32(const std::uint8_t* p) {
    std::uint32_t v;
    std::memcpy(&v, p, 4);
    return v;
}

std::uint32_t hash4(std::uint32_t v) {
    return (v * 2654435761u) >> (32 - kHashBits);
}

void emit_length(std::vector<std::uint8_t>& dst, std::size_t len) {
    while (len >= 255) {
        dst.push_back(255);
        len -= 255;
    }
    dst.push_back(static_cast<std::uint8_t>(len));
}

void emit_sequence(std::vector<std::uint8_t>& dst, const std::uint8_t* literals,
                   std::size_t literal_len, std::size_t offset, std::size_t match_len) {
    std::size_t lit_nibble = literal_len < 15 ? literal_len : 15;
    bool has_match = match_len > 0;
    std::size_t match_nibble = 0;
    std::size_t match_extra = 0;
    if (has_match) {
        std::size_t coded = match_len - kMinMatch;
        match_nibble = coded < 15 ? coded : 15;
        match_extra = coded >= 15 ? coded - 15 : 0;
    }
    dst.push_back(static_cast<std::uint8_t>((lit_nibble << 4) | match_nibble));
    if (lit_nibble == 15) emit_length(dst, literal_len - 15);
    dst.insert(dst.end(), literals, literals + literal_len);
    if (has_match) {
        dst.push_back(static_cast<std::uint8_t>(offset & 0xFF));
        dst.push_back(static_cast<std::uint8_t>(offset >> 8));
        if (match_nibble == 15) emit_length(dst, match_extra);
    }
}

}  // namespace

std::vector<std::uint8_t> compress_block(std::span<const std::uint8_t> src) {
    std::vector<std::uint8_t> dst;
    const std::size_t n = src.size();
    dst.reserve(compress_bound(n));

    if (n < kMfLimit + 1) {
        emit_sequence(dst, src.data(), n, 0, 0);
        return dst;
    }

    std::vector<std::int64_t> table(std::size_t(1) << kHashBits, -1);
    const std::size_t match_limit = n - kLastLiterals;
    const std::size_t search_end = n - kMfLimit;
    std::size_t anchor = 0;
    std::size_t pos = 0;

    while (pos <= search_end) {
        std::uint32_t window = read32(src.data() + pos);
        std::uint32_t h = hash4(window);
        std::int64_t candidate = table[h];
        table[h] = static_cast<std::int64_t>(pos);
        if (candidate >= 0 && pos - static_cast<std::size_t>(candidate) <= kMaxOffset &&
            read32(src.data() + candidate) == window) {
            std::size_t match_pos = static_cast<std::size_t>(candidate);
            std::size_t len = kMinMatch;
            while (pos + len < match_limit && src[match_pos + len] == src[pos + len]) {
                ++len;
            }
            emit_sequence(dst, src.data() + anchor, pos - anchor, pos - match_pos, len);
            pos += len;
            anchor = pos;
        } else {
            ++pos;
        }
    }

    emit_sequence(dst, src.data() + anchor, n - anchor, 0, 0);
    return dst;
}

std::vector<std::uint8_t> decompress_block(std::span<const std::uint8_t> src,
                                           std::uint64_t original_size) {
    std::vector<std::uint8_t> out;
    out.reserve(original_size);
    std::size_t pos = 0;
    const std::size_t n = src.size();

    if (n == 0) {
        if (original_size != 0) {
            throw_error(ErrorCode::codec, "empty block for nonzero original size");
        }
        return out;
    }

    auto read_extended_length = [&](std::size_t base) {
        std::size_t len = base;
        if (base == 15) {
            std::uint8_t byte;
            do {
                if (pos >= n) throw_error(ErrorCode::codec, "truncated length extension");
                byte = src[pos++];
                len += byte;
            } while (byte == 255);
        }
        return len;
    };

    for (;;) {
        if (pos >= n) throw_error(ErrorCode::codec, "block ends without a final sequence");
        std::uint8_t token = src[pos++];
        std::size_t literal_len = read_extended_length(token >> 4);
        if (pos + literal_len > n) {
            throw_error(ErrorCode::codec, "literal run past end of block");
        }
        out.insert(out.end(), src.begin() + pos, src.begin() + pos + literal_len);
        pos += literal_len;
        if (pos == n) break;  // last sequence carries no match

        if (pos + 2 > n) throw_error(ErrorCode::codec, "truncated match offset");
        std::size_t offset = src[pos] | (std::size_t(src[pos + 1]) << 8);
        pos += 2;
        if (offset == 0) throw_error(ErrorCode::codec, "zero match offset");
        if (offset > out.size()) {
            throw_error(ErrorCode::codec, "match offset reaches before block start");
        }
        std::size_t match_len = read_extended_length(token & 0x0F) + kMinMatch;
        if (out.size() + match_len > original_size) {
            throw_error(ErrorCode::codec, "decompressed data exceeds declared size");
        }
        // Byte-at-a-time copy: offsets smaller than the match length repeat
        // the overlapped region, which is the format's intent.
        std::size_t from = out.size() - offset;
        for (std::size_t i = 0; i < match_len; ++i) {
            out.push_back(out[from + i]);
        }
    }

    if (out.size() != original_size) {
        throw_error(ErrorCode::codec, "decompressed size " + std::to_string(out.size()) +
                                          " does not match declared " +
                                          std::to_string(original_size));
    }
    return out;
}

}  // namespace hpf::lz4
