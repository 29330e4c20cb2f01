#include "hpf/codec.hpp"

#include <string>

#include "hpf/errors.hpp"
#include "hpf/lz4_block.hpp"

namespace hpf {

std::string_view codec_name(CodecId id) {
    switch (id) {
        case CodecId::identity: return "identity";
        case CodecId::lz4: return "lz4";
    }
    return "unknown";
}

CodecId codec_from_name(std::string_view name) {
    if (name == "identity") return CodecId::identity;
    if (name == "lz4") return CodecId::lz4;
    throw_error(ErrorCode::invalid_config, "unknown codec '" + std::string(name) + "'");
}

CodecId codec_from_id(std::uint8_t id) {
    if (id == 0) return CodecId::identity;
    if (id == 1) return CodecId::lz4;
    throw_error(ErrorCode::invalid_config, "unknown codec id " + std::to_string(id));
}

std::vector<std::uint8_t> codec_compress(CodecId id, std::span<const std::uint8_t> content) {
    switch (id) {
        case CodecId::identity:
            return std::vector<std::uint8_t>(content.begin(), content.end());
        case CodecId::lz4:
            return lz4::compress_block(content);
    }
    throw_error(ErrorCode::invalid_config, "unknown codec");
}

std::vector<std::uint8_t> codec_decompress(CodecId id, std::span<const std::uint8_t> payload,
                                           std::uint64_t original_size) {
    switch (id) {
        case CodecId::identity:
            if (payload.size() != original_size) {
                throw_error(ErrorCode::integrity,
                            "identity payload length " + std::to_string(payload.size()) +
                                " does not match declared size " + std::to_string(original_size));
            }
            return std::vector<std::uint8_t>(payload.begin(), payload.end());
        case CodecId::lz4:
            return lz4::decompress_block(payload, original_size);
    }
    throw_error(ErrorCode::invalid_config, "unknown codec");
}

}  // namespace hpf
