#include "hpf/metadata.hpp"

#include "hpf/endian.hpp"
#include "hpf/errors.hpp"

namespace hpf {

void MetadataRecord::encode(std::uint8_t* out) const {
    store_u64be(key.value, out);
    store_u32be(part_position, out + 8);
    store_u64be(offset, out + 12);
    store_u32be(stored_size, out + 20);
}

MetadataRecord MetadataRecord::decode(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kEncodedSize) {
        throw FormatError("metadata record needs 24 bytes, got " + std::to_string(bytes.size()),
                          0);
    }
    MetadataRecord r;
    r.key.value = load_u64be(bytes.data());
    r.part_position = load_u32be(bytes.data() + 8);
    r.offset = load_u64be(bytes.data() + 12);
    r.stored_size = load_u32be(bytes.data() + 20);
    return r;
}

std::vector<MetadataRecord> decode_record_stream(std::span<const std::uint8_t> bytes,
                                                 std::uint64_t* tail_bytes) {
    std::uint64_t whole = bytes.size() / MetadataRecord::kEncodedSize;
    std::vector<MetadataRecord> out;
    out.reserve(whole);
    for (std::uint64_t i = 0; i < whole; ++i) {
        out.push_back(MetadataRecord::decode(bytes.subspan(i * MetadataRecord::kEncodedSize,
                                                           MetadataRecord::kEncodedSize)));
    }
    if (tail_bytes != nullptr) {
        *tail_bytes = bytes.size() % MetadataRecord::kEncodedSize;
    }
    return out;
}

std::vector<std::uint8_t> encode_records(std::span<const MetadataRecord> records) {
    std::vector<std::uint8_t> out(records.size() * MetadataRecord::kEncodedSize);
    for (std::size_t i = 0; i < records.size(); ++i) {
        records[i].encode(out.data() + i * MetadataRecord::kEncodedSize);
    }
    return out;
}

std::vector<std::uint8_t> ContentFrame::encode() const {
    std::vector<std::uint8_t> out(kHeaderSize + payload.size());
    store_u32be(original_size, out.data());
    std::copy(payload.begin(), payload.end(), out.begin() + kHeaderSize);
    return out;
}

ContentFrame ContentFrame::decode(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kHeaderSize) {
        throw FormatError("content frame shorter than its header", 0);
    }
    ContentFrame f;
    f.original_size = load_u32be(bytes.data());
    f.payload.assign(bytes.begin() + kHeaderSize, bytes.end());
    return f;
}

std::vector<std::uint8_t> encode_name(std::string_view name) {
    std::vector<std::uint8_t> out(4 + name.size());
    store_u32be(static_cast<std::uint32_t>(name.size()), out.data());
    std::copy(name.begin(), name.end(), out.begin() + 4);
    return out;
}

namespace {

std::vector<std::string> decode_names_impl(std::span<const std::uint8_t> bytes, bool strict) {
    std::vector<std::string> names;
    std::uint64_t pos = 0;
    while (pos < bytes.size()) {
        if (bytes.size() - pos < 4) {
            if (strict) throw FormatError("torn name length prefix", pos);
            break;
        }
        std::uint32_t len = load_u32be(bytes.data() + pos);
        if (bytes.size() - pos - 4 < len) {
            if (strict) throw FormatError("name entry truncated", pos);
            break;
        }
        names.emplace_back(reinterpret_cast<const char*>(bytes.data() + pos + 4), len);
        pos += 4 + len;
    }
    return names;
}

}  // namespace

std::vector<std::string> decode_names(std::span<const std::uint8_t> bytes) {
    return decode_names_impl(bytes, true);
}

std::vector<std::string> decode_names_prefix(std::span<const std::uint8_t> bytes) {
    return decode_names_impl(bytes, false);
}

}  // namespace hpf
