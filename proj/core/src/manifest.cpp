#include "hpf/manifest.hpp"

#include <json.hpp>

#include "hpf/errors.hpp"

namespace hpf {

std::vector<std::uint8_t> ArchiveManifest::to_bytes() const {
    nlohmann::json j;
    j["format_version"] = format_version;
    j["codec"] = static_cast<std::uint8_t>(codec);
    j["bucket_capacity"] = bucket_capacity;
    j["max_part_size"] = max_part_size;
    j["workers"] = workers;
    nlohmann::json parts_json = nlohmann::json::array();
    for (const PartInfo& p : parts) {
        parts_json.push_back({{"id", p.id}, {"length", p.length}});
    }
    j["parts"] = parts_json;
    j["directory"] = nlohmann::json::parse(directory_shape.begin(), directory_shape.end());
    j["file_count"] = file_count;
    std::string s = j.dump();
    return std::vector<std::uint8_t>(s.begin(), s.end());
}

ArchiveManifest ArchiveManifest::from_bytes(std::span<const std::uint8_t> bytes) {
    nlohmann::json j = nlohmann::json::parse(bytes.begin(), bytes.end(), nullptr,
                                             /*allow_exceptions=*/false);
    if (j.is_discarded()) {
        throw FormatError("manifest is not valid JSON", 0);
    }
    ArchiveManifest m;
    try {
        m.format_version = j.at("format_version").get<std::uint32_t>();
        if (m.format_version != kFormatVersion) {
            throw FormatError(
                "unsupported manifest format version " + std::to_string(m.format_version), 0);
        }
        m.codec = codec_from_id(j.at("codec").get<std::uint8_t>());
        m.bucket_capacity = j.at("bucket_capacity").get<std::uint64_t>();
        m.max_part_size = j.at("max_part_size").get<std::uint64_t>();
        m.workers = j.at("workers").get<std::uint32_t>();
        for (const auto& jp : j.at("parts")) {
            m.parts.push_back(
                {jp.at("id").get<std::uint32_t>(), jp.at("length").get<std::uint64_t>()});
        }
        std::string dir = j.at("directory").dump();
        m.directory_shape.assign(dir.begin(), dir.end());
        m.file_count = j.at("file_count").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("manifest: ") + e.what(), 0);
    }
    return m;
}

}  // namespace hpf
