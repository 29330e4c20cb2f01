#include "hpf/extendible_directory.hpp"

#include <json.hpp>

#include "hpf/errors.hpp"

namespace hpf {

ExtendibleDirectory::ExtendibleDirectory(std::uint64_t capacity) : capacity_(capacity) {
    if (capacity < 1) {
        throw_error(ErrorCode::invalid_config, "bucket capacity must be at least 1");
    }
    Bucket b;
    b.id = 0;
    b.loaded = true;
    buckets_.emplace(0, std::move(b));
    slots_.push_back(0);
}

std::uint64_t ExtendibleDirectory::record_count() const noexcept {
    std::uint64_t n = 0;
    for (const auto& [id, b] : buckets_) n += b.record_count;
    return n;
}

std::uint32_t ExtendibleDirectory::locate_bucket(FileKey key) const {
    return slots_[bucket_slot(key, global_depth_)];
}

const Bucket& ExtendibleDirectory::bucket(std::uint32_t id) const {
    auto it = buckets_.find(id);
    if (it == buckets_.end()) {
        throw_error(ErrorCode::not_found, "no bucket with id " + std::to_string(id));
    }
    return it->second;
}

Bucket& ExtendibleDirectory::bucket_mut(std::uint32_t id) {
    return const_cast<Bucket&>(bucket(id));
}

std::uint64_t ExtendibleDirectory::bucket_suffix(std::uint32_t id) const {
    const Bucket& b = bucket(id);
    for (std::uint64_t s = 0; s < slots_.size(); ++s) {
        if (slots_[s] == id) return s & low_bits_mask(b.local_depth);
    }
    throw_error(ErrorCode::not_found, "bucket " + std::to_string(id) + " has no slot");
}

void ExtendibleDirectory::load_bucket(std::uint32_t id,
                                      std::map<std::uint64_t, MetadataRecord> records) {
    Bucket& b = bucket_mut(id);
    if (records.size() != b.record_count) {
        throw_error(ErrorCode::integrity,
                    "bucket " + std::to_string(id) + " expected " +
                        std::to_string(b.record_count) + " records, loaded " +
                        std::to_string(records.size()));
    }
    b.records = std::move(records);
    b.loaded = true;
}

std::set<std::uint32_t> ExtendibleDirectory::insert(const MetadataRecord& record) {
    std::set<std::uint32_t> changed;
    std::uint32_t target = locate_bucket(record.key);
    {
        const Bucket& b = bucket(target);
        if (!b.loaded) {
            throw_error(ErrorCode::integrity,
                        "insert into non-resident bucket " + std::to_string(target));
        }
        if (b.records.contains(record.key.value)) {
            throw_error(ErrorCode::duplicate_key,
                        "key " + std::to_string(record.key.value) + " already present in bucket " +
                            std::to_string(target));
        }
    }

    // Split until the target bucket has room. Each split moves the keys with
    // the next suffix bit set, so this terminates at depth 64 at the latest
    // (where every bucket holds at most one distinct key suffix).
    while (bucket(target).records.size() >= capacity_) {
        std::uint32_t splitting = target;
        std::uint32_t fresh = split_bucket(splitting);
        changed.insert(fresh);
        if (!bucket(fresh).records.empty()) changed.insert(splitting);
        target = locate_bucket(record.key);
    }

    Bucket& b = bucket_mut(target);
    b.records.emplace(record.key.value, record);
    b.record_count = b.records.size();
    changed.insert(target);
    return changed;
}

std::uint32_t ExtendibleDirectory::split_bucket(std::uint32_t bucket_id) {
    Bucket& old_bucket = bucket_mut(bucket_id);
    if (!old_bucket.loaded) {
        throw_error(ErrorCode::integrity,
                    "split of non-resident bucket " + std::to_string(bucket_id));
    }
    if (old_bucket.records.size() < capacity_) {
        throw_error(ErrorCode::invalid_split,
                    "bucket " + std::to_string(bucket_id) + " is not full");
    }
    unsigned depth = old_bucket.local_depth;
    if (depth >= 64) {
        throw_error(ErrorCode::invalid_depth, "cannot split beyond suffix depth 64");
    }

    if (depth == global_depth_) {
        // Double the slot table; slot s at depth g+1 inherits slot
        // (s mod 2^g).
        std::vector<std::uint32_t> doubled(slots_.size() * 2);
        for (std::size_t s = 0; s < doubled.size(); ++s) {
            doubled[s] = slots_[s & (slots_.size() - 1)];
        }
        slots_ = std::move(doubled);
        ++global_depth_;
    }

    std::uint32_t new_id = next_bucket_id_++;
    Bucket fresh;
    fresh.id = new_id;
    fresh.local_depth = depth + 1;
    fresh.loaded = true;

    // Keys whose bit `depth` is set move to the new sibling.
    for (auto it = old_bucket.records.begin(); it != old_bucket.records.end();) {
        if ((it->first >> depth) & 1) {
            fresh.records.emplace(it->first, it->second);
            it = old_bucket.records.erase(it);
        } else {
            ++it;
        }
    }
    old_bucket.local_depth = depth + 1;
    old_bucket.record_count = old_bucket.records.size();
    fresh.record_count = fresh.records.size();

    for (std::uint64_t s = 0; s < slots_.size(); ++s) {
        if (slots_[s] == bucket_id && ((s >> depth) & 1)) {
            slots_[s] = new_id;
        }
    }
    buckets_.emplace(new_id, std::move(fresh));
    return new_id;
}

std::vector<std::uint32_t> ExtendibleDirectory::bucket_ids() const {
    std::vector<std::uint32_t> ids;
    ids.reserve(buckets_.size());
    for (const auto& [id, b] : buckets_) ids.push_back(id);
    return ids;
}

std::vector<std::uint8_t> ExtendibleDirectory::serialize_shape() const {
    nlohmann::json j;
    j["global_depth"] = global_depth_;
    j["slots"] = slots_;
    nlohmann::json buckets = nlohmann::json::array();
    for (const auto& [id, b] : buckets_) {
        buckets.push_back({{"id", id},
                           {"local_depth", b.local_depth},
                           {"record_count", b.record_count}});
    }
    j["buckets"] = buckets;
    std::string s = j.dump();
    return std::vector<std::uint8_t>(s.begin(), s.end());
}

ExtendibleDirectory ExtendibleDirectory::deserialize_shape(std::span<const std::uint8_t> bytes,
                                                           std::uint64_t capacity) {
    nlohmann::json j = nlohmann::json::parse(bytes.begin(), bytes.end(), nullptr,
                                             /*allow_exceptions=*/false);
    if (j.is_discarded()) {
        throw FormatError("directory shape is not valid JSON", 0);
    }
    ExtendibleDirectory dir(capacity);
    try {
        unsigned g = j.at("global_depth").get<unsigned>();
        if (g > 64) throw FormatError("global depth exceeds 64", 0);
        auto slots = j.at("slots").get<std::vector<std::uint32_t>>();
        if (slots.size() != (std::uint64_t(1) << g)) {
            throw FormatError("slot table size does not match global depth", 0);
        }
        dir.global_depth_ = g;
        dir.slots_ = std::move(slots);
        dir.buckets_.clear();
        dir.next_bucket_id_ = 0;
        for (const auto& jb : j.at("buckets")) {
            Bucket b;
            b.id = jb.at("id").get<std::uint32_t>();
            b.local_depth = jb.at("local_depth").get<unsigned>();
            b.record_count = jb.at("record_count").get<std::uint64_t>();
            b.loaded = false;
            if (b.local_depth > g) {
                throw FormatError("bucket local depth exceeds global depth", 0);
            }
            if (!dir.buckets_.emplace(b.id, b).second) {
                throw FormatError("duplicate bucket id in directory shape", 0);
            }
            dir.next_bucket_id_ = std::max(dir.next_bucket_id_, b.id + 1);
        }
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("directory shape: ") + e.what(), 0);
    }

    // Every bucket of local depth l must be referenced by exactly
    // 2^(g - l) slots, all sharing the bucket's suffix.
    std::map<std::uint32_t, std::uint64_t> refs;
    for (std::uint64_t s = 0; s < dir.slots_.size(); ++s) {
        std::uint32_t id = dir.slots_[s];
        auto it = dir.buckets_.find(id);
        if (it == dir.buckets_.end()) {
            throw FormatError("slot refers to unknown bucket " + std::to_string(id), 0);
        }
        std::uint64_t suffix = s & low_bits_mask(it->second.local_depth);
        auto [ref_it, inserted] = refs.emplace(id, s);
        if (!inserted &&
            (ref_it->second & low_bits_mask(it->second.local_depth)) != suffix) {
            throw FormatError("bucket " + std::to_string(id) + " referenced by mixed suffixes",
                              0);
        }
    }
    std::map<std::uint32_t, std::uint64_t> ref_counts;
    for (std::uint32_t id : dir.slots_) ref_counts[id] += 1;
    for (const auto& [id, b] : dir.buckets_) {
        std::uint64_t expected = std::uint64_t(1) << (dir.global_depth_ - b.local_depth);
        auto it = ref_counts.find(id);
        if (it == ref_counts.end() || it->second != expected) {
            throw FormatError("bucket " + std::to_string(id) + " has wrong slot reference count",
                              0);
        }
    }
    return dir;
}

}  // namespace hpf
