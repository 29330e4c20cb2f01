#include "hpf/archive.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "hpf/errors.hpp"

namespace hpf {

namespace {

std::string join_path(const std::string& archive, std::string_view object) {
    return archive + "/" + std::string(object);
}

/// Serialized index file: [MonotoneIndex header, Υ bytes][records, 24n bytes].
std::vector<std::uint8_t> index_file_bytes(const Bucket& bucket) {
    std::vector<std::uint64_t> keys;
    keys.reserve(bucket.records.size());
    for (const auto& [key, rec] : bucket.records) keys.push_back(key);
    MonotoneIndex index = MonotoneIndex::build(keys);
    std::vector<std::uint8_t> out = index.serialize();
    out.resize(out.size() + bucket.records.size() * MetadataRecord::kEncodedSize);
    std::uint8_t* cursor = out.data() + index.serialized_size();
    for (const auto& [key, rec] : bucket.records) {
        rec.encode(cursor);
        cursor += MetadataRecord::kEncodedSize;
    }
    return out;
}

std::optional<std::uint32_t> parse_numbered_object(const std::string& path,
                                                   const std::string& prefix) {
    if (!path.starts_with(prefix)) return std::nullopt;
    std::string rest = path.substr(prefix.size());
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos) {
        return std::nullopt;
    }
    return static_cast<std::uint32_t>(std::stoul(rest));
}

void check_distinct(std::span<const InputFile> files) {
    std::map<std::string_view, std::size_t> by_name;
    std::map<std::uint64_t, std::string_view> by_key;
    for (const InputFile& f : files) {
        if (!by_name.emplace(f.name, 0).second) {
            throw_error(ErrorCode::duplicate_key, "name '" + f.name + "' given twice");
        }
        auto [it, inserted] = by_key.emplace(name_hash(f.name).value, f.name);
        if (!inserted) {
            throw_error(ErrorCode::duplicate_key,
                        "names '" + std::string(it->second) + "' and '" + f.name +
                            "' hash to the same key " + std::to_string(it->first));
        }
    }
}

}  // namespace

Archive::Archive(std::shared_ptr<StorageBackend> backend, std::string path,
                 ArchiveManifest manifest, ExtendibleDirectory directory)
    : backend_(std::move(backend)),
      path_(std::move(path)),
      manifest_(std::move(manifest)),
      directory_(std::move(directory)) {}

std::string Archive::object_path(std::string_view object_name) const {
    return join_path(path_, object_name);
}

std::vector<PartInfo> Archive::scan_part_roster() const {
    std::vector<PartInfo> parts;
    for (const std::string& obj : backend_->list(path_ + "/part-")) {
        auto id = parse_numbered_object(obj, path_ + "/part-");
        if (!id) continue;
        parts.push_back({*id, backend_->length(obj)});
    }
    std::sort(parts.begin(), parts.end(),
              [](const PartInfo& a, const PartInfo& b) { return a.id < b.id; });
    return parts;
}

Archive Archive::create(std::shared_ptr<StorageBackend> backend, std::string archive_path,
                        std::span<const InputFile> files, ArchiveConfig config) {
    if (config.workers < 1) {
        throw_error(ErrorCode::invalid_config, "worker count must be at least 1");
    }
    std::uint64_t block_cap = max_records_for_block(config.block_size);
    if (block_cap == 0) {
        throw_error(ErrorCode::invalid_config, "block size holds no whole metadata record");
    }
    std::uint64_t capacity = std::min(config.bucket_capacity, block_cap);
    if (capacity == 0) {
        throw_error(ErrorCode::invalid_config, "bucket capacity must be at least 1");
    }
    if (!backend->list(archive_path + "/").empty()) {
        throw_error(ErrorCode::conflict, "archive path not empty: " + archive_path);
    }
    check_distinct(files);

    ArchiveManifest manifest;
    manifest.codec = config.codec;
    manifest.bucket_capacity = capacity;
    manifest.max_part_size = config.max_part_size;
    manifest.workers = config.workers;

    Archive archive(std::move(backend), std::move(archive_path), std::move(manifest),
                    ExtendibleDirectory(capacity));

    // Mutation order matters for recovery: parts, roster files, then the
    // manifest (via rename, so it is either absent or complete). Everything
    // merged afterwards is reconstructible from _temporaryIndex.
    for (std::uint32_t w = 0; w < archive.manifest_.workers; ++w) {
        archive.backend_->create(archive.object_path(object_names::part(w)));
        archive.manifest_.parts.push_back({w, 0});
    }
    archive.backend_->create(archive.object_path(object_names::kNames));
    archive.backend_->create(archive.object_path(object_names::kTemporaryIndex));
    archive.manifest_.directory_shape = archive.directory_.serialize_shape();
    atomic_put(*archive.backend_, archive.object_path(object_names::kManifest),
               archive.manifest_.to_bytes());

    archive.merge_files(files);

    for (std::uint32_t id : archive.directory_.bucket_ids()) {
        archive.write_index_file(id, /*replace_existing=*/false);
    }
    archive.commit_manifest();
    archive.backend_->remove(archive.object_path(object_names::kTemporaryIndex));
    return archive;
}

std::set<std::uint32_t> Archive::merge_files(std::span<const InputFile> files) {
    const std::uint32_t worker_count = manifest_.workers;
    std::uint32_t max_part = 0;
    for (const PartInfo& p : scan_part_roster()) max_part = std::max(max_part, p.id);
    std::atomic<std::uint32_t> next_part_id{max_part + 1};

    std::mutex commit_mutex;
    std::set<std::uint32_t> changed;
    std::vector<std::exception_ptr> failures(worker_count);

    auto run_worker = [&](std::uint32_t w) {
        try {
            std::uint32_t part_id = w;
            std::string part_path = object_path(object_names::part(part_id));
            std::uint64_t part_len = backend_->length(part_path);
            const std::string tidx_path = object_path(object_names::kTemporaryIndex);
            const std::string names_path = object_path(object_names::kNames);

            for (std::size_t i = w; i < files.size(); i += worker_count) {
                std::vector<std::uint8_t> content;
                try {
                    content = files[i].source();
                } catch (const Error&) {
                    throw;
                } catch (const std::exception& e) {
                    throw_error(ErrorCode::io,
                                "content source for '" + files[i].name + "': " + e.what());
                }
                if (content.size() > UINT32_MAX - ContentFrame::kHeaderSize) {
                    throw_error(ErrorCode::invalid_config,
                                "file '" + files[i].name + "' exceeds the 4 GiB frame limit");
                }
                ContentFrame frame;
                frame.original_size = static_cast<std::uint32_t>(content.size());
                frame.payload = codec_compress(manifest_.codec, content);
                std::vector<std::uint8_t> frame_bytes = frame.encode();

                if (manifest_.max_part_size > 0 && part_len >= manifest_.max_part_size) {
                    part_id = next_part_id.fetch_add(1);
                    part_path = object_path(object_names::part(part_id));
                    backend_->create(part_path);
                    part_len = 0;
                }

                std::uint64_t new_len = backend_->append(part_path, frame_bytes);
                MetadataRecord record;
                record.key = name_hash(files[i].name);
                record.part_position = part_id;
                record.offset = new_len - frame_bytes.size();
                record.stored_size = static_cast<std::uint32_t>(frame_bytes.size());
                part_len = new_len;

                std::lock_guard lock(commit_mutex);
                std::uint8_t record_buf[MetadataRecord::kEncodedSize];
                record.encode(record_buf);
                backend_->append(tidx_path, record_buf);
                backend_->append(names_path, encode_name(files[i].name));
                ensure_bucket_records(directory_.locate_bucket(record.key));
                std::set<std::uint32_t> delta = directory_.insert(record);
                changed.insert(delta.begin(), delta.end());
            }
        } catch (...) {
            failures[w] = std::current_exception();
        }
    };

    if (worker_count == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(worker_count);
        for (std::uint32_t w = 0; w < worker_count; ++w) {
            threads.emplace_back(run_worker, w);
        }
        for (std::thread& t : threads) t.join();
    }
    for (const std::exception_ptr& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }
    return changed;
}

void Archive::write_index_file(std::uint32_t bucket_id, bool replace_existing) {
    const Bucket& bucket = directory_.bucket(bucket_id);
    std::vector<std::uint8_t> bytes = index_file_bytes(bucket);
    std::string path = object_path(object_names::index(bucket_id));
    if (replace_existing || backend_->exists(path)) {
        atomic_put(*backend_, path, bytes);
    } else {
        put_object(*backend_, path, bytes);
    }
}

void Archive::commit_manifest() {
    manifest_.parts = scan_part_roster();
    manifest_.directory_shape = directory_.serialize_shape();
    manifest_.file_count = directory_.record_count();
    atomic_put(*backend_, object_path(object_names::kManifest), manifest_.to_bytes());
}

Archive Archive::open(std::shared_ptr<StorageBackend> backend, std::string archive_path) {
    const std::string manifest_path = join_path(archive_path, object_names::kManifest);
    const std::string manifest_tmp = manifest_path + ".tmp";
    if (!backend->exists(manifest_path)) {
        // A crash between the manifest delete and rename leaves only the
        // temp copy, which is always complete; adopt it.
        if (backend->exists(manifest_tmp)) {
            ArchiveManifest::from_bytes(read_all(*backend, manifest_tmp));
            backend->rename(manifest_tmp, manifest_path);
        } else {
            throw_error(ErrorCode::not_an_archive, "no manifest under " + archive_path);
        }
    }
    ArchiveManifest manifest = ArchiveManifest::from_bytes(read_all(*backend, manifest_path));

    if (backend->exists(join_path(archive_path, object_names::kTemporaryIndex))) {
        recover(*backend, archive_path, manifest);
        manifest = ArchiveManifest::from_bytes(read_all(*backend, manifest_path));
    }

    ExtendibleDirectory directory = ExtendibleDirectory::deserialize_shape(
        manifest.directory_shape, manifest.bucket_capacity);
    return Archive(std::move(backend), std::move(archive_path), std::move(manifest),
                   std::move(directory));
}

void Archive::recover(StorageBackend& backend, const std::string& path,
                      const ArchiveManifest& manifest) {
    // Complete records in the marker win over index-file bodies: they are
    // the newest state of their keys.
    // decode_record_stream drops a torn trailing record (length mod 24 != 0).
    std::vector<std::uint8_t> marker =
        read_all(backend, join_path(path, object_names::kTemporaryIndex));
    std::vector<MetadataRecord> marker_records = decode_record_stream(marker);

    std::vector<std::string> index_objects = backend.list(path + "/index-");
    std::map<std::uint64_t, MetadataRecord> merged;
    for (const std::string& obj : index_objects) {
        std::vector<std::uint8_t> bytes;
        try {
            bytes = read_all(backend, obj);
            std::uint64_t upsilon = 0;
            MonotoneIndex::deserialize_prefix(bytes, &upsilon);
            std::span<const std::uint8_t> body(bytes.data() + upsilon, bytes.size() - upsilon);
            for (const MetadataRecord& rec : decode_record_stream(body)) {
                merged.emplace(rec.key.value, rec);
            }
        } catch (const Error&) {
            // Unreadable or torn index object. Original index files are only
            // deleted after their replacement is fully written, so every key
            // in here survives in a sibling object or in the marker.
            continue;
        }
    }
    for (const MetadataRecord& rec : marker_records) {
        merged.insert_or_assign(rec.key.value, rec);
    }

    ExtendibleDirectory directory(manifest.bucket_capacity);
    for (const auto& [key, rec] : merged) directory.insert(rec);

    for (std::uint32_t id : directory.bucket_ids()) {
        atomic_put(backend, join_path(path, object_names::index(id)),
                   index_file_bytes(directory.bucket(id)));
    }
    std::set<std::string> live;
    for (std::uint32_t id : directory.bucket_ids()) {
        live.insert(join_path(path, object_names::index(id)));
    }
    for (const std::string& obj : index_objects) {
        if (!live.contains(obj) && backend.exists(obj)) backend.remove(obj);
    }

    // _names keeps entries only for recovered records; a name whose record
    // never reached the marker is gone with its content.
    const std::string names_path = join_path(path, object_names::kNames);
    std::vector<std::string> kept;
    if (backend.exists(names_path)) {
        for (const std::string& name : decode_names_prefix(read_all(backend, names_path))) {
            if (merged.contains(name_hash(name).value)) kept.push_back(name);
        }
    }
    std::vector<std::uint8_t> names_bytes;
    for (const std::string& name : kept) {
        std::vector<std::uint8_t> entry = encode_name(name);
        names_bytes.insert(names_bytes.end(), entry.begin(), entry.end());
    }
    atomic_put(backend, names_path, names_bytes);

    ArchiveManifest updated = manifest;
    updated.parts.clear();
    for (const std::string& obj : backend.list(path + "/part-")) {
        auto id = parse_numbered_object(obj, path + "/part-");
        if (!id) continue;
        updated.parts.push_back({*id, backend.length(obj)});
    }
    std::sort(updated.parts.begin(), updated.parts.end(),
              [](const PartInfo& a, const PartInfo& b) { return a.id < b.id; });
    updated.directory_shape = directory.serialize_shape();
    updated.file_count = merged.size();
    atomic_put(backend, join_path(path, object_names::kManifest), updated.to_bytes());

    backend.remove(join_path(path, object_names::kTemporaryIndex));
}

void Archive::append(std::span<const InputFile> files) {
    const std::string tidx_path = object_path(object_names::kTemporaryIndex);
    if (backend_->exists(tidx_path)) {
        throw_error(ErrorCode::conflict,
                    "archive has a pending _temporaryIndex; reopen to recover first");
    }
    check_distinct(files);
    for (const InputFile& f : files) {
        FileKey key = name_hash(f.name);
        std::uint32_t bucket_id = directory_.locate_bucket(key);
        if (header(bucket_id)->index.rank(key.value).has_value()) {
            throw_error(ErrorCode::duplicate_key,
                        "key of '" + f.name + "' is already archived in bucket " +
                            std::to_string(bucket_id));
        }
    }

    backend_->create(tidx_path);
    std::set<std::uint32_t> changed = merge_files(files);
    for (std::uint32_t id : changed) {
        write_index_file(id, /*replace_existing=*/false);
    }
    commit_manifest();
    backend_->remove(tidx_path);

    std::lock_guard lock(headers_->mutex);
    for (std::uint32_t id : changed) headers_->loaded.erase(id);
}

std::shared_ptr<const Archive::LoadedHeader> Archive::header(std::uint32_t bucket_id) {
    {
        std::lock_guard lock(headers_->mutex);
        auto it = headers_->loaded.find(bucket_id);
        if (it != headers_->loaded.end()) return it->second;
    }
    const Bucket& bucket = directory_.bucket(bucket_id);
    std::string path = object_path(object_names::index(bucket_id));
    std::uint64_t file_len = backend_->length(path);
    std::uint64_t want = std::min(file_len, MonotoneIndex::header_read_bound(bucket.record_count));
    std::vector<std::uint8_t> bytes = backend_->read_range(path, 0, want);

    auto loaded = std::make_shared<LoadedHeader>();
    try {
        loaded->index = MonotoneIndex::deserialize_prefix(bytes, &loaded->upsilon);
    } catch (const FormatError& e) {
        throw FormatError(std::string(object_names::index(bucket_id)) + ": " + e.what(),
                          e.byte_offset());
    }
    if (loaded->index.size() != bucket.record_count) {
        throw_error(ErrorCode::integrity,
                    object_path(object_names::index(bucket_id)) + " indexes " +
                        std::to_string(loaded->index.size()) + " keys but the directory expects " +
                        std::to_string(bucket.record_count));
    }

    std::lock_guard lock(headers_->mutex);
    // A racing loader may have beaten us; both copies are identical.
    auto [it, inserted] = headers_->loaded.emplace(bucket_id, loaded);
    return it->second;
}

void Archive::ensure_bucket_records(std::uint32_t bucket_id) {
    if (directory_.bucket(bucket_id).loaded) return;
    auto hdr = header(bucket_id);
    const Bucket& bucket = directory_.bucket(bucket_id);
    std::vector<std::uint8_t> body =
        backend_->read_range(object_path(object_names::index(bucket_id)), hdr->upsilon,
                             bucket.record_count * MetadataRecord::kEncodedSize);
    std::map<std::uint64_t, MetadataRecord> records;
    for (const MetadataRecord& rec : decode_record_stream(body)) {
        records.emplace(rec.key.value, rec);
    }
    directory_.load_bucket(bucket_id, std::move(records));
}

std::optional<MetadataRecord> Archive::find_metadata(std::string_view name) {
    FileKey key = name_hash(name);
    std::uint32_t bucket_id = directory_.locate_bucket(key);
    auto hdr = header(bucket_id);
    std::optional<std::uint64_t> rank = hdr->index.rank(key.value);
    if (!rank.has_value()) return std::nullopt;

    std::vector<std::uint8_t> bytes =
        backend_->read_range(object_path(object_names::index(bucket_id)),
                             hdr->upsilon + *rank * MetadataRecord::kEncodedSize,
                             MetadataRecord::kEncodedSize);
    MetadataRecord record = MetadataRecord::decode(bytes);
    if (record.key != key) return std::nullopt;  // stored key is the final word
    return record;
}

std::optional<std::vector<std::uint8_t>> Archive::read_file(std::string_view name) {
    std::optional<MetadataRecord> record = find_metadata(name);
    if (!record.has_value()) return std::nullopt;

    std::string part_path = object_path(object_names::part(record->part_position));
    std::vector<std::uint8_t> frame_bytes =
        backend_->read_range(part_path, record->offset, record->stored_size);
    try {
        ContentFrame frame = ContentFrame::decode(frame_bytes);
        return codec_decompress(manifest_.codec, frame.payload, frame.original_size);
    } catch (const Error& e) {
        throw_error(ErrorCode::integrity,
                    object_names::part(record->part_position) + " at offset " +
                        std::to_string(record->offset) + ": " + e.what());
    }
}

std::vector<std::string> Archive::list_names() {
    return decode_names(read_all(*backend_, object_path(object_names::kNames)));
}

std::uint64_t Archive::bucket_upsilon(std::uint32_t bucket_id) {
    return header(bucket_id)->upsilon;
}

void Archive::pin_index_objects() {
    for (std::uint32_t id : directory_.bucket_ids()) {
        backend_->pin(object_path(object_names::index(id)));
    }
}

void Archive::unpin_index_objects() {
    for (std::uint32_t id : directory_.bucket_ids()) {
        backend_->unpin(object_path(object_names::index(id)));
    }
}

ArchiveStats Archive::stats() {
    ArchiveStats s;
    s.file_count = manifest_.file_count;
    s.global_depth = directory_.global_depth();
    s.bucket_capacity = manifest_.bucket_capacity;
    s.codec = manifest_.codec;
    s.workers = manifest_.workers;
    s.parts = manifest_.parts;
    for (const PartInfo& p : s.parts) s.stored_bytes += p.length;
    for (std::uint32_t id : directory_.bucket_ids()) {
        auto hdr = header(id);
        const Bucket& b = directory_.bucket(id);
        s.buckets.push_back(
            {id, b.local_depth, b.record_count, hdr->upsilon, hdr->index.bits_per_key()});
    }
    return s;
}

VerifyReport Archive::verify() {
    VerifyReport report;
    auto check = [&](const std::string& name, bool ok, const std::string& detail) {
        report.checks.push_back({name, ok, ok ? "" : detail});
    };

    // Object inventory against the manifest.
    {
        bool ok = !backend_->exists(object_path(object_names::kTemporaryIndex));
        std::string detail = "_temporaryIndex still present";
        for (const PartInfo& p : manifest_.parts) {
            std::string part_path = object_path(object_names::part(p.id));
            if (!backend_->exists(part_path)) {
                ok = false;
                detail = object_names::part(p.id) + " missing";
                break;
            }
            if (backend_->length(part_path) != p.length) {
                ok = false;
                detail = object_names::part(p.id) + " length differs from roster";
                break;
            }
        }
        for (std::uint32_t id : directory_.bucket_ids()) {
            if (!backend_->exists(object_path(object_names::index(id)))) {
                ok = false;
                detail = object_names::index(id) + " missing";
                break;
            }
        }
        check("objects", ok, detail);
    }

    std::map<std::uint32_t, std::uint64_t> part_lengths;
    for (const PartInfo& p : manifest_.parts) part_lengths[p.id] = p.length;

    bool format_ok = true, order_ok = true, rank_ok = true, routing_ok = true, bounds_ok = true,
         frames_ok = true;
    std::string format_detail, order_detail, rank_detail, routing_detail, bounds_detail,
        frames_detail;
    std::uint64_t total_records = 0;

    for (std::uint32_t id : directory_.bucket_ids()) {
        std::string obj = std::string(object_names::index(id));
        std::string index_path = object_path(object_names::index(id));
        std::vector<std::uint8_t> bytes;
        MonotoneIndex index;
        std::uint64_t upsilon = 0;
        try {
            bytes = read_all(*backend_, index_path);
            index = MonotoneIndex::deserialize_prefix(bytes, &upsilon);
        } catch (const Error& e) {
            format_ok = false;
            format_detail = obj + ": " + e.what();
            continue;
        }
        const Bucket& bucket = directory_.bucket(id);
        if (index.size() != bucket.record_count ||
            bytes.size() != upsilon + index.size() * MetadataRecord::kEncodedSize) {
            format_ok = false;
            format_detail = obj + ": body size disagrees with header";
            continue;
        }
        total_records += index.size();

        std::uint64_t suffix = directory_.bucket_suffix(id);
        std::uint64_t previous_key = 0;
        for (std::uint64_t r = 0; r < index.size(); ++r) {
            MetadataRecord rec = MetadataRecord::decode(
                std::span<const std::uint8_t>(bytes).subspan(
                    upsilon + r * MetadataRecord::kEncodedSize, MetadataRecord::kEncodedSize));
            if (r > 0 && rec.key.value <= previous_key && order_ok) {
                order_ok = false;
                order_detail = obj + ": records not strictly increasing at rank " +
                               std::to_string(r);
            }
            previous_key = rec.key.value;
            if (rank_ok && (index.rank(rec.key.value) != std::optional<std::uint64_t>(r) ||
                            index.key_at(r) != rec.key.value)) {
                rank_ok = false;
                rank_detail = obj + ": rank/key mismatch at rank " + std::to_string(r);
            }
            if (routing_ok &&
                (directory_.locate_bucket(rec.key) != id ||
                 (rec.key.value & low_bits_mask(bucket.local_depth)) != suffix)) {
                routing_ok = false;
                routing_detail = obj + ": key at rank " + std::to_string(r) +
                                 " routed to the wrong bucket";
            }
            auto part_it = part_lengths.find(rec.part_position);
            if (bounds_ok &&
                (part_it == part_lengths.end() ||
                 rec.offset + rec.stored_size > part_it->second ||
                 rec.stored_size < ContentFrame::kHeaderSize)) {
                bounds_ok = false;
                bounds_detail = obj + ": record at rank " + std::to_string(r) +
                                " points outside its part object";
                continue;
            }
            if (frames_ok) {
                try {
                    std::vector<std::uint8_t> frame_bytes = backend_->read_range(
                        object_path(object_names::part(rec.part_position)), rec.offset,
                        rec.stored_size);
                    ContentFrame frame = ContentFrame::decode(frame_bytes);
                    codec_decompress(manifest_.codec, frame.payload, frame.original_size);
                } catch (const Error& e) {
                    frames_ok = false;
                    frames_detail = obj + ": record at rank " + std::to_string(r) + " (" +
                                    object_names::part(rec.part_position) + " offset " +
                                    std::to_string(rec.offset) + "): " + e.what();
                }
            }
        }
    }
    check("index-format", format_ok, format_detail);
    check("record-order", order_ok, order_detail);
    check("rank-agreement", rank_ok, rank_detail);
    check("directory-routing", routing_ok, routing_detail);
    check("record-bounds", bounds_ok, bounds_detail);
    check("frame-decode", frames_ok, frames_detail);

    {
        bool ok = true;
        std::string detail;
        if (total_records != manifest_.file_count) {
            ok = false;
            detail = "manifest file count " + std::to_string(manifest_.file_count) +
                     " != indexed records " + std::to_string(total_records);
        } else {
            try {
                std::vector<std::string> names = list_names();
                if (names.size() > manifest_.file_count) {
                    ok = false;
                    detail = "_names lists more entries than the archive has records";
                }
                for (const std::string& name : names) {
                    FileKey key = name_hash(name);
                    auto hdr = header(directory_.locate_bucket(key));
                    if (!hdr->index.rank(key.value).has_value()) {
                        ok = false;
                        detail = "name '" + name + "' has no metadata record";
                        break;
                    }
                }
            } catch (const Error& e) {
                ok = false;
                detail = e.what();
            }
        }
        check("names", ok, detail);
    }

    return report;
}

}  // namespace hpf
