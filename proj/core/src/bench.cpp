#include "hpf/bench.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "hpf/errors.hpp"
#include "hpf/metered_backend.hpp"

namespace hpf {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

struct MeteredFixture {
    std::shared_ptr<MemoryBackend> base = std::make_shared<MemoryBackend>();
    std::shared_ptr<IoMeter> meter = std::make_shared<IoMeter>();
    std::shared_ptr<MeteredBackend> backend = std::make_shared<MeteredBackend>(base, meter);
};

std::uint64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
}

bool is_metadata_object(const std::string& path) {
    return path.find("/index-") != std::string::npos ||
           path.find("/map-index") != std::string::npos ||
           path.find("_manifest") != std::string::npos;
}

void fill_metrics_from_meter(StrategyMetrics& m, const IoMeter& meter, double accesses) {
    IoCounters total = meter.total();
    m.mean_read_ops = total.read_ops / accesses;
    m.mean_read_bytes = total.read_bytes / accesses;
    m.mean_cached_read_ops = total.cached_read_ops / accesses;
    for (const auto& [path, counters] : meter.per_path()) {
        if (is_metadata_object(path)) {
            m.mean_metadata_read_ops += counters.read_ops / accesses;
            m.mean_metadata_read_bytes += counters.read_bytes / accesses;
        } else {
            m.mean_content_read_ops += counters.read_ops / accesses;
            m.mean_content_read_bytes += counters.read_bytes / accesses;
        }
    }
}

}  // namespace

std::vector<NamedContent> make_corpus(std::uint64_t file_count, std::uint64_t size_min,
                                      std::uint64_t size_max, std::uint64_t seed) {
    if (size_max < size_min) {
        throw_error(ErrorCode::invalid_config, "size range is inverted");
    }
    std::vector<NamedContent> corpus;
    corpus.reserve(file_count);
    std::uint64_t state = seed;
    for (std::uint64_t i = 0; i < file_count; ++i) {
        std::string name = "logs/host-" + std::to_string(splitmix64(state) % 1000) + "/app-" +
                           std::to_string(i) + ".log";
        std::uint64_t span = size_max - size_min + 1;
        std::uint64_t size = size_min + splitmix64(state) % span;
        std::vector<std::uint8_t> content(size);
        std::uint64_t word = 0;
        for (std::uint64_t j = 0; j < size; ++j) {
            if (j % 8 == 0) word = splitmix64(state);
            content[j] = static_cast<std::uint8_t>(word >> (8 * (j % 8)));
        }
        corpus.emplace_back(std::move(name), std::move(content));
    }
    return corpus;
}

BenchReport run_bench(const BenchOptions& options) {
    BenchReport report;
    report.options = options;

    std::vector<NamedContent> corpus =
        make_corpus(options.file_count, options.size_min, options.size_max, options.seed);
    std::vector<InputFile> inputs;
    inputs.reserve(corpus.size());
    for (const auto& [name, content] : corpus) {
        inputs.push_back(InputFile::from_bytes(name, content));
    }

    std::mt19937_64 rng(options.seed ^ 0xBE9C);
    std::vector<const NamedContent*> accesses;
    accesses.reserve(options.accesses);
    for (std::uint64_t i = 0; i < options.accesses; ++i) {
        accesses.push_back(&corpus[rng() % corpus.size()]);
    }
    const double k = static_cast<double>(std::max<std::uint64_t>(1, options.accesses));

    // HPF archive.
    {
        MeteredFixture fx;
        StrategyMetrics m;
        m.strategy = "hpf";
        auto start = std::chrono::steady_clock::now();
        Archive archive = Archive::create(fx.backend, "bench", inputs, options.archive);
        m.build_ms = elapsed_ms(start);
        if (options.pin) archive.pin_index_objects();
        for (std::uint32_t id : archive.directory().bucket_ids()) {
            (void)archive.bucket_upsilon(id);  // make every header resident
        }
        for (const PartInfo& p : archive.manifest().parts) m.container_bytes += p.length;
        for (std::uint32_t id : archive.directory().bucket_ids()) {
            m.container_bytes += fx.backend->length(archive.object_path(object_names::index(id)));
        }
        fx.meter->reset();
        for (const NamedContent* f : accesses) {
            auto got = archive.read_file(f->first);
            if (!got || *got != f->second) {
                throw_error(ErrorCode::integrity, "hpf returned wrong bytes for " + f->first);
            }
        }
        fill_metrics_from_meter(m, *fx.meter, k);
        report.strategies.push_back(m);
    }

    // Sparse (map-style) baseline.
    {
        MeteredFixture fx;
        StrategyMetrics m;
        m.strategy = "sparse";
        auto start = std::chrono::steady_clock::now();
        SparseContainer container = SparseContainer::build(fx.backend, "bench", corpus);
        m.build_ms = elapsed_ms(start);
        m.container_bytes = container.container_bytes();
        fx.meter->reset();
        for (const NamedContent* f : accesses) {
            auto got = container.get(f->first);
            if (!got || *got != f->second) {
                throw_error(ErrorCode::integrity, "sparse returned wrong bytes for " + f->first);
            }
        }
        fill_metrics_from_meter(m, *fx.meter, k);
        report.strategies.push_back(m);
    }

    // Scan (sequence-style) baseline.
    {
        MeteredFixture fx;
        StrategyMetrics m;
        m.strategy = "scan";
        auto start = std::chrono::steady_clock::now();
        ScanContainer container = ScanContainer::build(fx.backend, "bench", corpus);
        m.build_ms = elapsed_ms(start);
        m.container_bytes = container.container_bytes();
        fx.meter->reset();
        for (const NamedContent* f : accesses) {
            auto got = container.get(f->first);
            if (!got || *got != f->second) {
                throw_error(ErrorCode::integrity, "scan returned wrong bytes for " + f->first);
            }
        }
        fill_metrics_from_meter(m, *fx.meter, k);
        report.strategies.push_back(m);
    }

    return report;
}

std::string BenchReport::table() const {
    std::ostringstream out;
    out << "# " << options.file_count << " files, sizes " << options.size_min << ".."
        << options.size_max << " B, " << options.accesses << " random accesses, pin="
        << (options.pin ? "on" : "off") << "\n";
    out << "# scan approximates the sequence-file family (and HAR's asymptotics, which add two "
           "fixed index reads); sparse approximates the sorted map-file family\n";
    out << "strategy      read_ops  read_bytes    meta_ops  meta_bytes  content_ops  "
           "content_bytes  cached_ops  build_ms  container_bytes\n";
    for (const StrategyMetrics& m : strategies) {
        char line[256];
        std::snprintf(line, sizeof(line),
                      "%-12s %9.2f %11.1f %11.2f %11.1f %12.2f %14.1f %11.2f %9llu %16llu\n",
                      m.strategy.c_str(), m.mean_read_ops, m.mean_read_bytes,
                      m.mean_metadata_read_ops, m.mean_metadata_read_bytes, m.mean_content_read_ops,
                      m.mean_content_read_bytes, m.mean_cached_read_ops,
                      static_cast<unsigned long long>(m.build_ms),
                      static_cast<unsigned long long>(m.container_bytes));
        out << line;
    }
    return out.str();
}

std::string BenchReport::machine_lines() const {
    std::ostringstream out;
    for (const StrategyMetrics& m : strategies) {
        out << m.strategy << "\tmean_read_ops\t" << m.mean_read_ops << "\n";
        out << m.strategy << "\tmean_read_bytes\t" << m.mean_read_bytes << "\n";
        out << m.strategy << "\tmean_metadata_read_ops\t" << m.mean_metadata_read_ops << "\n";
        out << m.strategy << "\tmean_metadata_read_bytes\t" << m.mean_metadata_read_bytes << "\n";
        out << m.strategy << "\tmean_content_read_ops\t" << m.mean_content_read_ops << "\n";
        out << m.strategy << "\tmean_content_read_bytes\t" << m.mean_content_read_bytes << "\n";
        out << m.strategy << "\tmean_cached_read_ops\t" << m.mean_cached_read_ops << "\n";
        out << m.strategy << "\tbuild_ms\t" << m.build_ms << "\n";
        out << m.strategy << "\tcontainer_bytes\t" << m.container_bytes << "\n";
    }
    return out.str();
}

}  // namespace hpf
