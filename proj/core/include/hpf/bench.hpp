#pragma once

// Benchmark harness: builds one synthetic corpus, stores it as an HPF
// archive and as both baseline containers on isolated metered in-memory
// backends, replays the same random accesses against each, and reports IO
// operation/byte counts. Counts, not wall-clock, are the measured quantity.

#include <cstdint>
#include <string>
#include <vector>

#include "hpf/archive.hpp"
#include "hpf/baseline.hpp"

namespace hpf {

struct BenchOptions {
    std::uint64_t file_count = 10000;
    std::uint64_t size_min = 1024;
    std::uint64_t size_max = 65536;
    std::uint64_t accesses = 100;
    bool pin = false;
    std::uint64_t seed = 42;
    ArchiveConfig archive;
};

struct StrategyMetrics {
    std::string strategy;
    double mean_read_ops = 0;
    double mean_read_bytes = 0;
    double mean_metadata_read_ops = 0;
    double mean_metadata_read_bytes = 0;
    double mean_content_read_ops = 0;
    double mean_content_read_bytes = 0;
    double mean_cached_read_ops = 0;
    std::uint64_t build_ms = 0;
    std::uint64_t container_bytes = 0;
};

struct BenchReport {
    BenchOptions options;
    std::vector<StrategyMetrics> strategies;

    std::string table() const;
    /// One line per (strategy, metric): "strategy<TAB>metric<TAB>value".
    std::string machine_lines() const;
};

/// Deterministic synthetic corpus: distinct names, sizes uniform in
/// [size_min, size_max], pseudo-random content.
std::vector<NamedContent> make_corpus(std::uint64_t file_count, std::uint64_t size_min,
                                      std::uint64_t size_max, std::uint64_t seed);

BenchReport run_bench(const BenchOptions& options);

}  // namespace hpf
