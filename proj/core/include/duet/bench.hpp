#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "duet/execution.hpp"
#include "duet/scene.hpp"

namespace duet {

struct OracleConfig {
    FeasibilityOracle::Mode mode{FeasibilityOracle::Mode::always_feasible};
    double p_fail{0.0};
    std::uint64_t seed{0};
    std::set<FeasibilityOracle::Pair> blacklist;

    /// Oracle for one instance; the random mode mixes in the instance seed.
    FeasibilityOracle make(std::uint64_t instance_seed) const;
};

struct BenchConfig {
    std::vector<std::size_t> n_values{12, 16, 20};
    std::size_t repetitions{30};
    std::vector<Method> methods{Method::search, Method::greedy, Method::distance, Method::random};
    OracleConfig oracle;
    std::uint64_t seed_base{1};
    std::size_t budget{100000};
    /// Worker threads for (scene, method) cells; results do not depend on it.
    std::size_t threads{1};
    /// Shape of generated scenes; n_objects is overridden per N.
    GenerationParams scene;

    /// Throws InvalidParameters.
    void validate() const;
};

/// Reads the JSON config; absent fields keep their defaults, unknown fields
/// are rejected. Throws ParseError or InvalidParameters.
BenchConfig load_bench_config(std::string_view text);

enum class InstanceKind { regular, trivial, infeasible };

/// trivial: some robot reaches the target directly; infeasible: neither robot
/// has any relocation plan. Benchmarks draw regular instances only.
InstanceKind classify_instance(const Scene& scene);

struct RunRecord {
    Method method{Method::search};
    std::size_t n{0};
    std::size_t repetition{0};
    std::uint64_t scene_seed{0};
    std::uint64_t scene_hash{0};
    MissionLog log;
};

struct MetricsRow {
    Method method{Method::search};
    std::size_t n{0};
    double turn_takings_mean{0}, turn_takings_sd{0};
    double rate_mean{0}, rate_sd{0};
    double relocated_mean{0}, relocated_sd{0};
    double success_rate{0};
    double replanning_mean{0};
    /// Machine-independent planning work (expansions + accessibility checks + oracle calls).
    double planning_time_mean{0}, planning_time_sd{0};
    double makespan_mean{0}, makespan_sd{0};
    /// Planning work per executed relocation.
    double planning_per_task_mean{0};
};

struct BenchResult {
    std::vector<MetricsRow> rows;
    /// Sorted by (n, repetition, method order in the config).
    std::vector<RunRecord> runs;
};

/// Instance seed for (N, attempt): instances are drawn in attempt order and
/// non-regular ones are skipped.
std::uint64_t instance_seed(std::uint64_t seed_base, std::size_t n, std::size_t attempt);

/// The regular instances a config evaluates, per N in config order.
std::vector<std::vector<std::pair<std::uint64_t, Scene>>> bench_instances(const BenchConfig& config);

BenchResult run_bench(const BenchConfig& config);

/// Aggregates run records into rows ordered by (method order, N order) from
/// the config. Means cover successful runs; rate excludes k = 1 runs.
std::vector<MetricsRow> aggregate(const BenchConfig& config, const std::vector<RunRecord>& runs);

/// Header plus one line per row, floats printed with 4 significant digits.
std::string emit_csv(const std::vector<MetricsRow>& rows);

inline constexpr std::string_view kCsvHeader =
    "method,N,turn_takings_mean,turn_takings_sd,rate_mean,rate_sd,relocated_mean,relocated_sd,success_rate,"
    "replanning_mean,planning_time_mean,planning_time_sd,makespan_mean,makespan_sd";

}  // namespace duet
