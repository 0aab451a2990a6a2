#include "duet/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "duet/errors.hpp"
#include "duet/scene_io.hpp"
#include "json_util.hpp"

namespace duet {

using detail::ojson;

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct Stats {
    double mean = std::numeric_limits<double>::quiet_NaN();
    double sd = std::numeric_limits<double>::quiet_NaN();
};

// Sample standard deviation; 0 for a single value.
Stats stats(const std::vector<double>& v) {
    Stats s;
    if (v.empty()) return s;
    double sum = 0.0;
    for (double x : v) sum += x;
    s.mean = sum / static_cast<double>(v.size());
    double sq = 0.0;
    for (double x : v) sq += (x - s.mean) * (x - s.mean);
    s.sd = v.size() > 1 ? std::sqrt(sq / static_cast<double>(v.size() - 1)) : 0.0;
    return s;
}

void check_keys(const ojson& obj, std::initializer_list<const char*> allowed, const std::string& path) {
    if (!obj.is_object()) throw ParseError(0, path, "expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; })) {
            throw ParseError(0, path.empty() ? it.key() : path + "." + it.key(), "unknown field");
        }
    }
}

std::uint64_t unsigned_field(const ojson& obj, const char* key, const std::string& path) {
    const long long v = detail::integer(obj, key, path);
    if (v < 0) throw ParseError(0, detail::child(path, key), "expected a non-negative integer");
    return static_cast<std::uint64_t>(v);
}

}  // namespace

FeasibilityOracle OracleConfig::make(std::uint64_t instance_seed) const {
    switch (mode) {
        case FeasibilityOracle::Mode::always_feasible: return FeasibilityOracle::always_feasible();
        case FeasibilityOracle::Mode::blacklist: return FeasibilityOracle::with_blacklist(blacklist);
        case FeasibilityOracle::Mode::seeded_random:
            return FeasibilityOracle::seeded_random(p_fail, splitmix(seed ^ splitmix(instance_seed)));
    }
    return {};
}

void BenchConfig::validate() const {
    if (repetitions < 1) throw InvalidParameters("repetitions must be >= 1");
    if (n_values.empty()) throw InvalidParameters("n_values must not be empty");
    for (auto n : n_values) {
        if (n < 2) throw InvalidParameters("every N must be >= 2");
    }
    if (methods.empty()) throw InvalidParameters("methods must not be empty");
    if (budget < 1) throw InvalidParameters("budget must be >= 1");
    if (threads < 1) throw InvalidParameters("threads must be >= 1");
    if (!(oracle.p_fail >= 0.0 && oracle.p_fail <= 1.0)) throw InvalidParameters("p_fail must lie in [0, 1]");
}

BenchConfig load_bench_config(std::string_view text) {
    const ojson doc = detail::parse_text(text);
    check_keys(doc, {"n_values", "repetitions", "methods", "oracle", "seed_base", "budget", "threads", "scene"}, "");
    BenchConfig c;
    if (doc.contains("n_values")) {
        const auto& arr = detail::array(doc, "n_values", "");
        c.n_values.clear();
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (!arr[i].is_number_unsigned()) throw ParseError(0, detail::child("n_values", i), "expected a count");
            c.n_values.push_back(arr[i].get<std::size_t>());
        }
    }
    if (doc.contains("repetitions")) c.repetitions = unsigned_field(doc, "repetitions", "");
    if (doc.contains("methods")) {
        const auto& arr = detail::array(doc, "methods", "");
        c.methods.clear();
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (!arr[i].is_string()) throw ParseError(0, detail::child("methods", i), "expected a method name");
            try {
                c.methods.push_back(method_from_string(arr[i].get<std::string>()));
            } catch (const InvalidParameters& e) {
                throw ParseError(0, detail::child("methods", i), e.what());
            }
        }
    }
    if (doc.contains("seed_base")) c.seed_base = unsigned_field(doc, "seed_base", "");
    if (doc.contains("budget")) c.budget = unsigned_field(doc, "budget", "");
    if (doc.contains("threads")) c.threads = unsigned_field(doc, "threads", "");
    if (doc.contains("oracle")) {
        const auto& o = doc["oracle"];
        check_keys(o, {"mode", "p_fail", "seed", "blacklist"}, "oracle");
        const auto& mode = detail::member(o, "mode", "oracle");
        if (mode == "always-feasible") {
            c.oracle.mode = FeasibilityOracle::Mode::always_feasible;
        } else if (mode == "blacklist") {
            c.oracle.mode = FeasibilityOracle::Mode::blacklist;
        } else if (mode == "seeded-random") {
            c.oracle.mode = FeasibilityOracle::Mode::seeded_random;
        } else {
            throw ParseError(0, "oracle.mode", "expected always-feasible, blacklist or seeded-random");
        }
        if (o.contains("p_fail")) c.oracle.p_fail = detail::number(o, "p_fail", "oracle");
        if (o.contains("seed")) c.oracle.seed = unsigned_field(o, "seed", "oracle");
        if (o.contains("blacklist")) {
            const auto& arr = detail::array(o, "blacklist", "oracle");
            for (std::size_t i = 0; i < arr.size(); ++i) {
                if (!arr[i].is_array() || arr[i].size() != 2 || !arr[i][0].is_number_integer() ||
                    !arr[i][1].is_number_integer()) {
                    throw ParseError(0, detail::child("oracle.blacklist", i), "expected [robot, object]");
                }
                c.oracle.blacklist.insert({RobotId{arr[i][0].get<int>()}, ObjectId{arr[i][1].get<int>()}});
            }
        }
    }
    if (doc.contains("scene")) {
        const auto& s = doc["scene"];
        check_keys(s, {"radius_min", "radius_max", "gripper_radius", "mount_fraction", "workspace"}, "scene");
        if (s.contains("radius_min")) c.scene.radius_min = detail::number(s, "radius_min", "scene");
        if (s.contains("radius_max")) c.scene.radius_max = detail::number(s, "radius_max", "scene");
        if (s.contains("gripper_radius")) c.scene.gripper_radius = detail::number(s, "gripper_radius", "scene");
        if (s.contains("workspace")) {
            const auto& w = s["workspace"];
            check_keys(w, {"w", "h"}, "scene.workspace");
            c.scene.workspace = {detail::number(w, "w", "scene.workspace"), detail::number(w, "h", "scene.workspace")};
        }
        double fraction = GenerationParams::kDefaultMountFraction;
        if (s.contains("mount_fraction")) fraction = detail::number(s, "mount_fraction", "scene");
        try {
            c.scene.robots = GenerationParams::default_robots(c.scene.workspace, fraction);
        } catch (const InvalidParameters& e) {
            throw ParseError(0, "scene.mount_fraction", e.what());
        }
    }
    c.validate();
    return c;
}

InstanceKind classify_instance(const Scene& scene) {
    const SceneState state(scene);
    const ObjectIndex target = scene.target_index();
    for (RobotIndex r = 0; r < kRobotCount; ++r) {
        if (robot_object_edge(state, r, target)) return InstanceKind::trivial;
    }
    const PlanPair plans = plan_both(state);
    return plans[0] || plans[1] ? InstanceKind::regular : InstanceKind::infeasible;
}

std::uint64_t instance_seed(std::uint64_t seed_base, std::size_t n, std::size_t attempt) {
    return splitmix(seed_base * 1000003ull + n) ^ static_cast<std::uint64_t>(attempt);
}

std::vector<std::vector<std::pair<std::uint64_t, Scene>>> bench_instances(const BenchConfig& config) {
    config.validate();
    std::vector<std::vector<std::pair<std::uint64_t, Scene>>> out;
    for (std::size_t n : config.n_values) {
        GenerationParams params = config.scene;
        params.n_objects = n;
        std::vector<std::pair<std::uint64_t, Scene>> set;
        const std::size_t max_attempts = 1000 * config.repetitions;
        for (std::size_t attempt = 0; set.size() < config.repetitions; ++attempt) {
            if (attempt >= max_attempts) {
                throw GenerationFailure("could not draw " + std::to_string(config.repetitions) +
                                        " regular instances with N = " + std::to_string(n));
            }
            const std::uint64_t seed = instance_seed(config.seed_base, n, attempt);
            Scene scene;
            try {
                scene = generate_scene(seed, params);
            } catch (const GenerationFailure&) {
                continue;
            }
            if (classify_instance(scene) == InstanceKind::regular) set.emplace_back(seed, std::move(scene));
        }
        out.push_back(std::move(set));
    }
    return out;
}

BenchResult run_bench(const BenchConfig& config) {
    const auto instances = bench_instances(config);

    struct Cell {
        std::size_t n_index, repetition, method_index;
    };
    std::vector<Cell> cells;
    for (std::size_t ni = 0; ni < instances.size(); ++ni) {
        for (std::size_t rep = 0; rep < instances[ni].size(); ++rep) {
            for (std::size_t mi = 0; mi < config.methods.size(); ++mi) cells.push_back({ni, rep, mi});
        }
    }

    BenchResult result;
    result.runs.resize(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            const Cell& cell = cells[i];
            const auto& [seed, scene] = instances[cell.n_index][cell.repetition];
            MissionOptions options;
            options.method = config.methods[cell.method_index];
            options.oracle = config.oracle.make(seed);
            options.budget = config.budget;
            options.seed = seed;
            RunRecord& rec = result.runs[i];
            rec.method = options.method;
            rec.n = config.n_values[cell.n_index];
            rec.repetition = cell.repetition;
            rec.scene_seed = seed;
            rec.scene_hash = scene_hash(scene);
            rec.log = run_mission(scene, options);
        }
    };
    const std::size_t threads = std::min(config.threads, std::max<std::size_t>(cells.size(), 1));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    result.rows = aggregate(config, result.runs);
    return result;
}

std::vector<MetricsRow> aggregate(const BenchConfig& config, const std::vector<RunRecord>& runs) {
    std::vector<MetricsRow> rows;
    for (Method method : config.methods) {
        for (std::size_t n : config.n_values) {
            std::vector<const RunRecord*> cell;
            for (const auto& r : runs) {
                if (r.method == method && r.n == n) cell.push_back(&r);
            }
            // Order-independent aggregation regardless of how runs were scheduled.
            std::sort(cell.begin(), cell.end(),
                      [](const RunRecord* a, const RunRecord* b) { return a->repetition < b->repetition; });

            std::vector<double> t, rate, relocated, replans, work, makespan, per_task;
            std::size_t successes = 0;
            for (const RunRecord* r : cell) {
                if (!r->log.success) continue;
                ++successes;
                t.push_back(r->log.turn_taking.count);
                if (r->log.turn_taking.rate) rate.push_back(*r->log.turn_taking.rate);
                relocated.push_back(static_cast<double>(r->log.relocations.size()));
                replans.push_back(r->log.replanning_count);
                work.push_back(static_cast<double>(r->log.planning_work()));
                makespan.push_back(r->log.makespan);
                per_task.push_back(static_cast<double>(r->log.planning_work()) /
                                   static_cast<double>(r->log.relocations.size()));
            }
            MetricsRow row;
            row.method = method;
            row.n = n;
            const auto st = stats(t), sr = stats(rate), sl = stats(relocated), sw = stats(work), sm = stats(makespan);
            row.turn_takings_mean = st.mean;
            row.turn_takings_sd = st.sd;
            row.rate_mean = sr.mean;
            row.rate_sd = sr.sd;
            row.relocated_mean = sl.mean;
            row.relocated_sd = sl.sd;
            row.success_rate = cell.empty() ? std::numeric_limits<double>::quiet_NaN()
                                            : 100.0 * static_cast<double>(successes) / static_cast<double>(cell.size());
            row.replanning_mean = stats(replans).mean;
            row.planning_time_mean = sw.mean;
            row.planning_time_sd = sw.sd;
            row.makespan_mean = sm.mean;
            row.makespan_sd = sm.sd;
            row.planning_per_task_mean = stats(per_task).mean;
            rows.push_back(row);
        }
    }
    return rows;
}

std::string emit_csv(const std::vector<MetricsRow>& rows) {
    std::string out(kCsvHeader);
    out += '\n';
    auto num = [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.4g", v);
        return std::string(buf);
    };
    for (const auto& r : rows) {
        out += to_string(r.method);
        out += ',' + std::to_string(r.n);
        for (double v : {r.turn_takings_mean, r.turn_takings_sd, r.rate_mean, r.rate_sd, r.relocated_mean,
                         r.relocated_sd, r.success_rate, r.replanning_mean, r.planning_time_mean, r.planning_time_sd,
                         r.makespan_mean, r.makespan_sd}) {
            out += ',' + num(v);
        }
        out += '\n';
    }
    return out;
}

}  // namespace duet
