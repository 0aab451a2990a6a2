#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "duet/bench.hpp"
#include "duet/errors.hpp"
#include "duet/execution.hpp"
#include "duet/export.hpp"
#include "duet/oracles.hpp"
#include "duet/scene_io.hpp"
#include "duet/sequencing.hpp"
#include "render.hpp"

namespace duet::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kOutDirEnv = "DUET_OUT_DIR";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot write '" + path + "'");
    file << text;
}

// "always-feasible", "blacklist:R-O[,R-O...]" or "seeded-random:P[:SEED]"
FeasibilityOracle parse_oracle(const std::string& spec) {
    if (spec == "always-feasible") return FeasibilityOracle::always_feasible();
    const auto colon = spec.find(':');
    const std::string mode = spec.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (mode == "blacklist") {
        std::set<FeasibilityOracle::Pair> pairs;
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) {
            int r = 0, o = 0;
            char dash = 0;
            std::istringstream is(item);
            if (!(is >> r >> dash >> o) || dash != '-' || !is.eof()) {
                throw CLI::ValidationError("--oracle", "bad blacklist pair '" + item + "'");
            }
            pairs.insert({RobotId{r}, ObjectId{o}});
        }
        return FeasibilityOracle::with_blacklist(std::move(pairs));
    }
    if (mode == "seeded-random") {
        std::istringstream is(rest);
        double p = 0;
        char sep = 0;
        std::uint64_t seed = 0;
        if (!(is >> p) || p < 0 || p > 1) throw CLI::ValidationError("--oracle", "p_fail must lie in [0, 1]");
        if (is >> sep && (sep != ':' || !(is >> seed))) throw CLI::ValidationError("--oracle", "bad seed");
        return FeasibilityOracle::seeded_random(p, seed);
    }
    throw CLI::ValidationError("--oracle", "unknown oracle '" + spec + "'");
}

struct Counter {
    std::size_t ok = 0, total = 0;
    void add(bool good) {
        ++total;
        if (good) ++ok;
    }
    bool clean() const { return ok == total; }
};

struct VerifyReport {
    Counter search, corridor, makespan;
    std::size_t banded = 0;
};

void verify_scene(const Scene& scene, VerifyReport& report) {
    const SceneState state(scene);
    const auto plans = plan_both(state);
    if (plans[0] || plans[1]) {
        const auto out = search_allocate(state, plans);
        const auto oracle = brute_force_allocate(state, plans);
        const bool found = out.status == SearchStatus::found;
        report.search.add(found == oracle.has_value() && (!found || out.allocation->penalty == oracle->penalty));
        if (found) {
            const Timeline t = sequence_actions(scene, *out.allocation);
            report.makespan.add(std::abs(t.makespan - oracles::replay_makespan(t)) <= 1e-9);
        }
    }
    auto check = [&](Point a, Point b, double radius, std::vector<ObjectIndex> ignore) {
        if (std::abs(oracles::analytic_clearance(state, a, b, radius, ignore)) <= 0.5) {
            ++report.banded;
            return;
        }
        const bool sampled = oracles::sampled_clearance(state, a, b, radius, ignore) >= 0.0;
        report.corridor.add(corridor_free(state, a, b, radius, ignore) == sampled);
    };
    for (ObjectIndex i = 0; i < scene.objects.size(); ++i) {
        const Point ci = scene.objects[i].footprint.center;
        for (const auto& r : scene.robots) check(r.mount, ci, scene.gripper_radius, {i});
        for (ObjectIndex j = i + 1; j < scene.objects.size(); ++j) {
            const double moving = scene.gripper_radius +
                                  std::max(scene.objects[i].footprint.radius, scene.objects[j].footprint.radius);
            check(ci, scene.objects[j].footprint.center, moving, {i, j});
        }
    }
}

// 100 scenes each at N = 8 and N = 12 that have a relocation plan.
std::vector<Scene> verify_suite() {
    std::vector<Scene> out;
    for (std::size_t n : {8u, 12u}) {
        GenerationParams p;
        p.n_objects = n;
        std::size_t taken = 0;
        for (std::uint64_t seed = 1; taken < 100; ++seed) {
            Scene s = generate_scene(seed * 7919 + n, p);
            const auto plans = plan_both(SceneState(s));
            if (!plans[0] && !plans[1]) continue;
            out.push_back(std::move(s));
            ++taken;
        }
    }
    return out;
}

int cmd_verify(const std::string& scene_path, bool suite, std::ostream& out) {
    VerifyReport report;
    if (suite) {
        for (const Scene& s : verify_suite()) verify_scene(s, report);
    } else {
        verify_scene(load_scene_file(scene_path), report);
    }
    out << "search=oracle: " << report.search.ok << "/" << report.search.total << "\n";
    out << "corridor=sampling: " << report.corridor.ok << "/" << report.corridor.total << " (" << report.banded
        << " inside the 0.5 mm band)\n";
    out << "makespan=replay: " << report.makespan.ok << "/" << report.makespan.total << "\n";
    const bool clean = report.search.clean() && report.corridor.clean() && report.makespan.clean();
    if (!clean) out << "verify-mismatch\n";
    return clean ? kOk : kFailure;
}

int cmd_plan(const std::string& scene_path, const std::string& method, const std::string& oracle_spec,
             std::uint64_t seed, std::string out_dir, std::ostream& out) {
    const Scene scene = load_scene_file(scene_path);
    MissionOptions opt;
    opt.method = method_from_string(method);
    opt.oracle = parse_oracle(oracle_spec);
    opt.seed = seed;
    const MissionLog log = run_mission(scene, opt);
    const Allocation allocation = log.executed_allocation();
    const Timeline timeline = sequence_actions(scene, allocation);

    if (out_dir.empty()) {
        const char* env = std::getenv(kOutDirEnv);
        out_dir = env && *env ? env : ".";
    }
    fs::create_directories(out_dir);
    write_text((fs::path(out_dir) / "allocation.json").string(), allocation_to_json(allocation), out);
    write_text((fs::path(out_dir) / "timeline.json").string(), timeline_to_json(timeline), out);
    write_text((fs::path(out_dir) / "mission.json").string(), mission_to_json(log), out);

    out << to_string(opt.method) << ": " << (log.success ? "success" : to_string(log.failure)) << ", "
        << log.relocations.size() << " relocations, t=" << log.turn_taking.count << ", replans "
        << log.replanning_count << ", makespan " << timeline.makespan << " s\n";
    return log.success ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-arm object retrieval planner"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::uint64_t seed = 1;
    std::size_t n = 12;
    std::string out_path;
    auto* gen = app.add_subcommand("gen", "Generate a random scene");
    gen->add_option("--seed", seed, "RNG seed")->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    gen->add_option("--n", n, "Number of objects")->check(CLI::Range(2, 10000))->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    gen->add_option("--out", out_path, "Scene file (stdout if omitted)");

    std::string scene_path, method = "search", oracle = "always-feasible", out_dir;
    std::uint64_t plan_seed = 0;
    auto* plan = app.add_subcommand("plan", "Plan and execute one retrieval");
    plan->add_option("--scene", scene_path, "Scene file")->required();
    plan->add_option("--method", method, "search | greedy | distance | random")
        ->check(CLI::IsMember({"search", "greedy", "distance", "random"}))
        ->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    plan->add_option("--oracle", oracle,
                     "always-feasible | blacklist:R-O,... | seeded-random:P[:SEED]")
        ->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    plan->add_option("--seed", plan_seed, "Coin seed for the random method")
        ->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    plan->add_option("--out", out_dir, std::string("Output directory (default $") + kOutDirEnv + " or .)");

    std::string config_path, csv_path;
    auto* bench = app.add_subcommand("bench", "Run the benchmark sweep");
    bench->add_option("--config", config_path, "Bench config (defaults if omitted)");
    bench->add_option("--out-csv", csv_path, "CSV file (stdout if omitted)");

    bool suite = false;
    std::string verify_scene_path;
    auto* verify = app.add_subcommand("verify", "Compare planners against their oracles");
    auto* vscene = verify->add_option("--scene", verify_scene_path, "Scene file");
    auto* vsuite = verify->add_flag("--suite", suite, "Run the 200-scene suite");
    vscene->excludes(vsuite);
    verify->require_option(1);

    std::string render_scene, timeline_path, render_out;
    int tgraph_robot = 0;
    auto* render = app.add_subcommand("render", "Render a scene or a timeline as SVG");
    auto* rscene = render->add_option("--scene", render_scene, "Scene file");
    auto* rgraph = render->add_option("--tgraph", tgraph_robot, "Overlay this robot's T-graph and plan");
    auto* rtime = render->add_option("--timeline", timeline_path, "Timeline file");
    render->add_option("--out", render_out, "SVG file (stdout if omitted)");
    rscene->excludes(rtime);
    rgraph->needs(rscene);
    render->require_option(1, 3);

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(reversed);
        if (*render && !*rscene && !*rtime) throw CLI::RequiredError("--scene or --timeline");
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*gen) {
            GenerationParams p;
            p.n_objects = n;
            write_text(out_path, save_scene(generate_scene(seed, p)), out);
            return kOk;
        }
        if (*plan) return cmd_plan(scene_path, method, oracle, plan_seed, out_dir, out);
        if (*bench) {
            const BenchConfig config = config_path.empty() ? BenchConfig{} : load_bench_config(read_file(config_path));
            write_text(csv_path, emit_csv(run_bench(config).rows), out);
            return kOk;
        }
        if (*verify) return cmd_verify(verify_scene_path, suite, out);
        if (*render) {
            std::string svg;
            if (*rscene) {
                const Scene scene = load_scene_file(render_scene);
                std::optional<RobotIndex> robot;
                if (*rgraph) robot = scene.robot_index(RobotId{tgraph_robot});
                svg = render_scene_svg(scene, robot);
            } else {
                svg = render_timeline_svg(timeline_from_json(read_file(timeline_path)));
            }
            write_text(render_out, svg, out);
            return kOk;
        }
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvariantViolation& e) {
        err << "invariant-violation: " << e.what() << "\n";
        return kFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}

}  // namespace duet::cli
