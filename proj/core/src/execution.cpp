#include "duet/execution.hpp"

#include <chrono>

#include "duet/errors.hpp"
#include "duet/step_allocators.hpp"

namespace duet {

namespace {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

FeasibilityOracle FeasibilityOracle::with_blacklist(std::set<Pair> pairs) {
    FeasibilityOracle o;
    o.mode_ = Mode::blacklist;
    o.blacklist_ = std::move(pairs);
    return o;
}

FeasibilityOracle FeasibilityOracle::seeded_random(double p_fail, std::uint64_t seed) {
    if (!(p_fail >= 0.0 && p_fail <= 1.0)) throw InvalidParameters("p_fail must lie in [0, 1]");
    FeasibilityOracle o;
    o.mode_ = Mode::seeded_random;
    o.p_fail_ = p_fail;
    o.seed_ = seed;
    return o;
}

bool FeasibilityOracle::feasible(const SceneState& state, RobotIndex robot, ObjectIndex object) const {
    const Scene& scene = state.scene();
    switch (mode_) {
        case Mode::always_feasible: return true;
        case Mode::blacklist:
            return !blacklist_.contains({scene.robots[robot].id, scene.objects[object].id});
        case Mode::seeded_random: {
            std::uint64_t h = mix(seed_ ^ mix(static_cast<std::uint64_t>(scene.robots[robot].id.value)));
            h = mix(h ^ static_cast<std::uint64_t>(scene.objects[object].id.value));
            for (ObjectIndex i = 0; i < scene.objects.size(); ++i) {
                if (!state.present(i)) h = mix(h ^ (static_cast<std::uint64_t>(scene.objects[i].id.value) << 1));
            }
            const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
            return u >= p_fail_;
        }
    }
    return true;
}

const char* to_string(Method method) {
    switch (method) {
        case Method::search: return "search";
        case Method::greedy: return "greedy";
        case Method::distance: return "distance";
        case Method::random: return "random";
    }
    return "?";
}

Method method_from_string(const std::string& name) {
    for (Method m : {Method::search, Method::greedy, Method::distance, Method::random}) {
        if (name == to_string(m)) return m;
    }
    throw InvalidParameters("unknown method '" + name + "' (expected search, greedy, distance or random)");
}

const char* to_string(MissionFailure failure) {
    switch (failure) {
        case MissionFailure::none: return "none";
        case MissionFailure::infeasible_instance: return "infeasible-instance";
        case MissionFailure::budget_exhausted: return "budget-exhausted";
    }
    return "?";
}

Allocation MissionLog::executed_allocation() const {
    RelocationPlan plan;
    std::vector<RobotId> assignees;
    for (const auto& r : relocations) {
        plan.sequence.push_back(r.object);
        assignees.push_back(r.robot);
    }
    if (!assignees.empty()) plan.robot = assignees.front();
    return make_allocation(std::move(plan), std::move(assignees));
}

namespace {

class Mission {
public:
    Mission(const Scene& scene, const MissionOptions& options)
        : scene_(scene), options_(options), state_(scene), target_(scene.target_index()) {
        log_.method = options.method;
    }

    MissionLog run() {
        const auto t0 = std::chrono::steady_clock::now();
        if (options_.method == Method::search) {
            run_search();
        } else {
            run_steps();
        }
        log_.planning_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const Allocation executed = log_.executed_allocation();
        log_.turn_taking = count_turn_takings(executed.assignees);
        if (!executed.assignees.empty()) log_.makespan = sequence_actions(scene_, executed).makespan;
        return std::move(log_);
    }

private:
    void fail(MissionFailure why) {
        log_.success = false;
        log_.failure = why;
    }

    // Returns true when the attempt went through.
    bool attempt(ObjectIndex object, RobotIndex robot) {
        ++log_.oracle_calls;
        if (!options_.oracle.feasible(state_, robot, object)) {
            state_.invalidate_edge(robot, object);
            log_.failures.push_back({scene_.objects[object].id, scene_.robots[robot].id, log_.relocations.size()});
            ++log_.replanning_count;
            return false;
        }
        state_.remove(object);
        log_.relocations.push_back({scene_.objects[object].id, scene_.robots[robot].id});
        if (object == target_) log_.success = true;
        return true;
    }

    void run_search() {
        // Each round relocates at least one object or invalidates one edge.
        while (!log_.success) {
            const PlanPair plans = plan_both(state_);
            if (!plans[0] && !plans[1]) {
                // The target lost its path (corridors do not bend through
                // vacated spots); clear the nearest obstacle and try again.
                const auto step = nearest_accessible_pair(state_, log_.accessibility_checks);
                if (!step) return fail(MissionFailure::infeasible_instance);
                ++log_.plan_refreshes;
                attempt(step->object, step->robot);
                continue;
            }
            if (log_.expansions >= options_.budget) return fail(MissionFailure::budget_exhausted);

            SearchOptions search;
            search.budget = options_.budget - log_.expansions;
            SearchOutcome outcome = search_allocate(state_, plans, search);
            log_.expansions += outcome.expansions;
            log_.accessibility_checks += outcome.accessibility_checks;
            if (outcome.status == SearchStatus::budget_exhausted) return fail(MissionFailure::budget_exhausted);

            // Without a complete allocation, execute the longest assignable
            // prefix and replan on the emptier scene.
            const std::optional<Allocation>& chosen =
                outcome.status == SearchStatus::found ? outcome.allocation : outcome.deepest_prefix;
            if (!chosen || chosen->assignees.empty()) return fail(MissionFailure::infeasible_instance);
            if (outcome.status != SearchStatus::found) ++log_.plan_refreshes;

            for (std::size_t i = 0; i < chosen->assignees.size(); ++i) {
                if (!attempt(scene_.index_of(chosen->plan.sequence[i]), scene_.robot_index(chosen->assignees[i]))) {
                    break;
                }
            }
        }
    }

    void run_steps() {
        const StepMethod method = options_.method == Method::greedy     ? StepMethod::greedy
                                  : options_.method == Method::distance ? StepMethod::distance
                                                                        : StepMethod::random;
        StepAllocator allocator(method, options_.seed);
        while (!log_.success) {
            const StepResult result = allocator.next(state_);
            log_.accessibility_checks = allocator.accessibility_checks();
            log_.plan_refreshes = allocator.plan_refreshes();
            if (result.status != StepStatus::ready) return fail(MissionFailure::infeasible_instance);
            if (attempt(result.step->object, result.step->robot)) {
                allocator.executed(*result.step);
            } else {
                allocator.replan();
            }
        }
    }

    const Scene& scene_;
    const MissionOptions& options_;
    SceneState state_;
    ObjectIndex target_;
    MissionLog log_;
};

}  // namespace

MissionLog run_mission(const Scene& scene, const MissionOptions& options) {
    return Mission(scene, options).run();
}

ReplayReport replay_mission(const Scene& scene, const MissionLog& log, const FeasibilityOracle& oracle) {
    auto reject = [](std::string why) { return ReplayReport{false, std::move(why)}; };
    SceneState state(scene);
    std::size_t next_failure = 0;
    for (std::size_t i = 0; i <= log.relocations.size(); ++i) {
        for (; next_failure < log.failures.size() && log.failures[next_failure].after_relocations == i;
             ++next_failure) {
            const auto& f = log.failures[next_failure];
            const auto o = scene.find(f.object);
            if (!o || !state.present(*o)) return reject("failure on absent object " + std::to_string(f.object.value));
            const RobotIndex r = scene.robot_index(f.robot);
            if (!accessible(state, r, *o)) {
                return reject("failed attempt on inaccessible pair (" + std::to_string(f.robot.value) + ", " +
                              std::to_string(f.object.value) + ")");
            }
            if (oracle.feasible(state, r, *o)) {
                return reject("oracle accepts recorded failure (" + std::to_string(f.robot.value) + ", " +
                              std::to_string(f.object.value) + ")");
            }
            state.invalidate_edge(r, *o);
        }
        if (i == log.relocations.size()) break;
        const auto& step = log.relocations[i];
        const auto o = scene.find(step.object);
        if (!o || !state.present(*o)) return reject("relocation of absent object " + std::to_string(step.object.value));
        const RobotIndex r = scene.robot_index(step.robot);
        if (!accessible(state, r, *o)) {
            return reject("relocation " + std::to_string(i) + " of object " + std::to_string(step.object.value) +
                          " by robot " + std::to_string(step.robot.value) + " was not accessible");
        }
        if (!oracle.feasible(state, r, *o)) return reject("oracle rejects executed relocation " + std::to_string(i));
        state.remove(*o);
    }
    if (next_failure != log.failures.size()) return reject("failures recorded past the last relocation");
    if (static_cast<std::size_t>(log.replanning_count) != log.failures.size()) {
        return reject("replanning_count differs from the number of failed attempts");
    }
    const ObjectId target = scene.target_id();
    if (log.success && (log.relocations.empty() || log.relocations.back().object != target)) {
        return reject("successful mission does not end with the target");
    }
    for (std::size_t i = 0; i + 1 < log.relocations.size(); ++i) {
        if (log.relocations[i].object == target) return reject("target relocated before the end");
    }
    return {};
}

}  // namespace duet
