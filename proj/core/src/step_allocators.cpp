#include "duet/step_allocators.hpp"

#include <limits>

namespace duet {

namespace {

// Keeps the coin stream apart from scene generation even when both use the same seed.
constexpr std::uint64_t kCoinStream = 0x9e3779b97f4a7c15ull;

double mount_distance(const Scene& scene, RobotIndex r, ObjectIndex o) {
    return distance(scene.robots[r].mount, scene.objects[o].footprint.center);
}

RobotIndex nearer(const Scene& scene, ObjectIndex o) {
    return mount_distance(scene, 1, o) < mount_distance(scene, 0, o) ? 1 : 0;
}

}  // namespace

StepAllocator::StepAllocator(StepMethod method, std::uint64_t seed) : method_(method), rng_(seed ^ kCoinStream) {}

StepAllocator::StepAllocator(StepMethod method, const Scene& scene, const PlanPair& initial_plans,
                             std::uint64_t seed)
    : StepAllocator(method, seed) {
    adopt(scene, initial_plans);
}

std::optional<RobotIndex> StepAllocator::choose_plan(const Scene& scene, const PlanPair& plans) {
    if (!plans[0] && !plans[1]) return std::nullopt;
    if (!plans[0]) return 1;
    if (!plans[1]) return 0;
    if (plans[0]->k() != plans[1]->k()) return plans[1]->k() < plans[0]->k() ? 1 : 0;
    const double d0 = mount_distance(scene, 0, scene.index_of(plans[0]->sequence.front()));
    const double d1 = mount_distance(scene, 1, scene.index_of(plans[1]->sequence.front()));
    return d1 < d0 ? 1 : 0;
}

bool StepAllocator::adopt(const Scene& scene, const PlanPair& plans) {
    const auto owner = choose_plan(scene, plans);
    if (!owner) {
        plan_.reset();
        return false;
    }
    plan_ = *plans[*owner];
    plan_objects_.clear();
    for (ObjectId id : plan_->sequence) plan_objects_.push_back(scene.index_of(id));
    cursor_ = 0;
    return true;
}

bool StepAllocator::can_access(const SceneState& state, RobotIndex r, ObjectIndex o) {
    ++checks_;
    return accessible(state, r, o);
}

std::optional<Step> nearest_accessible_pair(const SceneState& state, std::size_t& checks) {
    const Scene& scene = state.scene();
    const ObjectIndex target = scene.target_index();
    std::optional<Step> best;
    double best_distance = std::numeric_limits<double>::infinity();
    for (RobotIndex r = 0; r < kRobotCount; ++r) {
        for (ObjectIndex o : state.present_objects()) {
            if (o == target) continue;
            ++checks;
            if (!accessible(state, r, o)) continue;
            const double d = mount_distance(scene, r, o);
            if (d < best_distance) {
                best_distance = d;
                best = Step{o, r, StepRule::fallback_pair};
            }
        }
    }
    return best;
}

StepResult StepAllocator::next(const SceneState& state) {
    const Scene& scene = state.scene();
    bool refreshed = false;
    auto refresh = [&] {
        refreshed = true;
        ++refreshes_;
        return adopt(scene, plan_both(state));
    };

    auto clear_nearest = [&]() -> StepResult {
        auto step = nearest_accessible_pair(state, checks_);
        if (!step) return {};
        step->plan_refreshed = refreshed;
        return {StepStatus::ready, step};
    };

    if (!plan_ || cursor_ >= plan_objects_.size() || !state.present(plan_objects_[cursor_])) {
        if (!refresh()) return clear_nearest();
    }

    for (;;) {
        const ObjectIndex o = plan_objects_[cursor_];
        const std::array<bool, kRobotCount> acc{can_access(state, 0, o), can_access(state, 1, o)};
        std::optional<Step> step;

        if (method_ == StepMethod::greedy) {
            if (!last_) {
                if (acc[0] && acc[1]) {
                    step = Step{o, nearer(scene, o), StepRule::nearest_first};
                } else if (acc[0] || acc[1]) {
                    step = Step{o, acc[0] ? RobotIndex{0} : RobotIndex{1}, StepRule::nearest_first};
                }
            } else {
                const RobotIndex other = 1 - *last_;
                if (acc[other]) {
                    step = Step{o, other, StepRule::alternate};
                } else if (acc[*last_]) {
                    step = Step{o, *last_, StepRule::only_accessible};
                }
            }
            if (!step) step = nearest_accessible_pair(state, checks_);
            if (!step) return {};
        } else {
            if (acc[0] && acc[1]) {
                if (method_ == StepMethod::distance) {
                    step = Step{o, nearer(scene, o), StepRule::nearest};
                } else {
                    step = Step{o, static_cast<RobotIndex>(rng_() >> 63), StepRule::coin};
                }
            } else if (acc[0] || acc[1]) {
                step = Step{o, acc[0] ? RobotIndex{0} : RobotIndex{1}, StepRule::only_accessible};
            } else if (!refreshed) {
                if (!refresh()) return clear_nearest();
                continue;
            } else {
                return clear_nearest();
            }
        }
        step->plan_refreshed = refreshed;
        return {StepStatus::ready, step};
    }
}

void StepAllocator::executed(const Step& step) {
    last_ = step.robot;
    if (plan_ && cursor_ < plan_objects_.size() && plan_objects_[cursor_] == step.object) {
        ++cursor_;
    } else {
        plan_.reset();
    }
}

Allocation StepRun::allocation(const Scene& scene) const {
    RelocationPlan plan;
    std::vector<RobotId> assignees;
    for (const Step& s : steps) {
        plan.sequence.push_back(scene.objects[s.object].id);
        assignees.push_back(scene.robots[s.robot].id);
    }
    if (!steps.empty()) plan.robot = assignees.front();
    return make_allocation(std::move(plan), std::move(assignees));
}

StepRun run_steps(SceneState state, StepAllocator& allocator) {
    StepRun run;
    const ObjectIndex target = state.scene().target_index();
    // Every step removes one object, so this bounds the loop.
    while (state.present(target)) {
        StepResult result = allocator.next(state);
        if (result.status != StepStatus::ready) {
            run.status = result.status;
            return run;
        }
        state.remove(result.step->object);
        allocator.executed(*result.step);
        run.steps.push_back(*result.step);
    }
    run.target_relocated = true;
    return run;
}

StepRun greedy_allocate(const SceneState& state, const PlanPair& plans) {
    StepAllocator allocator(StepMethod::greedy, state.scene(), plans);
    return run_steps(state, allocator);
}

StepRun distance_allocate(const SceneState& state, const PlanPair& plans) {
    StepAllocator allocator(StepMethod::distance, state.scene(), plans);
    return run_steps(state, allocator);
}

StepRun random_allocate(const SceneState& state, const PlanPair& plans, std::uint64_t seed) {
    StepAllocator allocator(StepMethod::random, state.scene(), plans, seed);
    return run_steps(state, allocator);
}

}  // namespace duet
