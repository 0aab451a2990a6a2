#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "duet/allocation.hpp"

namespace duet {

/// Online allocators that choose one (object, robot) pair at a time.
///   greedy   - alternate robots whenever the next object allows it
///   distance - nearer mount when both robots can access the object
///   random   - seeded fair coin when both robots can access the object
enum class StepMethod { greedy, distance, random };

/// Which rule produced a step.
enum class StepRule {
    nearest_first,   // greedy, first step: nearer accessible robot
    alternate,       // greedy: the robot that did not act last
    only_accessible, // the single robot able to reach the object
    fallback_pair,   // greedy: no robot reaches the plan object; nearest accessible (robot, object) pair
    nearest,         // distance: both reach; nearer mount
    coin,            // random: both reach; coin flip
};

struct Step {
    ObjectIndex object;
    RobotIndex robot;
    StepRule rule;
    /// The relocation plan was recomputed on the current state before this step.
    bool plan_refreshed{false};
};

enum class StepStatus { ready, no_accessible_object };

struct StepResult {
    StepStatus status{StepStatus::no_accessible_object};
    std::optional<Step> step;
};

/// Steps are proposed with next() and confirmed with executed(); a proposal
/// that turns out to be unexecutable is dropped with replan(). The allocator
/// consumes the shorter of the two relocation plans (on equal length, the plan
/// whose robot mount is nearer its first object) and recomputes plans on the
/// current state whenever it strays from them. When neither robot has a plan
/// left, every method clears the nearest accessible obstacle and replans.
class StepAllocator {
public:
    explicit StepAllocator(StepMethod method, std::uint64_t seed = 0);
    StepAllocator(StepMethod method, const Scene& scene, const PlanPair& initial_plans, std::uint64_t seed = 0);

    /// Does not modify `state`; the caller removes the object after executing it.
    StepResult next(const SceneState& state);
    void executed(const Step& step);
    void replan() { plan_.reset(); }

    StepMethod method() const { return method_; }
    const std::optional<RelocationPlan>& current_plan() const { return plan_; }
    std::optional<RobotIndex> last_robot() const { return last_; }
    std::size_t accessibility_checks() const { return checks_; }
    std::size_t plan_refreshes() const { return refreshes_; }

    /// Choice rule between the two robots' plans; nullopt if both are absent.
    static std::optional<RobotIndex> choose_plan(const Scene& scene, const PlanPair& plans);

private:
    bool adopt(const Scene& scene, const PlanPair& plans);
    bool can_access(const SceneState& state, RobotIndex r, ObjectIndex o);

    StepMethod method_;
    std::mt19937_64 rng_;
    std::optional<RelocationPlan> plan_;
    std::vector<ObjectIndex> plan_objects_;
    std::size_t cursor_ = 0;
    std::optional<RobotIndex> last_;
    std::size_t checks_ = 0;
    std::size_t refreshes_ = 0;
};

/// Nearest (mount-to-center) accessible pair over both robots and every
/// present non-target object; ties go to r_1, then to the lower object index.
/// `checks` accumulates the accessibility evaluations performed.
std::optional<Step> nearest_accessible_pair(const SceneState& state, std::size_t& checks);

/// Runs an allocator to completion on a copy of `state`, assuming every
/// proposed step succeeds.
struct StepRun {
    StepStatus status{StepStatus::ready};
    std::vector<Step> steps;
    bool target_relocated{false};

    /// The executed object sequence and its assignees as an Allocation.
    Allocation allocation(const Scene& scene) const;
};

StepRun run_steps(SceneState state, StepAllocator& allocator);

StepRun greedy_allocate(const SceneState& state, const PlanPair& plans);
StepRun distance_allocate(const SceneState& state, const PlanPair& plans);
StepRun random_allocate(const SceneState& state, const PlanPair& plans, std::uint64_t seed);

}  // namespace duet
