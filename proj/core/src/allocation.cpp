#include "duet/allocation.hpp"

#include <string>

#include "duet/errors.hpp"

namespace duet {

bool accessible(const SceneState& state, RobotIndex robot, ObjectIndex object) {
    return robot_object_edge(state, robot, object);
}

TurnTaking count_turn_takings(std::span<const RobotId> assignees) {
    TurnTaking out;
    for (std::size_t i = 1; i < assignees.size(); ++i) {
        if (assignees[i] != assignees[i - 1]) ++out.count;
    }
    if (assignees.size() >= 2) {
        out.rate = 100.0 * out.count / static_cast<double>(assignees.size() - 1);
    }
    return out;
}

Allocation make_allocation(RelocationPlan plan, std::vector<RobotId> assignees) {
    Allocation a{std::move(plan), std::move(assignees), 0, 0};
    a.turn_takings = count_turn_takings(a.assignees).count;
    a.penalty = a.assignees.empty() ? 0 : static_cast<int>(a.assignees.size()) - 1 - a.turn_takings;
    return a;
}

std::optional<Allocation> brute_force_allocate(const SceneState& state, const PlanPair& plans, std::size_t max_k) {
    const Scene& scene = state.scene();
    std::optional<Allocation> best;
    for (RobotIndex owner = 0; owner < kRobotCount; ++owner) {
        if (!plans[owner]) continue;
        const RelocationPlan& plan = *plans[owner];
        const std::size_t k = plan.k();
        if (k > max_k) {
            throw InstanceTooLarge("plan of robot " + std::to_string(plan.robot.value) + " has k = " +
                                   std::to_string(k) + " > " + std::to_string(max_k));
        }
        // Bit (k - 1 - i) of `code` selects the robot for step i, so counting
        // up visits assignment strings in lexicographic order with r_1 < r_2.
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
            SceneState replay = state;
            std::vector<RobotId> assignees;
            bool feasible = true;
            for (std::size_t i = 0; i < k && feasible; ++i) {
                const RobotIndex r = (code >> (k - 1 - i)) & 1u;
                const ObjectIndex o = scene.index_of(plan.sequence[i]);
                feasible = accessible(replay, r, o);
                replay.remove(o);
                assignees.push_back(scene.robots[r].id);
            }
            if (!feasible) continue;
            Allocation candidate = make_allocation(plan, std::move(assignees));
            if (!best || candidate.penalty < best->penalty) best = std::move(candidate);
        }
    }
    return best;
}

}  // namespace duet
