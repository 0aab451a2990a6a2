#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <queue>
#include <tuple>

#include "duet/allocation.hpp"

namespace duet {

namespace {

constexpr RobotIndex kNoRobot = kRobotCount;
constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

// Nodes live in an arena indexed by generation order, so the arena index is
// the FIFO tie-break key and prefixes are recovered through parent links.
struct SearchNode {
    RobotIndex plan_choice;  // owner of the adopted plan; kNoRobot at the root
    std::size_t depth;       // root 0, plan choice 1, first relocation 2
    RobotIndex assignee;     // robot that relocated at this node
    std::size_t parent;
    int g;
};

// Accessibility depends only on which plan prefix has been removed, not on
// who removed it, so it is evaluated once per (plan, step).
class AccessTable {
public:
    AccessTable(const SceneState& state, const PlanPair& plans) : state_(state), plans_(plans) {
        for (RobotIndex p = 0; p < kRobotCount; ++p) {
            if (plans[p]) rows_[p].resize(plans[p]->k());
        }
    }

    bool accessible_at(RobotIndex plan, std::size_t step, RobotIndex robot) {
        auto& row = rows_[plan][step];
        if (!row) {
            const Scene& scene = state_.scene();
            SceneState s = state_;
            for (std::size_t i = 0; i < step; ++i) s.remove(scene.index_of(plans_[plan]->sequence[i]));
            const ObjectIndex o = scene.index_of(plans_[plan]->sequence[step]);
            row = std::array<bool, kRobotCount>{accessible(s, 0, o), accessible(s, 1, o)};
            checks_ += kRobotCount;
        }
        return (*row)[robot];
    }

    std::size_t checks() const { return checks_; }

private:
    const SceneState& state_;
    const PlanPair& plans_;
    std::array<std::vector<std::optional<std::array<bool, kRobotCount>>>, kRobotCount> rows_;
    std::size_t checks_ = 0;
};

Allocation prefix_allocation(const Scene& scene, const std::vector<SearchNode>& arena, std::size_t leaf,
                             const PlanPair& plans) {
    std::vector<RobotId> assignees;
    for (std::size_t n = leaf; arena[n].depth >= 2; n = arena[n].parent) {
        assignees.push_back(scene.robots[arena[n].assignee].id);
    }
    std::reverse(assignees.begin(), assignees.end());
    RelocationPlan plan = *plans[arena[leaf].plan_choice];
    plan.sequence.resize(assignees.size());
    return make_allocation(std::move(plan), std::move(assignees));
}

}  // namespace

SearchOutcome search_allocate(const SceneState& state, const PlanPair& plans, const SearchOptions& options) {
    const Scene& scene = state.scene();
    SearchOutcome out;
    AccessTable access(state, plans);

    std::vector<SearchNode> arena;
    using Key = std::tuple<int, std::size_t>;  // (g, generation index)
    std::priority_queue<Key, std::vector<Key>, std::greater<>> frontier;
    std::optional<std::size_t> deepest;

    auto generate = [&](SearchNode node) {
        arena.push_back(node);
        const std::size_t idx = arena.size() - 1;
        frontier.emplace(node.g, idx);
        if (node.depth >= 2) {
            const auto& best = deepest ? arena[*deepest] : node;
            if (!deepest || node.depth > best.depth || (node.depth == best.depth && node.g < best.g)) {
                deepest = idx;
            }
        }
    };

    generate({kNoRobot, 0, kNoRobot, kNoParent, 0});
    while (!frontier.empty()) {
        const auto [g, idx] = frontier.top();
        const SearchNode node = arena[idx];
        if (node.depth >= 1 && node.depth - 1 == plans[node.plan_choice]->k()) {
            frontier.pop();
            out.status = SearchStatus::found;
            out.allocation = prefix_allocation(scene, arena, idx, plans);
            break;
        }
        if (out.expansions >= options.budget) {
            out.status = SearchStatus::budget_exhausted;
            break;
        }
        frontier.pop();
        ++out.expansions;
        if (options.record_trace) out.trace.push_back({idx, node.depth, g});

        if (node.depth == 0) {
            for (RobotIndex p = 0; p < kRobotCount; ++p) {
                if (plans[p]) generate({p, 1, kNoRobot, idx, 0});
            }
            continue;
        }
        const std::size_t step = node.depth - 1;
        for (RobotIndex r = 0; r < kRobotCount; ++r) {
            if (!access.accessible_at(node.plan_choice, step, r)) continue;
            const int cost = (node.depth >= 2 && node.assignee == r) ? 1 : 0;
            generate({node.plan_choice, node.depth + 1, r, idx, g + cost});
        }
    }

    out.generated = arena.size();
    out.accessibility_checks = access.checks();
    if (deepest) out.deepest_prefix = prefix_allocation(scene, arena, *deepest, plans);
    return out;
}

}  // namespace duet
