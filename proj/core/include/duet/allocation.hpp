#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "duet/scene.hpp"
#include "duet/traversability.hpp"

namespace duet {

/// Robot-node to object-node edge in the robot's T-graph on the current state.
bool accessible(const SceneState& state, RobotIndex robot, ObjectIndex object);

struct TurnTaking {
    int count{0};
    /// 100 * count / (k - 1); absent for k = 1, where no alternation is possible.
    std::optional<double> rate;
};

TurnTaking count_turn_takings(std::span<const RobotId> assignees);

/// Who relocates each entry of `plan`. penalty + turn_takings == k - 1.
struct Allocation {
    RelocationPlan plan;
    std::vector<RobotId> assignees;
    int penalty{0};
    int turn_takings{0};

    friend bool operator==(const Allocation&, const Allocation&) = default;
};

/// Fills penalty and turn_takings from the assignee string.
Allocation make_allocation(RelocationPlan plan, std::vector<RobotId> assignees);

struct SearchOptions {
    /// Node-expansion cap standing in for a wall-clock limit.
    std::size_t budget{100000};
    bool record_trace{false};
};

enum class SearchStatus { found, budget_exhausted, no_feasible_allocation };

struct TraceEntry {
    std::uint64_t gen_index;
    std::size_t depth;
    int g;
};

struct SearchOutcome {
    SearchStatus status{SearchStatus::no_feasible_allocation};
    /// Set iff status == found.
    std::optional<Allocation> allocation;
    /// Deepest assignable prefix seen, with `plan` truncated to match. Lets a
    /// caller execute what is possible and replan on the emptier scene.
    std::optional<Allocation> deepest_prefix;
    std::size_t expansions{0};
    std::size_t generated{0};
    std::size_t accessibility_checks{0};
    /// One entry per expansion when SearchOptions::record_trace is set.
    std::vector<TraceEntry> trace;
};

/// Uniform-cost search over robot assignments for both plans. The root spawns
/// one child per available plan (r_1's first); a node assigns the next plan
/// object to every robot that can access it, paying 1 whenever the same robot
/// acts twice in a row. Equal costs pop in generation order and the goal test
/// happens on expansion, so the result minimises the penalty over both plans.
SearchOutcome search_allocate(const SceneState& state, const PlanPair& plans, const SearchOptions& options = {});

/// Exhaustive 2^k enumeration for each plan; the optimality oracle for
/// search_allocate. nullopt when no assignment string is feasible.
/// Throws InstanceTooLarge when a plan is longer than `max_k`.
std::optional<Allocation> brute_force_allocate(const SceneState& state, const PlanPair& plans,
                                               std::size_t max_k = 12);

}  // namespace duet
