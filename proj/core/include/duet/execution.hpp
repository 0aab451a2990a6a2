#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "duet/allocation.hpp"
#include "duet/scene.hpp"
#include "duet/sequencing.hpp"

namespace duet {

/// Stand-in for arm motion planning: decides whether a robot can actually
/// carry out the relocation of an object from the current scene state.
class FeasibilityOracle {
public:
    enum class Mode { always_feasible, blacklist, seeded_random };
    using Pair = std::pair<RobotId, ObjectId>;

    FeasibilityOracle() = default;
    static FeasibilityOracle always_feasible() { return {}; }
    static FeasibilityOracle with_blacklist(std::set<Pair> pairs);
    /// Each distinct (robot, object, scene state) fails with probability `p_fail`.
    static FeasibilityOracle seeded_random(double p_fail, std::uint64_t seed);

    /// Deterministic for a given configuration.
    bool feasible(const SceneState& state, RobotIndex robot, ObjectIndex object) const;

    Mode mode() const { return mode_; }
    const std::set<Pair>& blacklist() const { return blacklist_; }
    double p_fail() const { return p_fail_; }
    std::uint64_t seed() const { return seed_; }

private:
    Mode mode_ = Mode::always_feasible;
    std::set<Pair> blacklist_;
    double p_fail_ = 0.0;
    std::uint64_t seed_ = 0;
};

enum class Method { search, greedy, distance, random };

const char* to_string(Method method);
/// Throws InvalidParameters on an unknown name.
Method method_from_string(const std::string& name);

enum class MissionFailure { none, infeasible_instance, budget_exhausted };

const char* to_string(MissionFailure failure);

struct Relocation {
    ObjectId object;
    RobotId robot;

    friend bool operator==(const Relocation&, const Relocation&) = default;
};

/// An attempt the oracle rejected, made after `after_relocations` successes.
struct FailedAttempt {
    ObjectId object;
    RobotId robot;
    std::size_t after_relocations{0};

    friend bool operator==(const FailedAttempt&, const FailedAttempt&) = default;
};

struct MissionLog {
    Method method{Method::search};
    std::vector<Relocation> relocations;
    std::vector<FailedAttempt> failures;
    int replanning_count{0};
    bool success{false};
    MissionFailure failure{MissionFailure::none};
    /// Makespan of the executed relocations under the action timing model.
    double makespan{0.0};
    TurnTaking turn_taking;

    std::size_t expansions{0};
    std::size_t accessibility_checks{0};
    std::size_t oracle_calls{0};
    /// Relocation plans recomputed because execution drifted from them.
    std::size_t plan_refreshes{0};
    /// Wall clock; excluded from every deterministic output.
    double planning_seconds{0.0};

    /// Machine-independent planning cost.
    std::size_t planning_work() const { return expansions + accessibility_checks + oracle_calls; }

    /// Executed relocations as an Allocation (plan owner = first actor).
    Allocation executed_allocation() const;
};

struct MissionOptions {
    Method method{Method::search};
    FeasibilityOracle oracle;
    /// Search node expansions allowed over the whole mission.
    std::size_t budget{100000};
    /// Coin stream for Method::random.
    std::uint64_t seed{0};
};

/// Plan, allocate, check every task with the oracle in order, and on the
/// first failure invalidate that robot's edge to that object and replan from
/// the current scene. Ends when the target is relocated, when no plan is left
/// (infeasible_instance) or when the search budget runs out.
MissionLog run_mission(const Scene& scene, const MissionOptions& options);

struct ReplayReport {
    bool ok{true};
    std::string message;
};

/// Re-executes the log on a fresh copy of the scene: every failure must be an
/// accessible pair the oracle rejects, every relocation must be accessible when
/// executed, a successful log must end with the target, and the failure count
/// must equal replanning_count.
ReplayReport replay_mission(const Scene& scene, const MissionLog& log, const FeasibilityOracle& oracle);

}  // namespace duet
