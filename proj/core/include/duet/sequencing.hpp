#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "duet/allocation.hpp"
#include "duet/scene.hpp"

namespace duet {

enum class ActionKind { pick, place, standby };

const char* to_string(ActionKind kind);

struct Action {
    ActionKind kind{ActionKind::standby};
    RobotId robot;
    /// Goal of the motion: object center (pick), dropoff (place) or standby pose.
    Point location;
    std::optional<ObjectId> object;
    double duration{0.0};

    bool carries_object() const { return kind != ActionKind::standby; }
};

/// One or two actions of different robots that start together; their end
/// times are free.
struct Slot {
    double start{0.0};
    std::vector<Action> actions;

    double end() const;
    /// A pick of one robot running alongside a place of the other.
    bool paired() const;
};

struct Timeline {
    std::vector<Slot> slots;
    double makespan{0.0};

    std::size_t paired_slots() const;
    std::size_t action_count() const;
};

/// Travel time at the robot's speed plus the fixed cost of the primitive.
double action_duration(const Scene& scene, RobotIndex robot, Point from, Point to, ActionKind kind);

/// Expands each relocation into pick, standby, place for its robot, inserts a
/// standby between every two consecutive pick/place of the same robot, and runs
/// the pick of task i + 1 alongside the place of task i whenever the two tasks
/// belong to different robots. Slot start = max(previous slot start, end of the
/// previous action of every robot in the slot). Makespan = latest action end.
Timeline sequence_actions(const Scene& scene, const Allocation& allocation);

/// The same actions executed one after another with no overlap.
double serialize_baseline_makespan(const Scene& scene, const Allocation& allocation);

}  // namespace duet
