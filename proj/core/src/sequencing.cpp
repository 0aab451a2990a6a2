#include "duet/sequencing.hpp"

#include <algorithm>
#include <array>

namespace duet {

const char* to_string(ActionKind kind) {
    switch (kind) {
        case ActionKind::pick: return "pick";
        case ActionKind::place: return "place";
        case ActionKind::standby: return "standby";
    }
    return "?";
}

double Slot::end() const {
    double e = start;
    for (const auto& a : actions) e = std::max(e, start + a.duration);
    return e;
}

bool Slot::paired() const {
    return actions.size() == 2 && actions[0].carries_object() && actions[1].carries_object();
}

std::size_t Timeline::paired_slots() const {
    return static_cast<std::size_t>(std::count_if(slots.begin(), slots.end(), [](const Slot& s) { return s.paired(); }));
}

std::size_t Timeline::action_count() const {
    std::size_t n = 0;
    for (const auto& s : slots) n += s.actions.size();
    return n;
}

double action_duration(const Scene& scene, RobotIndex robot, Point from, Point to, ActionKind kind) {
    const RobotSpec& spec = scene.robots[robot];
    const double travel = distance(from, to) / spec.speed;
    switch (kind) {
        case ActionKind::pick: return travel + spec.grasp_time;
        case ActionKind::place: return travel + spec.release_time;
        case ActionKind::standby: return travel + spec.standby_time;
    }
    return travel;
}

namespace {

struct RobotTrack {
    Point pose;
    bool needs_standby = false;
    double ready = 0.0;
};

class TimelineBuilder {
public:
    explicit TimelineBuilder(const Scene& scene) : scene_(scene) {
        for (RobotIndex r = 0; r < kRobotCount; ++r) track_[r].pose = scene.robots[r].standby_pose();
    }

    std::size_t open_slot() {
        timeline_.slots.emplace_back();
        return timeline_.slots.size() - 1;
    }

    void add(std::size_t slot, RobotIndex r, ActionKind kind, std::optional<ObjectIndex> object = std::nullopt) {
        const RobotSpec& spec = scene_.robots[r];
        Action a;
        a.kind = kind;
        a.robot = spec.id;
        switch (kind) {
            case ActionKind::pick: a.location = scene_.objects[*object].footprint.center; break;
            case ActionKind::place: a.location = spec.dropoff; break;
            case ActionKind::standby: a.location = spec.standby_pose(); break;
        }
        if (object) a.object = scene_.objects[*object].id;
        a.duration = action_duration(scene_, r, track_[r].pose, a.location, kind);
        track_[r].pose = a.location;
        track_[r].needs_standby = kind != ActionKind::standby;
        timeline_.slots[slot].actions.push_back(a);
        robots_in_slot_.resize(timeline_.slots.size());
        robots_in_slot_[slot].push_back(r);
    }

    bool needs_standby(RobotIndex r) const { return track_[r].needs_standby; }

    Timeline finish() {
        double previous_start = 0.0;
        for (std::size_t i = 0; i < timeline_.slots.size(); ++i) {
            Slot& slot = timeline_.slots[i];
            double start = previous_start;
            for (RobotIndex r : robots_in_slot_[i]) start = std::max(start, track_end_[r]);
            slot.start = start;
            for (std::size_t j = 0; j < slot.actions.size(); ++j) {
                const double end = start + slot.actions[j].duration;
                track_end_[robots_in_slot_[i][j]] = end;
                timeline_.makespan = std::max(timeline_.makespan, end);
            }
            previous_start = start;
        }
        return std::move(timeline_);
    }

private:
    const Scene& scene_;
    std::array<RobotTrack, kRobotCount> track_{};
    std::array<double, kRobotCount> track_end_{};
    std::vector<std::vector<RobotIndex>> robots_in_slot_;
    Timeline timeline_;
};

}  // namespace

Timeline sequence_actions(const Scene& scene, const Allocation& allocation) {
    TimelineBuilder builder(scene);
    const std::size_t k = allocation.assignees.size();
    std::vector<RobotIndex> robots;
    std::vector<ObjectIndex> objects;
    for (std::size_t i = 0; i < k; ++i) {
        robots.push_back(scene.robot_index(allocation.assignees[i]));
        objects.push_back(scene.index_of(allocation.plan.sequence[i]));
    }

    for (std::size_t i = 0; i < k; ++i) {
        const RobotIndex r = robots[i];
        const bool merged = i > 0 && robots[i - 1] != r;
        if (!merged) {
            if (builder.needs_standby(r)) builder.add(builder.open_slot(), r, ActionKind::standby);
            builder.add(builder.open_slot(), r, ActionKind::pick, objects[i]);
        }
        const bool hand_over = i + 1 < k && robots[i + 1] != r;

        const std::size_t standby = builder.open_slot();
        builder.add(standby, r, ActionKind::standby);
        if (hand_over && builder.needs_standby(robots[i + 1])) builder.add(standby, robots[i + 1], ActionKind::standby);

        const std::size_t place = builder.open_slot();
        builder.add(place, r, ActionKind::place, objects[i]);
        if (hand_over) builder.add(place, robots[i + 1], ActionKind::pick, objects[i + 1]);
    }
    return builder.finish();
}

double serialize_baseline_makespan(const Scene& scene, const Allocation& allocation) {
    const Timeline timeline = sequence_actions(scene, allocation);
    double total = 0.0;
    for (const auto& slot : timeline.slots) {
        for (const auto& a : slot.actions) total += a.duration;
    }
    return total;
}

}  // namespace duet
