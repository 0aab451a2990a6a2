#include "duet/oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <queue>

namespace duet::oracles {

double sampled_clearance(const SceneState& state, Point from, Point to, double moving_radius,
                         std::span<const ObjectIndex> ignore, std::size_t samples) {
    const Scene& scene = state.scene();
    double best = std::numeric_limits<double>::infinity();
    for (ObjectIndex j = 0; j < scene.objects.size(); ++j) {
        if (!state.present(j) || std::find(ignore.begin(), ignore.end(), j) != ignore.end()) continue;
        const Disc& d = scene.objects[j].footprint;
        for (std::size_t s = 0; s < samples; ++s) {
            const double u = samples == 1 ? 0.0 : static_cast<double>(s) / static_cast<double>(samples - 1);
            const Point p{from.x + u * (to.x - from.x), from.y + u * (to.y - from.y)};
            best = std::min(best, std::hypot(p.x - d.center.x, p.y - d.center.y) - (moving_radius + d.radius));
        }
    }
    return best;
}

double analytic_clearance(const SceneState& state, Point from, Point to, double moving_radius,
                          std::span<const ObjectIndex> ignore) {
    const Scene& scene = state.scene();
    double best = std::numeric_limits<double>::infinity();
    for (ObjectIndex j = 0; j < scene.objects.size(); ++j) {
        if (!state.present(j) || std::find(ignore.begin(), ignore.end(), j) != ignore.end()) continue;
        const Disc& d = scene.objects[j].footprint;
        best = std::min(best, segment_point_distance(from, to, d.center) - (moving_radius + d.radius));
    }
    return best;
}

std::optional<std::size_t> min_plan_length_by_enumeration(const TGraph& graph, ObjectId target) {
    const auto goal = graph.node_of(target);
    if (!goal) return std::nullopt;
    std::optional<std::size_t> best;
    std::vector<bool> on_path(graph.node_count(), false);
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t node, std::size_t hops) {
        if (node == *goal) {
            if (!best || hops < *best) best = hops;
            return;
        }
        on_path[node] = true;
        for (std::size_t next = 0; next < graph.node_count(); ++next) {
            if (!on_path[next] && graph.has_edge(node, next)) walk(next, hops + 1);
        }
        on_path[node] = false;
    };
    walk(0, 0);
    return best;
}

bool retrievable(const Scene& scene) {
    SceneState state(scene);
    auto reachable = [&](ObjectIndex o) {
        const Point c = scene.objects[o].footprint.center;
        for (const auto& robot : scene.robots) {
            if (distance(robot.mount, c) > robot.reach_radius) continue;
            const ObjectIndex self[] = {o};
            if (analytic_clearance(state, robot.mount, c, scene.gripper_radius, self) >= 0.0) return true;
        }
        return false;
    };
    for (bool changed = true; changed;) {
        changed = false;
        if (reachable(scene.target_index())) return true;
        for (ObjectIndex o = 0; o < scene.objects.size(); ++o) {
            if (state.present(o) && o != scene.target_index() && reachable(o)) {
                state.remove(o);
                changed = true;
            }
        }
    }
    return false;
}

double replay_makespan(const Timeline& timeline) {
    struct Event {
        double time;
        std::size_t seq;
        int robot;
    };
    auto later = [](const Event& a, const Event& b) { return a.time != b.time ? a.time > b.time : a.seq > b.seq; };
    std::priority_queue<Event, std::vector<Event>, decltype(later)> events(later);

    std::map<int, bool> busy;
    double now = 0.0;
    double last_completion = 0.0;
    std::size_t seq = 0;
    std::size_t next_slot = 0;
    double last_release = 0.0;

    while (next_slot < timeline.slots.size() || !events.empty()) {
        if (next_slot < timeline.slots.size()) {
            const Slot& slot = timeline.slots[next_slot];
            const bool free = std::none_of(slot.actions.begin(), slot.actions.end(),
                                           [&](const Action& a) { return busy[a.robot.value]; });
            if (free) {
                const double start = std::max(now, last_release);
                for (const Action& a : slot.actions) {
                    busy[a.robot.value] = true;
                    events.push({start + a.duration, seq++, a.robot.value});
                }
                last_release = start;
                ++next_slot;
                continue;
            }
        }
        // Advance to the next completion; simultaneous completions are
        // drained together before any slot is released.
        const double t = events.top().time;
        while (!events.empty() && events.top().time == t) {
            busy[events.top().robot] = false;
            events.pop();
        }
        now = t;
        last_completion = std::max(last_completion, t);
    }
    return last_completion;
}

}  // namespace duet::oracles
