#include "fixtures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "duet/scene_io.hpp"
#include "duet/sequencing.hpp"

namespace duet::fixtures {

std::string data_path(std::string_view file) {
    return std::string(DUET_TEST_DATA_DIR) + "/" + std::string(file);
}

Scene figure_scene(std::string_view name) {
    return load_scene_file(data_path(std::string(name) + ".json"));
}

Scene make_scene(const std::vector<DiscSpec>& objects) {
    Scene s;
    s.robots = GenerationParams::default_robots(s.workspace);
    for (const auto& d : objects) {
        s.objects.push_back(ObjectSpec{ObjectId{d.id}, Disc{{d.x, d.y}, d.r}, d.target});
    }
    validate(s);
    return s;
}

std::vector<Scene> random_scenes(std::uint64_t first_seed, std::size_t count, std::size_t n) {
    GenerationParams p;
    p.n_objects = n;
    std::vector<Scene> out;
    out.reserve(count);
    for (std::uint64_t s = first_seed; out.size() < count; ++s) out.push_back(generate_scene(s, p));
    return out;
}

Allocation random_allocation(const Scene& scene, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(scene.objects.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t k = 1 + rng() % order.size();
    RelocationPlan plan{scene.robots[rng() % 2].id, {}};
    std::vector<RobotId> assignees;
    for (std::size_t i = 0; i < k; ++i) {
        plan.sequence.push_back(scene.objects[order[i]].id);
        assignees.push_back(scene.robots[rng() % 2].id);
    }
    return make_allocation(std::move(plan), std::move(assignees));
}

std::string timeline_violation(const Timeline& timeline, const Allocation& allocation) {
    struct Interval {
        double start, end;
        ActionKind kind;
    };
    std::map<int, std::vector<Interval>> per_robot;
    double last_start = 0.0;
    for (const auto& slot : timeline.slots) {
        if (slot.actions.empty() || slot.actions.size() > 2) return "slot size";
        if (slot.start + 1e-12 < last_start) return "slot starts decrease";
        last_start = slot.start;
        if (slot.actions.size() == 2) {
            const auto& a = slot.actions[0];
            const auto& b = slot.actions[1];
            if (a.robot == b.robot) return "paired slot shares a robot";
            if (a.object && b.object && *a.object == *b.object) return "paired slot shares an object";
        }
        for (const auto& a : slot.actions) {
            if (!(a.duration > 0)) return "non-positive duration";
            if (a.carries_object() != a.object.has_value()) return "object presence";
            per_robot[a.robot.value].push_back({slot.start, slot.start + a.duration, a.kind});
            if (slot.start + a.duration > timeline.makespan + 1e-9) return "action ends after makespan";
        }
    }
    for (auto& [robot, list] : per_robot) {
        for (std::size_t i = 1; i < list.size(); ++i) {
            if (list[i].start + 1e-9 < list[i - 1].end) return "overlap for robot " + std::to_string(robot);
        }
        // exactly one standby between consecutive pick/place actions
        int standbys = -1;
        for (const auto& iv : list) {
            if (iv.kind == ActionKind::standby) {
                if (standbys >= 0) ++standbys;
                continue;
            }
            if (standbys >= 0 && standbys != 1) return "standby count for robot " + std::to_string(robot);
            standbys = 0;
        }
    }
    if (timeline.paired_slots() != static_cast<std::size_t>(allocation.turn_takings)) return "paired slots != t";
    return "";
}

std::vector<int> id_values(const std::vector<ObjectId>& ids) {
    std::vector<int> v;
    for (auto id : ids) v.push_back(id.value);
    return v;
}

std::vector<int> id_values(const std::vector<RobotId>& ids) {
    std::vector<int> v;
    for (auto id : ids) v.push_back(id.value);
    return v;
}

}  // namespace duet::fixtures
