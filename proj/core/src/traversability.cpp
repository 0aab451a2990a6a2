#include "duet/traversability.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace duet {

bool corridor_free(const SceneState& state, Point from, Point to, double moving_radius,
                   std::span<const ObjectIndex> ignore) {
    const Scene& scene = state.scene();
    if (!scene.workspace.contains_with_front_opening(from) || !scene.workspace.contains_with_front_opening(to)) {
        return false;
    }
    for (ObjectIndex j = 0; j < scene.objects.size(); ++j) {
        if (!state.present(j) || std::find(ignore.begin(), ignore.end(), j) != ignore.end()) continue;
        const Disc& d = scene.objects[j].footprint;
        if (segment_point_distance(from, to, d.center) < moving_radius + d.radius) return false;
    }
    return true;
}

bool robot_object_edge(const SceneState& state, RobotIndex robot, ObjectIndex object) {
    if (!state.present(object) || state.edge_invalidated(robot, object)) return false;
    const Scene& scene = state.scene();
    const RobotSpec& spec = scene.robots[robot];
    const Point c = scene.objects[object].footprint.center;
    if (!spec.reaches(c)) return false;
    const ObjectIndex ignore[] = {object};
    return corridor_free(state, spec.mount, c, scene.gripper_radius, ignore);
}

bool object_object_edge(const SceneState& state, ObjectIndex a, ObjectIndex b) {
    const Scene& scene = state.scene();
    const Disc& da = scene.objects[a].footprint;
    const Disc& db = scene.objects[b].footprint;
    const ObjectIndex ignore[] = {a, b};
    return corridor_free(state, da.center, db.center, scene.gripper_radius + std::max(da.radius, db.radius), ignore);
}

TGraph::TGraph(RobotId robot, std::vector<ObjectIndex> objects, std::vector<ObjectId> ids)
    : robot_(robot), objects_(std::move(objects)), ids_(std::move(ids)) {
    adjacency_.assign(node_count() * node_count(), 0);
}

std::optional<std::size_t> TGraph::node_of(ObjectId id) const {
    auto it = std::find(ids_.begin(), ids_.end(), id);
    if (it == ids_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin()) + 1;
}

void TGraph::set_edge(std::size_t a, std::size_t b) {
    if (a == b) return;
    adjacency_[a * node_count() + b] = 1;
    adjacency_[b * node_count() + a] = 1;
}

std::vector<std::size_t> TGraph::neighbours(std::size_t node) const {
    std::vector<std::size_t> out;
    for (std::size_t other = 0; other < node_count(); ++other) {
        if (has_edge(node, other)) out.push_back(other);
    }
    return out;
}

std::size_t TGraph::edge_count() const {
    return static_cast<std::size_t>(std::count(adjacency_.begin(), adjacency_.end(), 1)) / 2;
}

TGraph build_tgraph(const SceneState& state, RobotIndex robot) {
    const Scene& scene = state.scene();
    std::vector<ObjectIndex> objects = state.present_objects();
    std::vector<ObjectId> ids;
    ids.reserve(objects.size());
    for (ObjectIndex i : objects) ids.push_back(scene.objects[i].id);

    TGraph graph(scene.robots[robot].id, objects, std::move(ids));
    for (std::size_t a = 0; a < objects.size(); ++a) {
        if (robot_object_edge(state, robot, objects[a])) graph.set_edge(0, a + 1);
        for (std::size_t b = a + 1; b < objects.size(); ++b) {
            if (object_object_edge(state, objects[a], objects[b])) graph.set_edge(a + 1, b + 1);
        }
    }
    return graph;
}

std::optional<RelocationPlan> orp_plan(const TGraph& graph, ObjectId target) {
    const auto goal = graph.node_of(target);
    if (!goal) return std::nullopt;

    constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> hops(graph.node_count(), kUnreached);
    std::deque<std::size_t> queue{*goal};
    hops[*goal] = 0;
    while (!queue.empty()) {
        const std::size_t node = queue.front();
        queue.pop_front();
        for (std::size_t next : graph.neighbours(node)) {
            if (hops[next] == kUnreached) {
                hops[next] = hops[node] + 1;
                queue.push_back(next);
            }
        }
    }
    if (hops[0] == kUnreached) return std::nullopt;

    // Walking down the distance field and always taking the smallest id
    // yields the lexicographically smallest shortest path.
    RelocationPlan plan{graph.robot(), {}};
    std::size_t node = 0;
    while (node != *goal) {
        std::optional<std::size_t> best;
        for (std::size_t next : graph.neighbours(node)) {
            if (next == 0 || hops[next] + 1 != hops[node]) continue;
            if (!best || graph.id_at(next) < graph.id_at(*best)) best = next;
        }
        node = *best;
        plan.sequence.push_back(graph.id_at(node));
    }
    return plan;
}

PlanPair plan_both(const SceneState& state) {
    const Scene& scene = state.scene();
    const ObjectId target = scene.target_id();
    PlanPair plans;
    for (RobotIndex r = 0; r < kRobotCount; ++r) {
        plans[r] = orp_plan(build_tgraph(state, r), target);
    }
    return plans;
}

}  // namespace duet
