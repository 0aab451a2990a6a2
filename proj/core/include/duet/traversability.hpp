#pragma once

#include <optional>
#include <span>
#include <vector>

#include "duet/scene.hpp"

namespace duet {

/// True iff a disc of `moving_radius` swept along the straight segment
/// from -> to keeps at least `moving_radius + r_j` from the center of every
/// present object j not listed in `ignore`, and both endpoints lie in the
/// workspace extended through its open front edge (the workspace is convex,
/// so the whole centerline then stays inside).
bool corridor_free(const SceneState& state, Point from, Point to, double moving_radius,
                   std::span<const ObjectIndex> ignore);

/// Robot-object edge of the T-graph: the object is present, its center is
/// within reach, the edge was not invalidated, and the bare gripper fits
/// through the corridor from the mount.
bool robot_object_edge(const SceneState& state, RobotIndex robot, ObjectIndex object);

/// Object-object edge: the gripper carrying the larger of the two endpoint
/// objects fits through the corridor between their centers.
bool object_object_edge(const SceneState& state, ObjectIndex a, ObjectIndex b);

/// Traversability graph of one robot over the current scene state.
/// Node 0 is the robot (located at its mount); node i + 1 is objects[i].
class TGraph {
public:
    TGraph(RobotId robot, std::vector<ObjectIndex> objects, std::vector<ObjectId> ids);

    RobotId robot() const { return robot_; }
    std::size_t node_count() const { return objects_.size() + 1; }
    /// Object at node `node` (node >= 1).
    ObjectIndex object_at(std::size_t node) const { return objects_[node - 1]; }
    ObjectId id_at(std::size_t node) const { return ids_[node - 1]; }
    std::optional<std::size_t> node_of(ObjectId id) const;

    bool has_edge(std::size_t a, std::size_t b) const { return adjacency_[a * node_count() + b] != 0; }
    void set_edge(std::size_t a, std::size_t b);
    /// Neighbours of `node` in increasing node order.
    std::vector<std::size_t> neighbours(std::size_t node) const;
    std::size_t edge_count() const;

private:
    RobotId robot_;
    std::vector<ObjectIndex> objects_;
    std::vector<ObjectId> ids_;
    std::vector<unsigned char> adjacency_;
};

/// O(N^3): N^2 candidate edges, each checked against every present object.
TGraph build_tgraph(const SceneState& state, RobotIndex robot);

/// Objects to relocate, nearest first; the target is always last.
struct RelocationPlan {
    RobotId robot;
    std::vector<ObjectId> sequence;

    std::size_t k() const { return sequence.size(); }
    friend bool operator==(const RelocationPlan&, const RelocationPlan&) = default;
};

/// Hop-count shortest path from the robot node to `target`, excluding the
/// robot node. Among equally short paths the lexicographically smallest
/// object-id sequence wins. nullopt when the target is unreachable.
std::optional<RelocationPlan> orp_plan(const TGraph& graph, ObjectId target);

/// Plan for the current state's target, one slot per robot (r_1 first).
using PlanPair = std::array<std::optional<RelocationPlan>, kRobotCount>;
PlanPair plan_both(const SceneState& state);

}  // namespace duet
