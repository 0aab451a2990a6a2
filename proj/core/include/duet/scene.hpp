#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "duet/geometry.hpp"
#include "duet/ids.hpp"

namespace duet {

/// Position of an object inside Scene::objects.
using ObjectIndex = std::size_t;
/// Position of a robot inside Scene::robots; 0 is r_1, 1 is r_2.
using RobotIndex = std::size_t;

inline constexpr std::size_t kRobotCount = 2;

struct ObjectSpec {
    ObjectId id;
    Disc footprint;
    bool is_target{false};

    friend bool operator==(const ObjectSpec&, const ObjectSpec&) = default;
};

/// A fixed-base arm: a gripper disc that moves in the plane within
/// `reach_radius` of `mount`, carrying objects out to `dropoff`.
struct RobotSpec {
    RobotId id;
    Point mount;
    double reach_radius{700.0};
    Point dropoff;
    double speed{100.0};        // mm/s
    double grasp_time{2.0};     // s
    double release_time{2.0};   // s
    double standby_time{1.0};   // s

    /// Every pick and place starts from here.
    Point standby_pose() const { return mount; }
    bool reaches(Point p) const { return distance(mount, p) <= reach_radius; }

    friend bool operator==(const RobotSpec&, const RobotSpec&) = default;
};

struct Scene {
    Workspace workspace;
    double gripper_radius{40.0};
    std::vector<ObjectSpec> objects;
    std::array<RobotSpec, kRobotCount> robots;

    ObjectIndex target_index() const;
    ObjectId target_id() const { return objects[target_index()].id; }
    /// Throws InvalidParameters if no object carries `id`.
    ObjectIndex index_of(ObjectId id) const;
    std::optional<ObjectIndex> find(ObjectId id) const;
    RobotIndex robot_index(RobotId id) const;

    friend bool operator==(const Scene&, const Scene&) = default;
};

/// Throws InvariantViolation naming the first broken scene invariant:
/// "object count", "exactly one target", "unique ids", "radius", "finite",
/// "inside workspace", "overlap", "robot", "dropoff", "timing", "target reach".
void validate(const Scene& scene);

/// A scene with some objects already carried away and some robot-object
/// edges declared unusable. Holds a pointer to the scene, which must outlive it.
class SceneState {
public:
    explicit SceneState(const Scene& scene);

    const Scene& scene() const { return *scene_; }

    bool present(ObjectIndex i) const { return !removed_[i]; }
    void remove(ObjectIndex i);
    std::size_t remaining() const { return remaining_; }
    std::vector<ObjectIndex> present_objects() const;

    bool edge_invalidated(RobotIndex r, ObjectIndex i) const { return invalid_[r][i]; }
    void invalidate_edge(RobotIndex r, ObjectIndex i) { invalid_[r][i] = true; }

    friend bool operator==(const SceneState& a, const SceneState& b) {
        return a.scene_ == b.scene_ && a.removed_ == b.removed_ && a.invalid_ == b.invalid_;
    }

private:
    const Scene* scene_;
    std::vector<bool> removed_;
    std::array<std::vector<bool>, kRobotCount> invalid_;
    std::size_t remaining_;
};

/// Inputs to generate_scene. Defaults describe the 1100 x 500 mm shelf with two
/// arms entering through its open front edge at 0.4 and 0.6 of the width.
struct GenerationParams {
    std::size_t n_objects{12};
    double radius_min{25.0};
    double radius_max{45.0};
    double gripper_radius{40.0};
    Workspace workspace{};
    std::array<RobotSpec, kRobotCount> robots = default_robots(Workspace{});
    std::size_t max_consecutive_rejections{10000};

    static constexpr double kDefaultMountFraction = 0.4;

    // Mounts at (f*w, 0) and ((1-f)*w, 0); dropoffs 250 mm in front of each.
    static std::array<RobotSpec, kRobotCount> default_robots(const Workspace& ws,
                                                             double mount_fraction = kDefaultMountFraction);
};

/// Uniform rejection sampling of non-overlapping discs, then a uniform target
/// among objects reachable by both arms. Pure in (seed, params).
/// Throws InvalidParameters or GenerationFailure.
Scene generate_scene(std::uint64_t seed, const GenerationParams& params);

}  // namespace duet
