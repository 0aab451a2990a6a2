#include "duet/scene.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "duet/errors.hpp"

namespace duet {

namespace {

// Top 53 bits of the engine output mapped onto [0, 1); unlike
// std::uniform_real_distribution this is identical across standard libraries.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * unit_draw(rng); }

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
    return std::min(n - 1, static_cast<std::size_t>(unit_draw(rng) * static_cast<double>(n)));
}

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

ObjectIndex Scene::target_index() const {
    for (ObjectIndex i = 0; i < objects.size(); ++i) {
        if (objects[i].is_target) return i;
    }
    throw InvariantViolation("exactly one target", "scene has no target object");
}

std::optional<ObjectIndex> Scene::find(ObjectId id) const {
    for (ObjectIndex i = 0; i < objects.size(); ++i) {
        if (objects[i].id == id) return i;
    }
    return std::nullopt;
}

ObjectIndex Scene::index_of(ObjectId id) const {
    if (auto i = find(id)) return *i;
    throw InvalidParameters("unknown object id " + std::to_string(id.value));
}

RobotIndex Scene::robot_index(RobotId id) const {
    for (RobotIndex r = 0; r < kRobotCount; ++r) {
        if (robots[r].id == id) return r;
    }
    throw InvalidParameters("unknown robot id " + std::to_string(id.value));
}

void validate(const Scene& scene) {
    const auto& ws = scene.workspace;
    if (!positive_finite(ws.width) || !positive_finite(ws.height)) {
        throw InvariantViolation("workspace", "width and height must be positive");
    }
    if (!positive_finite(scene.gripper_radius)) {
        throw InvariantViolation("gripper", "gripper_radius must be positive");
    }
    if (scene.objects.size() < 2) {
        throw InvariantViolation("object count", "a scene needs at least 2 objects");
    }
    const auto targets = std::count_if(scene.objects.begin(), scene.objects.end(),
                                       [](const ObjectSpec& o) { return o.is_target; });
    if (targets != 1) {
        throw InvariantViolation("exactly one target",
                                 "found " + std::to_string(targets) + " target objects");
    }
    std::set<ObjectId> ids;
    for (const auto& o : scene.objects) {
        if (!ids.insert(o.id).second) {
            throw InvariantViolation("unique ids", "duplicate object id " + std::to_string(o.id.value));
        }
        if (!is_finite(o.footprint.center)) {
            throw InvariantViolation("finite", "object " + std::to_string(o.id.value) + " has a non-finite center");
        }
        if (!positive_finite(o.footprint.radius)) {
            throw InvariantViolation("radius", "object " + std::to_string(o.id.value) + " radius must be > 0");
        }
        if (!ws.contains(o.footprint.center)) {
            throw InvariantViolation("inside workspace",
                                     "object " + std::to_string(o.id.value) + " center lies outside the workspace");
        }
    }
    for (std::size_t i = 0; i < scene.objects.size(); ++i) {
        for (std::size_t j = i + 1; j < scene.objects.size(); ++j) {
            if (!discs_disjoint(scene.objects[i].footprint, scene.objects[j].footprint)) {
                throw InvariantViolation("overlap", "objects " + std::to_string(scene.objects[i].id.value) + " and " +
                                                        std::to_string(scene.objects[j].id.value) + " overlap");
            }
        }
    }
    if (scene.robots[0].id == scene.robots[1].id) {
        throw InvariantViolation("robot", "robot ids must differ");
    }
    for (const auto& r : scene.robots) {
        const std::string name = "robot " + std::to_string(r.id.value);
        if (!is_finite(r.mount) || !is_finite(r.dropoff)) {
            throw InvariantViolation("finite", name + " has a non-finite point");
        }
        if (!positive_finite(r.reach_radius)) {
            throw InvariantViolation("robot", name + " reach_radius must be > 0");
        }
        if (ws.contains(r.dropoff)) {
            throw InvariantViolation("dropoff", name + " dropoff must lie strictly outside the workspace");
        }
        if (!positive_finite(r.speed) || !positive_finite(r.grasp_time) || !positive_finite(r.release_time) ||
            !positive_finite(r.standby_time)) {
            throw InvariantViolation("timing", name + " speed and timings must be > 0");
        }
    }
    const Point target = scene.objects[scene.target_index()].footprint.center;
    for (const auto& r : scene.robots) {
        if (!r.reaches(target)) {
            throw InvariantViolation("target reach",
                                     "target lies outside the reach of robot " + std::to_string(r.id.value));
        }
    }
}

SceneState::SceneState(const Scene& scene)
    : scene_(&scene),
      removed_(scene.objects.size(), false),
      invalid_{std::vector<bool>(scene.objects.size(), false), std::vector<bool>(scene.objects.size(), false)},
      remaining_(scene.objects.size()) {}

void SceneState::remove(ObjectIndex i) {
    if (!removed_[i]) {
        removed_[i] = true;
        --remaining_;
    }
}

std::vector<ObjectIndex> SceneState::present_objects() const {
    std::vector<ObjectIndex> out;
    out.reserve(remaining_);
    for (ObjectIndex i = 0; i < removed_.size(); ++i) {
        if (!removed_[i]) out.push_back(i);
    }
    return out;
}

std::array<RobotSpec, kRobotCount> GenerationParams::default_robots(const Workspace& ws, double mount_fraction) {
    if (!(mount_fraction >= 0.0 && mount_fraction <= 0.5)) {
        throw InvalidParameters("mount_fraction must lie in [0, 0.5]");
    }
    RobotSpec left;
    left.id = RobotId{1};
    left.mount = {ws.width * mount_fraction, 0.0};
    left.dropoff = {left.mount.x, -250.0};
    RobotSpec right = left;
    right.id = RobotId{2};
    right.mount = {ws.width * (1.0 - mount_fraction), 0.0};
    right.dropoff = {right.mount.x, -250.0};
    return {left, right};
}

Scene generate_scene(std::uint64_t seed, const GenerationParams& params) {
    const auto& ws = params.workspace;
    if (params.n_objects < 2) throw InvalidParameters("n_objects must be >= 2");
    if (!positive_finite(params.radius_min) || !positive_finite(params.radius_max) ||
        params.radius_min > params.radius_max) {
        throw InvalidParameters("radius range must satisfy 0 < min <= max");
    }
    if (!positive_finite(ws.width) || !positive_finite(ws.height) ||
        2.0 * params.radius_max > std::min(ws.width, ws.height)) {
        throw InvalidParameters("workspace must be positive and wider than the largest object");
    }
    if (!positive_finite(params.gripper_radius)) throw InvalidParameters("gripper_radius must be > 0");
    if (params.max_consecutive_rejections == 0) throw InvalidParameters("rejection cap must be > 0");

    std::mt19937_64 rng(seed);
    constexpr int kSceneAttempts = 100;
    for (int attempt = 0; attempt < kSceneAttempts; ++attempt) {
        Scene scene;
        scene.workspace = ws;
        scene.gripper_radius = params.gripper_radius;
        scene.robots = params.robots;
        scene.objects.reserve(params.n_objects);

        while (scene.objects.size() < params.n_objects) {
            std::size_t rejections = 0;
            for (;;) {
                const double r = uniform(rng, params.radius_min, params.radius_max);
                const Disc disc{{uniform(rng, r, ws.width - r), uniform(rng, r, ws.height - r)}, r};
                const bool clear = std::all_of(scene.objects.begin(), scene.objects.end(),
                                               [&](const ObjectSpec& o) { return discs_disjoint(o.footprint, disc); });
                if (clear) {
                    scene.objects.push_back({ObjectId{static_cast<int>(scene.objects.size()) + 1}, disc, false});
                    break;
                }
                if (++rejections >= params.max_consecutive_rejections) {
                    throw GenerationFailure("workspace too crowded: " + std::to_string(rejections) +
                                            " consecutive rejections placing object " +
                                            std::to_string(scene.objects.size() + 1));
                }
            }
        }

        std::vector<ObjectIndex> candidates;
        for (ObjectIndex i = 0; i < scene.objects.size(); ++i) {
            const Point c = scene.objects[i].footprint.center;
            if (scene.robots[0].reaches(c) && scene.robots[1].reaches(c)) candidates.push_back(i);
        }
        if (candidates.empty()) continue;
        scene.objects[candidates[uniform_index(rng, candidates.size())]].is_target = true;
        validate(scene);
        return scene;
    }
    throw GenerationFailure("no object landed inside both reach discs after " + std::to_string(kSceneAttempts) +
                            " attempts");
}

}  // namespace duet
