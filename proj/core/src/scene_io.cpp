#include "duet/scene_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "duet/errors.hpp"
#include "json_util.hpp"

namespace duet {

using detail::ojson;

namespace {

ojson point_json(Point p) { return ojson::array({p.x, p.y}); }

Point point_from(const ojson& obj, const char* key, const std::string& path) {
    const auto& v = detail::array(obj, key, path);
    if (v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ParseError(0, detail::child(path, key), "expected [x, y]");
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

int id_from(const ojson& obj, const std::string& path) {
    const long long id = detail::integer(obj, "id", path);
    if (id < std::numeric_limits<int>::min() || id > std::numeric_limits<int>::max()) {
        throw ParseError(0, detail::child(path, "id"), "id out of range");
    }
    return static_cast<int>(id);
}

}  // namespace

std::string save_scene(const Scene& scene) {
    ojson doc;
    doc["workspace"] = {{"w", scene.workspace.width}, {"h", scene.workspace.height}};
    doc["gripper_radius"] = scene.gripper_radius;
    ojson objects = ojson::array();
    for (const auto& o : scene.objects) {
        objects.push_back({{"id", o.id.value},
                           {"x", o.footprint.center.x},
                           {"y", o.footprint.center.y},
                           {"r", o.footprint.radius},
                           {"target", o.is_target}});
    }
    doc["objects"] = std::move(objects);
    ojson robots = ojson::array();
    for (const auto& r : scene.robots) {
        robots.push_back({{"id", r.id.value},
                          {"mount", point_json(r.mount)},
                          {"reach", r.reach_radius},
                          {"dropoff", point_json(r.dropoff)},
                          {"speed", r.speed},
                          {"grasp_time", r.grasp_time},
                          {"release_time", r.release_time},
                          {"standby_time", r.standby_time}});
    }
    doc["robots"] = std::move(robots);
    return doc.dump(2) + "\n";
}

Scene load_scene(std::string_view text) {
    const ojson doc = detail::parse_text(text);
    Scene scene;
    const auto& ws = detail::member(doc, "workspace", "");
    scene.workspace = {detail::number(ws, "w", "workspace"), detail::number(ws, "h", "workspace")};
    scene.gripper_radius = detail::number(doc, "gripper_radius", "");

    const auto& objects = detail::array(doc, "objects", "");
    for (std::size_t i = 0; i < objects.size(); ++i) {
        const std::string path = detail::child("objects", i);
        const auto& o = objects[i];
        scene.objects.push_back({ObjectId{id_from(o, path)},
                                 {{detail::number(o, "x", path), detail::number(o, "y", path)},
                                  detail::number(o, "r", path)},
                                 detail::boolean(o, "target", path)});
    }

    const auto& robots = detail::array(doc, "robots", "");
    if (robots.size() != kRobotCount) throw ParseError(0, "robots", "exactly 2 robots required");
    for (std::size_t i = 0; i < kRobotCount; ++i) {
        const std::string path = detail::child("robots", i);
        const auto& r = robots[i];
        RobotSpec spec;
        spec.id = RobotId{id_from(r, path)};
        spec.mount = point_from(r, "mount", path);
        spec.reach_radius = detail::number(r, "reach", path);
        spec.dropoff = point_from(r, "dropoff", path);
        spec.speed = detail::number(r, "speed", path);
        spec.grasp_time = detail::number(r, "grasp_time", path);
        spec.release_time = detail::number(r, "release_time", path);
        spec.standby_time = detail::number(r, "standby_time", path);
        scene.robots[i] = spec;
    }
    validate(scene);
    return scene;
}

Scene load_scene_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open scene file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_scene(buf.str());
}

void save_scene_file(const Scene& scene, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write scene file " + path.string());
    out << save_scene(scene);
}

std::uint64_t scene_hash(const Scene& scene) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : save_scene(scene)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace duet
