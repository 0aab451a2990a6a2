#include "render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <string_view>

#include "duet/traversability.hpp"

namespace duet::cli {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    std::string s = buf;
    if (s == "-0.0") s = "0.0";
    return s;
}

class Svg {
public:
    Svg(double x, double y, double w, double h) {
        out_ = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(x) + " " + num(y) + " " + num(w) + " " +
               num(h) + "\" width=\"" + num(w) + "\" height=\"" + num(h) + "\">\n";
    }

    void raw(std::string_view s) { out_ += s; }

    void line(double x1, double y1, double x2, double y2, std::string_view cls) {
        out_ += "  <line class=\"" + std::string(cls) + "\" x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" +
                num(x2) + "\" y2=\"" + num(y2) + "\"/>\n";
    }

    void circle(double cx, double cy, double r, std::string_view cls) {
        out_ += "  <circle class=\"" + std::string(cls) + "\" cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" +
                num(r) + "\"/>\n";
    }

    void rect(double x, double y, double w, double h, std::string_view cls) {
        out_ += "  <rect class=\"" + std::string(cls) + "\" x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" +
                num(w) + "\" height=\"" + num(h) + "\"/>\n";
    }

    void text(double x, double y, std::string_view cls, std::string_view body) {
        out_ += "  <text class=\"" + std::string(cls) + "\" x=\"" + num(x) + "\" y=\"" + num(y) + "\">" +
                std::string(body) + "</text>\n";
    }

    std::string finish() { return out_ + "</svg>\n"; }

private:
    std::string out_;
};

constexpr std::string_view kSceneStyle =
    "  <style>\n"
    "    .shelf { fill: #f7f5f0; stroke: #555; stroke-width: 3 }\n"
    "    .front { stroke: #f7f5f0; stroke-width: 4 }\n"
    "    .reach { fill: none; stroke-dasharray: 8 6; stroke-width: 1.5 }\n"
    "    .r1 { stroke: #c0392b } .r2 { stroke: #2c6fbb }\n"
    "    .object { fill: #d9d4c7; stroke: #6b6456; stroke-width: 2 }\n"
    "    .target { fill: #f2c14e; stroke: #8a6d1d; stroke-width: 3 }\n"
    "    .mount { stroke-width: 3; fill: #fff }\n"
    "    .dropoff { fill: none; stroke-width: 2 }\n"
    "    .edge { stroke: #999; stroke-width: 1 }\n"
    "    .orp { stroke: #222; stroke-width: 6; stroke-linecap: round }\n"
    "    .label { font: 20px sans-serif; text-anchor: middle; dominant-baseline: central }\n"
    "    .order { font: bold 22px sans-serif; fill: #b03a2e; text-anchor: middle }\n"
    "  </style>\n";

constexpr std::string_view kTimelineStyle =
    "  <style>\n"
    "    .pick { fill: #e59866 } .place { fill: #7fb3d5 } .standby { fill: #d5d8dc }\n"
    "    .paired { fill: none; stroke: #1e8449; stroke-width: 2; stroke-dasharray: 4 3 }\n"
    "    .lane { font: 14px sans-serif; dominant-baseline: central }\n"
    "    .label { font: 11px sans-serif; text-anchor: middle; dominant-baseline: central }\n"
    "    .axis { stroke: #555; stroke-width: 1 } .tick { font: 11px sans-serif; text-anchor: middle }\n"
    "  </style>\n";

}  // namespace

std::string render_scene_svg(const Scene& scene, std::optional<RobotIndex> tgraph) {
    const double w = scene.workspace.width, h = scene.workspace.height;
    double low = 0.0;
    for (const auto& r : scene.robots) low = std::min({low, r.mount.y, r.dropoff.y});
    const double margin = 60.0;
    // world y grows toward the back wall; flip so the front edge is at the bottom
    auto Y = [&](double y) { return h - y; };
    Svg svg(-margin, -margin, w + 2 * margin, h - low + 2 * margin);
    svg.raw(kSceneStyle);
    svg.rect(0, Y(h), w, h, "shelf");
    svg.line(0, Y(0), w, Y(0), "front");

    for (RobotIndex i = 0; i < kRobotCount; ++i) {
        const auto& r = scene.robots[i];
        const std::string cls = i == 0 ? "r1" : "r2";
        svg.circle(r.mount.x, Y(r.mount.y), r.reach_radius, "reach " + cls);
    }

    if (tgraph) {
        const SceneState state(scene);
        const TGraph g = build_tgraph(state, *tgraph);
        auto at = [&](std::size_t node) {
            return node == 0 ? scene.robots[*tgraph].mount : scene.objects[g.object_at(node)].footprint.center;
        };
        for (std::size_t a = 0; a < g.node_count(); ++a) {
            for (std::size_t b = a + 1; b < g.node_count(); ++b) {
                if (g.has_edge(a, b)) svg.line(at(a).x, Y(at(a).y), at(b).x, Y(at(b).y), "edge");
            }
        }
        if (const auto plan = orp_plan(g, scene.target_id())) {
            std::size_t prev = 0;
            for (ObjectId id : plan->sequence) {
                const std::size_t node = *g.node_of(id);
                svg.line(at(prev).x, Y(at(prev).y), at(node).x, Y(at(node).y), "orp");
                prev = node;
            }
        }
    }

    for (const auto& o : scene.objects) {
        const auto& d = o.footprint;
        svg.circle(d.center.x, Y(d.center.y), d.radius, o.is_target ? "target" : "object");
        svg.text(d.center.x, Y(d.center.y), "label", o.is_target ? "t" : std::to_string(o.id.value));
    }

    for (RobotIndex i = 0; i < kRobotCount; ++i) {
        const auto& r = scene.robots[i];
        const std::string cls = i == 0 ? "r1" : "r2";
        svg.circle(r.mount.x, Y(r.mount.y), 18, "mount " + cls);
        svg.text(r.mount.x, Y(r.mount.y) + 36, "label", "r" + std::to_string(r.id.value));
        svg.rect(r.dropoff.x - 20, Y(r.dropoff.y) - 20, 40, 40, "dropoff " + cls);
    }

    if (tgraph) {
        const TGraph g = build_tgraph(SceneState(scene), *tgraph);
        if (const auto plan = orp_plan(g, scene.target_id())) {
            for (std::size_t i = 0; i < plan->k(); ++i) {
                const auto& d = scene.objects[g.object_at(*g.node_of(plan->sequence[i]))].footprint;
                svg.text(d.center.x + d.radius * 0.8, Y(d.center.y) - d.radius * 0.8, "order", std::to_string(i + 1));
            }
        }
    }
    return svg.finish();
}

std::string render_timeline_svg(const Timeline& timeline) {
    std::map<int, std::size_t> lane;
    for (const auto& slot : timeline.slots) {
        for (const auto& a : slot.actions) lane.emplace(a.robot.value, 0);
    }
    std::size_t next = 0;
    for (auto& [robot, index] : lane) index = next++;

    const double px = 12.0;  // pixels per second
    const double left = 60.0, lane_h = 40.0, top = 10.0;
    const double width = left + timeline.makespan * px + 20.0;
    const double height = top + lane.size() * lane_h + 40.0;
    Svg svg(0, 0, width, height);
    svg.raw(kTimelineStyle);
    for (const auto& [robot, index] : lane) {
        svg.text(8, top + index * lane_h + lane_h / 2, "lane", "r" + std::to_string(robot));
    }
    for (const auto& slot : timeline.slots) {
        for (const auto& a : slot.actions) {
            const double x = left + slot.start * px;
            const double y = top + lane[a.robot.value] * lane_h + 4;
            svg.rect(x, y, a.duration * px, lane_h - 8, to_string(a.kind));
            std::string label = to_string(a.kind);
            if (a.object) label += " o" + std::to_string(a.object->value);
            if (a.kind != ActionKind::standby) svg.text(x + a.duration * px / 2, y + (lane_h - 8) / 2, "label", label);
        }
        if (slot.paired()) {
            svg.rect(left + slot.start * px - 2, top + 1, (slot.end() - slot.start) * px + 4,
                     lane.size() * lane_h - 2, "paired");
        }
    }
    const double axis_y = top + lane.size() * lane_h + 6;
    svg.line(left, axis_y, left + timeline.makespan * px, axis_y, "axis");
    for (int t = 0; t <= static_cast<int>(timeline.makespan); t += 10) {
        svg.text(left + t * px, axis_y + 16, "tick", std::to_string(t));
    }
    return svg.finish();
}

}  // namespace duet::cli
