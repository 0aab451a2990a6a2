#include "duet/export.hpp"

#include <sstream>

#include "json_util.hpp"

namespace duet {

using detail::ojson;

namespace {

ojson ids(const std::vector<ObjectId>& v) {
    ojson out = ojson::array();
    for (auto id : v) out.push_back(id.value);
    return out;
}

ojson ids(const std::vector<RobotId>& v) {
    ojson out = ojson::array();
    for (auto id : v) out.push_back(id.value);
    return out;
}

ojson rate_json(const TurnTaking& t) { return t.rate ? ojson(*t.rate) : ojson(nullptr); }

}  // namespace

std::string allocation_to_json(const Allocation& a) {
    ojson doc;
    doc["plan"] = ids(a.plan.sequence);
    doc["assignees"] = ids(a.assignees);
    doc["penalty"] = a.penalty;
    doc["turn_takings"] = a.turn_takings;
    doc["rate"] = rate_json(count_turn_takings(a.assignees));
    return doc.dump(2) + "\n";
}

std::string timeline_to_json(const Timeline& timeline) {
    ojson doc;
    doc["makespan"] = timeline.makespan;
    ojson slots = ojson::array();
    for (const auto& slot : timeline.slots) {
        ojson actions = ojson::array();
        for (const auto& a : slot.actions) {
            ojson action;
            action["robot"] = a.robot.value;
            action["kind"] = to_string(a.kind);
            if (a.object) action["object"] = a.object->value;
            action["duration"] = a.duration;
            actions.push_back(std::move(action));
        }
        slots.push_back({{"start", slot.start}, {"actions", std::move(actions)}});
    }
    doc["slots"] = std::move(slots);
    return doc.dump(2) + "\n";
}

Timeline timeline_from_json(std::string_view text) {
    const ojson doc = detail::parse_text(text);
    Timeline timeline;
    timeline.makespan = detail::number(doc, "makespan", "");
    const auto& slots = detail::array(doc, "slots", "");
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const std::string path = detail::child("slots", i);
        Slot slot;
        slot.start = detail::number(slots[i], "start", path);
        const auto& actions = detail::array(slots[i], "actions", path);
        if (actions.empty() || actions.size() > 2) throw ParseError(0, path + ".actions", "expected 1 or 2 actions");
        for (std::size_t j = 0; j < actions.size(); ++j) {
            const std::string apath = detail::child(path + ".actions", j);
            Action a;
            a.robot = RobotId{static_cast<int>(detail::integer(actions[j], "robot", apath))};
            const auto& kind = detail::member(actions[j], "kind", apath);
            if (kind == "pick") {
                a.kind = ActionKind::pick;
            } else if (kind == "place") {
                a.kind = ActionKind::place;
            } else if (kind == "standby") {
                a.kind = ActionKind::standby;
            } else {
                throw ParseError(0, apath + ".kind", "expected pick, place or standby");
            }
            if (actions[j].contains("object")) {
                a.object = ObjectId{static_cast<int>(detail::integer(actions[j], "object", apath))};
            }
            if (a.carries_object() != a.object.has_value()) {
                throw ParseError(0, apath, "pick and place carry an object; standby does not");
            }
            a.duration = detail::number(actions[j], "duration", apath);
            slot.actions.push_back(a);
        }
        timeline.slots.push_back(std::move(slot));
    }
    return timeline;
}

std::string mission_to_json(const MissionLog& log) {
    ojson doc;
    doc["method"] = to_string(log.method);
    doc["success"] = log.success;
    doc["failure"] = to_string(log.failure);
    ojson relocations = ojson::array();
    for (const auto& r : log.relocations) relocations.push_back({{"object", r.object.value}, {"robot", r.robot.value}});
    doc["relocations"] = std::move(relocations);
    ojson failures = ojson::array();
    for (const auto& f : log.failures) {
        failures.push_back(
            {{"object", f.object.value}, {"robot", f.robot.value}, {"after_relocations", f.after_relocations}});
    }
    doc["failures"] = std::move(failures);
    doc["replanning_count"] = log.replanning_count;
    doc["turn_takings"] = log.turn_taking.count;
    doc["rate"] = rate_json(log.turn_taking);
    doc["makespan"] = log.makespan;
    doc["expansions"] = log.expansions;
    doc["accessibility_checks"] = log.accessibility_checks;
    doc["oracle_calls"] = log.oracle_calls;
    doc["plan_refreshes"] = log.plan_refreshes;
    return doc.dump(2) + "\n";
}

std::string tgraph_to_json(const TGraph& graph) {
    auto name = [&](std::size_t node) {
        return node == 0 ? "r" + std::to_string(graph.robot().value) : "o" + std::to_string(graph.id_at(node).value);
    };
    ojson doc;
    doc["robot"] = graph.robot().value;
    ojson adjacency;
    for (std::size_t n = 0; n < graph.node_count(); ++n) {
        ojson neighbours = ojson::array();
        for (std::size_t m : graph.neighbours(n)) neighbours.push_back(name(m));
        adjacency[name(n)] = std::move(neighbours);
    }
    doc["adjacency"] = std::move(adjacency);
    return doc.dump(2) + "\n";
}

std::string search_trace_to_text(const SearchOutcome& outcome) {
    std::ostringstream out;
    for (const auto& e : outcome.trace) out << e.gen_index << ' ' << e.depth << ' ' << e.g << '\n';
    return out.str();
}

}  // namespace duet
