#pragma once

#include <string>
#include <string_view>

#include "duet/allocation.hpp"
#include "duet/execution.hpp"
#include "duet/sequencing.hpp"
#include "duet/traversability.hpp"

namespace duet {

/// {plan:[ids], assignees:[ids], penalty, turn_takings, rate}; rate is null for k = 1.
std::string allocation_to_json(const Allocation& allocation);

/// {makespan, slots:[{start, actions:[{robot, kind, object?, duration}]}]}
std::string timeline_to_json(const Timeline& timeline);
/// Inverse of timeline_to_json; action locations are not serialized and read back as (0, 0).
Timeline timeline_from_json(std::string_view text);

std::string mission_to_json(const MissionLog& log);

/// Adjacency list keyed by node name: "r<id>" for the robot, "o<id>" for objects.
std::string tgraph_to_json(const TGraph& graph);

/// One line per expansion: "gen_index depth g".
std::string search_trace_to_text(const SearchOutcome& outcome);

}  // namespace duet
