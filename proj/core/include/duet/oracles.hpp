#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "duet/scene.hpp"
#include "duet/sequencing.hpp"
#include "duet/traversability.hpp"

// Independent reference computations used by the verify command and the test
// suites. None of them share code paths with the routines they check.
namespace duet::oracles {

/// Smallest clearance (center distance minus combined radius) over
/// `samples` evenly spaced positions of the moving disc along from -> to.
/// +infinity when no obstacle is present.
double sampled_clearance(const SceneState& state, Point from, Point to, double moving_radius,
                         std::span<const ObjectIndex> ignore, std::size_t samples = 2000);

/// Exact clearance from the segment; only used to classify near-threshold cases.
double analytic_clearance(const SceneState& state, Point from, Point to, double moving_radius,
                          std::span<const ObjectIndex> ignore);

/// Fewest hops over every simple robot -> target path, by depth-first enumeration.
std::optional<std::size_t> min_plan_length_by_enumeration(const TGraph& graph, ObjectId target);

/// Whether any sequence of accessible relocations retrieves the target.
/// Removing an object never closes a corridor, so clearing every accessible
/// object until nothing changes reaches the largest removable set.
bool retrievable(const Scene& scene);

/// Event-driven replay: slots are released in order; a slot starts once every
/// robot it uses has finished its previous action and the prior slot has
/// started. Returns the time of the last completion event.
double replay_makespan(const Timeline& timeline);

}  // namespace duet::oracles
