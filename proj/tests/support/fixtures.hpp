#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "duet/allocation.hpp"
#include "duet/scene.hpp"

namespace duet {
struct Timeline;
}

namespace duet::fixtures {

// Hand-checked replica scenes stored under tests/data: "fig2a", "fig2b", "fig3", "fig5".
Scene figure_scene(std::string_view name);
std::string data_path(std::string_view file);

struct DiscSpec {
    int id;
    double x, y, r;
    bool target = false;
};

// Default robots and workspace, caller-supplied objects. Validated.
Scene make_scene(const std::vector<DiscSpec>& objects);

// Seeded scenes of size n drawn with default generation parameters.
std::vector<Scene> random_scenes(std::uint64_t first_seed, std::size_t count, std::size_t n);

// Random object order (k between 1 and N) with random assignees; ignores
// accessibility, which sequencing does not depend on.
Allocation random_allocation(const Scene& scene, std::uint64_t seed);

// Checks the timeline invariants; returns an empty string when all hold.
std::string timeline_violation(const Timeline& timeline, const Allocation& allocation);

std::vector<int> id_values(const std::vector<ObjectId>& ids);
std::vector<int> id_values(const std::vector<RobotId>& ids);

}  // namespace duet::fixtures
