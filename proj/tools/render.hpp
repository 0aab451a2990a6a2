#pragma once

#include <optional>
#include <string>

#include "duet/scene.hpp"
#include "duet/sequencing.hpp"

namespace duet::cli {

// Top view of the shelf. With `tgraph`, overlays that robot's traversability
// graph and numbers the nodes of its relocation plan in order.
std::string render_scene_svg(const Scene& scene, std::optional<RobotIndex> tgraph = std::nullopt);

// One lane per robot, one bar per action.
std::string render_timeline_svg(const Timeline& timeline);

}  // namespace duet::cli
