#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "duet/scene.hpp"

namespace duet {

/// Serializes to the JSON scene schema with a fixed field order, so equal
/// scenes always produce identical bytes.
std::string save_scene(const Scene& scene);

/// Parses and validates. Throws ParseError (with line or field locus) or
/// InvariantViolation.
Scene load_scene(std::string_view text);

Scene load_scene_file(const std::filesystem::path& path);
void save_scene_file(const Scene& scene, const std::filesystem::path& path);

/// FNV-1a of the serialized scene; used to prove benchmark methods saw the same instances.
std::uint64_t scene_hash(const Scene& scene);

}  // namespace duet
