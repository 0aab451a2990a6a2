#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>

namespace duet {

template <class Tag>
struct Id {
    int value{0};

    friend auto operator<=>(const Id&, const Id&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Id& id) { return os << id.value; }
};

using ObjectId = Id<struct ObjectTag>;
using RobotId = Id<struct RobotTag>;

}  // namespace duet

template <class Tag>
struct std::hash<duet::Id<Tag>> {
    std::size_t operator()(const duet::Id<Tag>& id) const noexcept { return std::hash<int>{}(id.value); }
};
