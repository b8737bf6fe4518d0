#include "cybug/geometry.hpp"

namespace cybug::sim {

std::optional<Heading> heading_from_name(std::string_view name) {
    if (name == "north") return Heading::north;
    if (name == "east") return Heading::east;
    if (name == "south") return Heading::south;
    if (name == "west") return Heading::west;
    return std::nullopt;
}

}  // namespace cybug::sim
