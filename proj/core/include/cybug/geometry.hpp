#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string_view>

namespace cybug::sim {

struct GridPoint {
    int x = 0;
    int y = 0;

    friend GridPoint operator+(GridPoint a, GridPoint b) { return {a.x + b.x, a.y + b.y}; }
    friend GridPoint operator-(GridPoint a, GridPoint b) { return {a.x - b.x, a.y - b.y}; }
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

// North is decreasing y (row 0 at the top of the map file).
enum class Heading { north, east, south, west };

constexpr GridPoint heading_vector(Heading h) {
    switch (h) {
        case Heading::north: return {0, -1};
        case Heading::east: return {1, 0};
        case Heading::south: return {0, 1};
        case Heading::west: return {-1, 0};
    }
    return {0, 0};
}

constexpr Heading rotate_right(Heading h) {
    return static_cast<Heading>((static_cast<int>(h) + 1) % 4);
}

constexpr Heading rotate_left(Heading h) {
    return static_cast<Heading>((static_cast<int>(h) + 3) % 4);
}

constexpr std::string_view heading_name(Heading h) {
    switch (h) {
        case Heading::north: return "north";
        case Heading::east: return "east";
        case Heading::south: return "south";
        case Heading::west: return "west";
    }
    return "?";
}

std::optional<Heading> heading_from_name(std::string_view name);

inline int chebyshev(GridPoint a, GridPoint b) {
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

}  // namespace cybug::sim
