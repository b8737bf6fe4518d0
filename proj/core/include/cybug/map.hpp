#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cybug/geometry.hpp"

namespace cybug::sim {

enum class Terrain { empty, barrier, mine, fuel_depot, flag };

struct MapData {
    int width = 0;
    int height = 0;
    std::vector<Terrain> cells;       // row-major
    std::vector<GridPoint> spawns;    // ordered by spawn digit

    bool in_bounds(GridPoint p) const {
        return p.x >= 0 && p.x < width && p.y >= 0 && p.y < height;
    }
    Terrain at(GridPoint p) const { return cells[p.y * width + p.x]; }
    void set(GridPoint p, Terrain t) { cells[p.y * width + p.x] = t; }

    int count(Terrain t) const;
};

struct MapError {
    int line = 0;
    int column = 0;
    std::string message;
};

struct MapLoadResult {
    std::optional<MapData> map;
    std::optional<MapError> error;

    bool ok() const { return map.has_value(); }
};

// Decodes a map file: grid rows of `.` empty, `#` barrier, `*` mine,
// `F` flag, `+` fuel depot, `1`-`9` spawn points. A line starting with `#`
// that contains any character outside that glyph set is a comment (a pure
// `#` row is a wall). Rows must be equal length; spawn digits unique; at
// least one spawn present.
MapLoadResult load_map(std::string_view text);

}  // namespace cybug::sim
