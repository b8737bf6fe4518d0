#include "cybug/map.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace cybug::sim {

namespace {

bool is_glyph(char c) {
    return c == '.' || c == '#' || c == '*' || c == 'F' || c == '+' || (c >= '1' && c <= '9');
}

bool is_comment(std::string_view line) {
    if (line.empty() || line.front() != '#') return false;
    return !std::all_of(line.begin(), line.end(), is_glyph);
}

}  // namespace

int MapData::count(Terrain t) const {
    return static_cast<int>(std::count(cells.begin(), cells.end(), t));
}

MapLoadResult load_map(std::string_view text) {
    MapData map;
    std::array<std::optional<GridPoint>, 9> spawn_by_digit;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    int first_row_line = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.empty() || is_comment(raw)) continue;

        const int y = map.height;
        if (y == 0) {
            map.width = static_cast<int>(raw.size());
            first_row_line = line_no;
        } else if (static_cast<int>(raw.size()) != map.width) {
            return {std::nullopt,
                    MapError{line_no, 1,
                             "row length " + std::to_string(raw.size()) + " differs from " +
                                 std::to_string(map.width) + " (row at line " +
                                 std::to_string(first_row_line) + ")"}};
        }

        for (int x = 0; x < map.width; ++x) {
            const char c = raw[x];
            if (!is_glyph(c))
                return {std::nullopt,
                        MapError{line_no, x + 1, std::string("unknown glyph '") + c + "'"}};
            Terrain t = Terrain::empty;
            switch (c) {
                case '.': t = Terrain::empty; break;
                case '#': t = Terrain::barrier; break;
                case '*': t = Terrain::mine; break;
                case 'F': t = Terrain::flag; break;
                case '+': t = Terrain::fuel_depot; break;
                default: {
                    const int digit = c - '1';
                    if (spawn_by_digit[digit])
                        return {std::nullopt,
                                MapError{line_no, x + 1,
                                         std::string("spawn point '") + c + "' defined twice"}};
                    spawn_by_digit[digit] = GridPoint{x, y};
                    break;
                }
            }
            map.cells.push_back(t);
        }
        ++map.height;
    }

    if (map.height == 0)
        return {std::nullopt, MapError{1, 1, "map has no grid rows"}};
    for (const auto& spawn : spawn_by_digit)
        if (spawn) map.spawns.push_back(*spawn);
    if (map.spawns.empty())
        return {std::nullopt, MapError{first_row_line, 1, "map has no spawn points"}};
    return {std::move(map), std::nullopt};
}

}  // namespace cybug::sim
