#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cybug/events.hpp"
#include "cybug/rules.hpp"
#include "cybug/world.hpp"

namespace cybug::sim {

struct ReplayData {
    std::vector<Event> events;  // in file order, match_end line included
};

// Parses a JSON-lines replay. nullopt when any line is malformed.
std::optional<ReplayData> read_replay(std::string_view bytes);

// What an event stream implies about the match, derived with no access to
// the world that produced it.
struct ReplaySummary {
    std::map<std::string, TeamScore> scores;
    std::map<int, std::string> teams;  // cybug id -> team
    std::vector<int> survivors;        // ids, ascending
    int ticks = 0;
    std::optional<Json> result;  // match_end payload, when present

    int points(const std::string& team, const RuleConfig& config) const;
};

ReplaySummary reconstruct(const std::vector<Event>& events);

}  // namespace cybug::sim
