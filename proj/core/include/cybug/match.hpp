#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cybug/replay.hpp"
#include "cybug/rules.hpp"
#include "cybug/world.hpp"

namespace cybug::sim {

struct BotSpec {
    std::string name;    // display name (bot file stem or builtin name)
    std::string source;  // script text
    std::string team;
};

struct MatchConfig {
    std::string map_text;
    std::vector<BotSpec> bots;  // spawned in this order; ≥ 2 teams required
    RuleConfig rules;           // seed and max_ticks live here

    // Called after every tick; acceptance runs invariant checks here.
    std::function<void(const World&)> after_tick;
};

struct TeamResult {
    int flags = 0;
    int kills = 0;
    int points = 0;

    friend bool operator==(const TeamResult&, const TeamResult&) = default;
};

struct MatchResult {
    Outcome outcome;
    int ticks = 0;
    std::map<std::string, TeamResult> teams;
    std::vector<int> survivors;  // cybug ids, ascending
    std::string digest;          // SHA-256 hex of the replay bytes
};

struct MatchRun {
    std::optional<MatchResult> result;
    std::string replay;  // JSON-lines, final line the match_end record
    std::optional<std::string> error;

    bool ok() const { return result.has_value(); }
};

// Loads everything, spawns bots in listed order, runs the tick loop to the
// end, serializes the replay, digests it. Load failures surface in `error`
// before any simulation happens.
MatchRun run_match(const MatchConfig& config);

// The match_end record for a finished world, also used as the final replay
// line.
Json result_record(const MatchResult& result);

}  // namespace cybug::sim
