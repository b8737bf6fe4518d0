#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cybug/match.hpp"

namespace cybug::sim {

struct TournamentBot {
    std::string name;  // unique; doubles as the team name
    std::string source;
};

struct TournamentConfig {
    std::vector<TournamentBot> bots;  // ≥ 2, unique names
    std::string map_text;
    int rounds = 1;
    RuleConfig rules;  // rules.seed is the base seed
    int jobs = 1;      // worker threads; ≤ 0 means hardware concurrency
};

struct StandingsRow {
    std::string name;
    int played = 0;
    int wins = 0;
    int draws = 0;
    int losses = 0;
    int points = 0;  // 3 / 1 / 0

    friend bool operator==(const StandingsRow&, const StandingsRow&) = default;
};

struct Standings {
    std::vector<StandingsRow> rows;  // points descending, name ascending
    std::vector<Json> matches;       // one record per match, schedule order

    friend bool operator==(const Standings&, const Standings&) = default;
};

struct TournamentRun {
    std::optional<Standings> standings;
    std::optional<std::string> error;

    bool ok() const { return standings.has_value(); }
};

// Round-robin: every unordered pair plays `rounds` matches, round r seeded
// base+r, sides swapped on odd rounds. Matches run on `jobs` workers;
// results are identical to a sequential run.
TournamentRun run_tournament(const TournamentConfig& config);

Json standings_report(const Standings& standings, const TournamentConfig& config);

}  // namespace cybug::sim
