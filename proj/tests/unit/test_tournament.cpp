#include "doctest.h"

#include <string>

#include "cybug/bots.hpp"
#include "cybug/tournament.hpp"
#include "io.hpp"

using namespace cybug::sim;

namespace {

TournamentConfig small_cup() {
    TournamentConfig tc;
    for (const char* name : {"ghazu_spec", "idle", "wanderer"}) {
        auto src = builtin_source(name);
        REQUIRE(src.has_value());
        tc.bots.push_back({name, std::string(*src)});
    }
    tc.map_text = testio::slurp(testio::asset("maps/duel.map"));
    tc.rounds = 2;
    tc.rules.seed = 5;
    tc.rules.max_ticks = 120;
    return tc;
}

const StandingsRow& row_of(const Standings& s, const std::string& name) {
    for (const StandingsRow& row : s.rows)
        if (row.name == name) return row;
    REQUIRE_MESSAGE(false, ("no standings row for " + name));
    static StandingsRow dummy;
    return dummy;
}

}  // namespace

TEST_CASE("a three-bot double round-robin plays six matches") {
    TournamentRun run = run_tournament(small_cup());
    REQUIRE(run.ok());
    const Standings& s = *run.standings;
    CHECK(s.matches.size() == 6);
    REQUIRE(s.rows.size() == 3);
    for (const StandingsRow& row : s.rows) {
        CHECK(row.played == 4);
        CHECK(row.wins + row.draws + row.losses == row.played);
        CHECK(row.points == 3 * row.wins + row.draws);
    }
    int wins = 0, losses = 0;
    for (const StandingsRow& row : s.rows) {
        wins += row.wins;
        losses += row.losses;
    }
    CHECK(wins == losses);
}

TEST_CASE("standings sort by points, names breaking ties") {
    TournamentRun run = run_tournament(small_cup());
    REQUIRE(run.ok());
    const auto& rows = run.standings->rows;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const bool ordered = rows[i - 1].points > rows[i].points ||
                             (rows[i - 1].points == rows[i].points &&
                              rows[i - 1].name < rows[i].name);
        CHECK(ordered);
    }
}

TEST_CASE("rounds alternate sides and step the seed") {
    TournamentConfig tc = small_cup();
    tc.rounds = 3;
    TournamentRun run = run_tournament(tc);
    REQUIRE(run.ok());
    const auto& matches = run.standings->matches;
    REQUIRE(matches.size() == 9);  // 3 pairs x 3 rounds
    for (std::size_t i = 0; i < matches.size(); ++i) {
        const Json& m = matches[i];
        const int round = m.at("round").get<int>();
        CHECK(m.at("seed").get<std::uint64_t>() ==
              tc.rules.seed + static_cast<std::uint64_t>(round));
        if (round > 0) {
            const Json& prev = matches[i - 1];
            REQUIRE(prev.at("round").get<int>() == round - 1);
            CHECK(m.at("bot_a") == prev.at("bot_b"));
            CHECK(m.at("bot_b") == prev.at("bot_a"));
        }
    }
}

TEST_CASE("parallel execution reproduces the sequential standings exactly") {
    TournamentConfig tc = small_cup();
    tc.jobs = 1;
    TournamentRun sequential = run_tournament(tc);
    tc.jobs = 4;
    TournamentRun parallel = run_tournament(tc);
    tc.jobs = 0;  // all cores
    TournamentRun auto_jobs = run_tournament(tc);
    REQUIRE(sequential.ok());
    REQUIRE(parallel.ok());
    REQUIRE(auto_jobs.ok());
    CHECK(*sequential.standings == *parallel.standings);
    CHECK(*sequential.standings == *auto_jobs.standings);
}

TEST_CASE("a bot that cannot score never wins a match") {
    TournamentRun run = run_tournament(small_cup());
    REQUIRE(run.ok());
    const StandingsRow& idle = row_of(*run.standings, "idle");
    CHECK(idle.wins == 0);
    // Ghazu hunts down the idle bot in both of their meetings.
    for (const Json& m : run.standings->matches) {
        const bool ghazu_vs_idle =
            (m.at("bot_a") == "ghazu_spec" && m.at("bot_b") == "idle") ||
            (m.at("bot_a") == "idle" && m.at("bot_b") == "ghazu_spec");
        if (ghazu_vs_idle) CHECK(m.at("winner") == "ghazu_spec");
    }
}

TEST_CASE("the report carries roster, seed, matches, and table") {
    TournamentConfig tc = small_cup();
    TournamentRun run = run_tournament(tc);
    REQUIRE(run.ok());
    Json report = standings_report(*run.standings, tc);
    CHECK(report.at("bots").size() == 3);
    CHECK(report.at("rounds") == 2);
    CHECK(report.at("base_seed") == 5);
    CHECK(report.at("matches").size() == 6);
    REQUIRE(report.at("table").size() == 3);
    CHECK(report.at("table")[0].at("name") == run.standings->rows[0].name);
}

TEST_CASE("tournament validation rejects bad rosters") {
    TournamentConfig tc = small_cup();
    tc.bots.resize(1);
    CHECK_FALSE(run_tournament(tc).ok());

    tc = small_cup();
    tc.bots[1].name = tc.bots[0].name;
    auto dup = run_tournament(tc);
    CHECK_FALSE(dup.ok());
    REQUIRE(dup.error.has_value());
    CHECK(dup.error->find("duplicate") != std::string::npos);

    tc = small_cup();
    tc.rounds = 0;
    CHECK_FALSE(run_tournament(tc).ok());

    tc = small_cup();
    tc.bots[2].source = "if a then if b then move forward\n";
    auto bad = run_tournament(tc);
    CHECK_FALSE(bad.ok());
    REQUIRE(bad.error.has_value());
    CHECK(bad.error->find(tc.bots[2].name) != std::string::npos);
}
