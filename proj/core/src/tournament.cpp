#include "cybug/tournament.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "cybug/parse.hpp"

namespace cybug::sim {

namespace {

struct ScheduledMatch {
    int a = 0;  // bot indices; a spawns first
    int b = 0;
    int round = 0;
    std::uint64_t seed = 0;
};

TournamentRun failed(std::string message) {
    TournamentRun run;
    run.error = std::move(message);
    return run;
}

}  // namespace

TournamentRun run_tournament(const TournamentConfig& config) {
    if (config.bots.size() < 2) return failed("a tournament needs at least two bots");
    if (config.rounds < 1) return failed("rounds must be at least 1");
    {
        std::set<std::string> names;
        for (const TournamentBot& bot : config.bots) {
            if (!names.insert(bot.name).second)
                return failed("duplicate bot name '" + bot.name + "'");
            caicl::ParseResult parsed = caicl::parse(bot.source, caicl::ParseMode::lenient);
            if (caicl::has_errors(parsed.diagnostics))
                return failed("bot '" + bot.name + "' failed to parse");
        }
    }

    std::vector<ScheduledMatch> schedule;
    const int n = static_cast<int>(config.bots.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int r = 0; r < config.rounds; ++r) {
                ScheduledMatch m;
                m.a = r % 2 == 0 ? i : j;
                m.b = r % 2 == 0 ? j : i;
                m.round = r;
                m.seed = config.rules.seed + static_cast<std::uint64_t>(r);
                schedule.push_back(m);
            }

    std::vector<MatchRun> runs(schedule.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        while (true) {
            const std::size_t index = cursor.fetch_add(1);
            if (index >= schedule.size()) return;
            const ScheduledMatch& m = schedule[index];
            MatchConfig mc;
            mc.map_text = config.map_text;
            mc.rules = config.rules;
            mc.rules.seed = m.seed;
            mc.bots = {{config.bots[m.a].name, config.bots[m.a].source, config.bots[m.a].name},
                       {config.bots[m.b].name, config.bots[m.b].source, config.bots[m.b].name}};
            runs[index] = run_match(mc);
        }
    };

    int jobs = config.jobs;
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(schedule.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    std::map<std::string, StandingsRow> rows;
    for (const TournamentBot& bot : config.bots) rows[bot.name].name = bot.name;

    Standings standings;
    for (std::size_t index = 0; index < schedule.size(); ++index) {
        const ScheduledMatch& m = schedule[index];
        const MatchRun& run = runs[index];
        const std::string& name_a = config.bots[m.a].name;
        const std::string& name_b = config.bots[m.b].name;
        if (!run.ok())
            return failed("match " + name_a + " vs " + name_b + " (round " +
                          std::to_string(m.round) + ") failed: " + *run.error);

        const MatchResult& result = *run.result;
        StandingsRow& row_a = rows[name_a];
        StandingsRow& row_b = rows[name_b];
        ++row_a.played;
        ++row_b.played;
        if (result.outcome.winner) {
            StandingsRow& winner = rows[*result.outcome.winner];
            StandingsRow& loser = *result.outcome.winner == name_a ? row_b : row_a;
            ++winner.wins;
            winner.points += 3;
            ++loser.losses;
        } else {
            ++row_a.draws;
            ++row_b.draws;
            row_a.points += 1;
            row_b.points += 1;
        }

        Json record = Json::object();
        record["bot_a"] = name_a;
        record["bot_b"] = name_b;
        record["round"] = m.round;
        record["seed"] = m.seed;
        record["winner"] = result.outcome.winner ? Json(*result.outcome.winner) : Json(nullptr);
        record["ticks"] = result.ticks;
        record["digest"] = result.digest;
        standings.matches.push_back(std::move(record));
    }

    for (const auto& [name, row] : rows) standings.rows.push_back(row);
    std::sort(standings.rows.begin(), standings.rows.end(),
              [](const StandingsRow& x, const StandingsRow& y) {
                  if (x.points != y.points) return x.points > y.points;
                  return x.name < y.name;
              });

    TournamentRun run;
    run.standings = std::move(standings);
    return run;
}

Json standings_report(const Standings& standings, const TournamentConfig& config) {
    Json report = Json::object();
    Json bots = Json::array();
    for (const TournamentBot& bot : config.bots) bots.push_back(bot.name);
    report["bots"] = std::move(bots);
    report["rounds"] = config.rounds;
    report["base_seed"] = config.rules.seed;
    report["matches"] = standings.matches;
    Json table = Json::array();
    for (const StandingsRow& row : standings.rows)
        table.push_back({{"name", row.name},
                         {"played", row.played},
                         {"wins", row.wins},
                         {"draws", row.draws},
                         {"losses", row.losses},
                         {"points", row.points}});
    report["table"] = std::move(table);
    return report;
}

}  // namespace cybug::sim
