#include "cybug/match.hpp"

#include <set>
#include <sstream>

#include "cybug/digest.hpp"
#include "cybug/parse.hpp"

namespace cybug::sim {

namespace {

MatchRun failed(std::string message) {
    MatchRun run;
    run.error = std::move(message);
    return run;
}

}  // namespace

Json result_record(const MatchResult& result) {
    Json teams = Json::object();
    for (const auto& [team, score] : result.teams)
        teams[team] = {{"flags", score.flags}, {"kills", score.kills}, {"points", score.points}};
    Json payload = Json::object();
    payload["outcome"] = result.outcome.kind == Outcome::Kind::team_eliminated
                             ? "team_eliminated"
                             : "tick_limit";
    payload["winner"] = result.outcome.winner ? Json(*result.outcome.winner) : Json(nullptr);
    payload["ticks"] = result.ticks;
    payload["teams"] = std::move(teams);
    payload["survivors"] = result.survivors;
    return payload;
}

MatchRun run_match(const MatchConfig& config) {
    MapLoadResult loaded = load_map(config.map_text);
    if (!loaded.ok())
        return failed("map: line " + std::to_string(loaded.error->line) + ", column " +
                      std::to_string(loaded.error->column) + ": " + loaded.error->message);

    std::vector<caicl::Program> programs;
    std::set<std::string> teams;
    for (const BotSpec& bot : config.bots) {
        caicl::ParseResult parsed = caicl::parse(bot.source, caicl::ParseMode::lenient);
        if (caicl::has_errors(parsed.diagnostics)) {
            std::ostringstream out;
            out << "bot '" << bot.name << "' failed to parse:";
            for (const caicl::Diagnostic& d : parsed.diagnostics)
                if (d.severity == caicl::Severity::error)
                    out << "\n  " << caicl::format_diagnostic(d, bot.name);
            return failed(out.str());
        }
        programs.push_back(std::move(*parsed.program));
        teams.insert(bot.team);
    }
    if (teams.size() < 2)
        return failed("a match needs at least two teams, got " + std::to_string(teams.size()));

    World world(std::move(*loaded.map), config.rules);
    for (std::size_t i = 0; i < config.bots.size(); ++i) {
        if (!world.spawn(std::move(programs[i]), config.bots[i].team))
            return failed("bot '" + config.bots[i].name + "' has no spawn point left");
    }

    while (!world.is_over()) {
        world.tick();
        if (config.after_tick) config.after_tick(world);
    }

    MatchResult result;
    result.outcome = *world.is_over();
    result.ticks = world.tick_count();
    for (const auto& [team, score] : world.scores())
        result.teams[team] = {score.flags, score.kills, world.team_points(team)};
    for (const CybugEntry& bug : world.cybugs())
        if (bug.vm.alive()) result.survivors.push_back(bug.id);

    std::ostringstream replay;
    for (const Event& e : world.events()) replay << to_json_line(e) << '\n';
    Event end{world.tick_count(), std::nullopt, ev::match_end, result_record(result)};
    replay << to_json_line(end) << '\n';

    MatchRun run;
    run.replay = replay.str();
    result.digest = sha256_hex(run.replay);
    run.result = std::move(result);
    return run;
}

}  // namespace cybug::sim
