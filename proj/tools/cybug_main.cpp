// cybug: CAICL toolchain and battle runner.
//
// Subcommands: parse, lint, run, tournament, replay. Exit codes: 0 clean,
// 1 error diagnostics or match setup failure, 2 usage. Stdout is fully
// deterministic for identical inputs.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cybug/bots.hpp"
#include "cybug/lint.hpp"
#include "cybug/match.hpp"
#include "cybug/parse.hpp"
#include "cybug/replay.hpp"
#include "cybug/tournament.hpp"

namespace fs = std::filesystem;
using namespace cybug;

namespace {

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << bytes;
    return bool(out);
}

std::optional<std::uint64_t> parse_u64(const std::string& text) {
    if (text.empty()) return std::nullopt;
    errno = 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(text.c_str(), &end, 10);
    if (errno != 0 || end != text.c_str() + text.size()) return std::nullopt;
    return v;
}

// CYBUG_SEED is the default seed source; --seed wins over it.
int resolve_seed(bool flag_given, std::uint64_t flag_value, std::uint64_t& out) {
    if (flag_given) {
        out = flag_value;
        return 0;
    }
    const char* env = std::getenv("CYBUG_SEED");
    if (env == nullptr) return 0;
    auto v = parse_u64(env);
    if (!v) {
        std::cerr << "cybug: CYBUG_SEED is not an unsigned integer: " << env << "\n";
        return 2;
    }
    out = *v;
    return 0;
}

void print_diagnostics(const std::vector<caicl::Diagnostic>& diags, const std::string& file) {
    for (const auto& d : diags) std::cout << caicl::format_diagnostic(d, file) << "\n";
}

void print_program_summary(const caicl::Program& p) {
    std::cout << "name: " << p.name << "\n";
    std::cout << "instructions: " << p.size() << "\n";
    std::cout << "labels:";
    if (p.labels.empty()) {
        std::cout << " none";
    } else {
        for (const auto& [label, index] : p.labels) std::cout << " " << label << "=" << index;
    }
    std::cout << "\n";
}

int cmd_parse(const std::string& file, bool strict) {
    auto source = read_file(file);
    if (!source) {
        std::cerr << "cybug: cannot read " << file << "\n";
        return 2;
    }
    auto mode = strict ? caicl::ParseMode::strict : caicl::ParseMode::lenient;
    auto result = caicl::parse(*source, mode);
    print_diagnostics(result.diagnostics, file);
    if (result.program) print_program_summary(*result.program);
    return caicl::has_errors(result.diagnostics) ? 1 : 0;
}

int cmd_lint(const std::string& file) {
    auto source = read_file(file);
    if (!source) {
        std::cerr << "cybug: cannot read " << file << "\n";
        return 2;
    }
    auto result = caicl::parse(*source, caicl::ParseMode::lenient);
    std::vector<caicl::Diagnostic> all = result.diagnostics;
    if (result.program) {
        // The parser already reports unresolved references; drop lint
        // findings that restate a diagnostic at the same spot.
        for (const auto& finding : caicl::lint(*result.program)) {
            bool duplicate = false;
            for (const auto& d : result.diagnostics) {
                if (d.code == finding.code && d.span.line == finding.span.line) {
                    duplicate = true;
                    break;
                }
            }
            if (!duplicate) all.push_back(finding);
        }
    }
    print_diagnostics(all, file);
    int errors = 0;
    int warnings = 0;
    for (const auto& d : all) {
        if (d.severity == caicl::Severity::error) ++errors;
        if (d.severity == caicl::Severity::warning) ++warnings;
    }
    std::cout << errors << " error(s), " << warnings << " warning(s)\n";
    return errors > 0 ? 1 : 0;
}

struct BotArg {
    std::string name;
    std::string source;
    std::string team;
};

// Accepts `PATH[:team]` or `builtin:NAME[:team]`. A path that itself
// contains a colon still loads when the whole string names a file.
std::optional<BotArg> resolve_bot_arg(const std::string& arg, std::string& error) {
    BotArg bot;
    constexpr std::string_view kBuiltin = "builtin:";
    if (arg.rfind(kBuiltin, 0) == 0) {
        std::string rest = arg.substr(kBuiltin.size());
        auto colon = rest.find(':');
        bot.name = rest.substr(0, colon == std::string::npos ? rest.size() : colon);
        if (colon != std::string::npos) bot.team = rest.substr(colon + 1);
        auto source = sim::builtin_source(bot.name);
        if (!source) {
            error = "unknown builtin bot: " + bot.name;
            return std::nullopt;
        }
        bot.source = std::string(*source);
    } else {
        std::string path = arg;
        auto colon = arg.rfind(':');
        if (colon != std::string::npos && !fs::exists(arg)) {
            path = arg.substr(0, colon);
            bot.team = arg.substr(colon + 1);
        }
        auto source = read_file(path);
        if (!source) {
            error = "cannot read bot file: " + path;
            return std::nullopt;
        }
        bot.name = fs::path(path).stem().string();
        bot.source = *source;
    }
    if (bot.team.empty()) bot.team = bot.name;
    return bot;
}

std::string outcome_kind_name(sim::Outcome::Kind kind) {
    return kind == sim::Outcome::Kind::team_eliminated ? "team_eliminated" : "tick_limit";
}

void print_match_result(const sim::MatchResult& result) {
    std::cout << "outcome: " << outcome_kind_name(result.outcome.kind) << "\n";
    std::cout << "winner: " << (result.outcome.winner ? *result.outcome.winner : "draw") << "\n";
    std::cout << "ticks: " << result.ticks << "\n";
    for (const auto& [team, score] : result.teams) {
        std::cout << "team " << team << ": flags=" << score.flags << " kills=" << score.kills
                  << " points=" << score.points << "\n";
    }
    std::cout << "survivors:";
    if (result.survivors.empty()) {
        std::cout << " none";
    } else {
        for (int id : result.survivors) std::cout << " " << id;
    }
    std::cout << "\n";
    std::cout << "digest: " << result.digest << "\n";
}

int cmd_run(const std::string& map_file, const std::vector<std::string>& bot_args,
            bool seed_given, std::uint64_t seed, std::optional<int> max_ticks,
            const std::string& replay_out, const std::string& config_file) {
    sim::MatchConfig config;

    if (!config_file.empty()) {
        auto text = read_file(config_file);
        if (!text) {
            std::cerr << "cybug: cannot read " << config_file << "\n";
            return 2;
        }
        if (auto err = sim::apply_config_text(config.rules, *text)) {
            std::cerr << "cybug: " << config_file << ": " << *err << "\n";
            return 1;
        }
    }
    if (int rc = resolve_seed(seed_given, seed, config.rules.seed); rc != 0) return rc;
    if (max_ticks) config.rules.max_ticks = *max_ticks;

    auto map_text = read_file(map_file);
    if (!map_text) {
        std::cerr << "cybug: cannot read " << map_file << "\n";
        return 2;
    }
    config.map_text = *map_text;

    for (const auto& arg : bot_args) {
        std::string error;
        auto bot = resolve_bot_arg(arg, error);
        if (!bot) {
            std::cerr << "cybug: " << error << "\n";
            return 1;
        }
        config.bots.push_back({bot->name, bot->source, bot->team});
    }

    auto run = sim::run_match(config);
    if (!run.ok()) {
        std::cerr << "cybug: " << *run.error << "\n";
        return 1;
    }
    if (!replay_out.empty() && !write_file(replay_out, run.replay)) {
        std::cerr << "cybug: cannot write " << replay_out << "\n";
        return 1;
    }
    print_match_result(*run.result);
    return 0;
}

int collect_tournament_bots(const std::string& arg, std::vector<sim::TournamentBot>& bots) {
    auto add_file = [&](const std::string& path) {
        auto source = read_file(path);
        if (!source) {
            std::cerr << "cybug: cannot read bot file: " << path << "\n";
            return 1;
        }
        bots.push_back({fs::path(path).stem().string(), *source});
        return 0;
    };

    if (fs::is_directory(arg)) {
        std::vector<std::string> paths;
        for (const auto& entry : fs::directory_iterator(arg)) {
            if (entry.is_regular_file() && entry.path().extension() == ".cb") {
                paths.push_back(entry.path().string());
            }
        }
        std::sort(paths.begin(), paths.end());
        for (const auto& path : paths) {
            if (int rc = add_file(path); rc != 0) return rc;
        }
        return 0;
    }

    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        constexpr std::string_view kBuiltin = "builtin:";
        if (item.rfind(kBuiltin, 0) == 0) {
            std::string name = item.substr(kBuiltin.size());
            auto source = sim::builtin_source(name);
            if (!source) {
                std::cerr << "cybug: unknown builtin bot: " << name << "\n";
                return 1;
            }
            bots.push_back({name, std::string(*source)});
        } else if (int rc = add_file(item); rc != 0) {
            return rc;
        }
    }
    return 0;
}

int cmd_tournament(const std::string& bots_arg, const std::string& map_file, int rounds,
                   bool seed_given, std::uint64_t seed, const std::string& report_out,
                   int jobs) {
    sim::TournamentConfig config;
    config.rounds = rounds;
    config.jobs = jobs;
    if (int rc = collect_tournament_bots(bots_arg, config.bots); rc != 0) return rc;
    if (int rc = resolve_seed(seed_given, seed, config.rules.seed); rc != 0) return rc;

    auto map_text = read_file(map_file);
    if (!map_text) {
        std::cerr << "cybug: cannot read " << map_file << "\n";
        return 2;
    }
    config.map_text = *map_text;

    auto run = sim::run_tournament(config);
    if (!run.ok()) {
        std::cerr << "cybug: " << *run.error << "\n";
        return 1;
    }

    std::size_t name_width = 4;
    for (const auto& row : run.standings->rows) name_width = std::max(name_width, row.name.size());
    std::cout << std::left << std::setw(int(name_width)) << "name" << std::right
              << std::setw(8) << "played" << std::setw(6) << "wins" << std::setw(7) << "draws"
              << std::setw(8) << "losses" << std::setw(8) << "points" << "\n";
    for (const auto& row : run.standings->rows) {
        std::cout << std::left << std::setw(int(name_width)) << row.name << std::right
                  << std::setw(8) << row.played << std::setw(6) << row.wins << std::setw(7)
                  << row.draws << std::setw(8) << row.losses << std::setw(8) << row.points
                  << "\n";
    }

    if (!report_out.empty()) {
        auto report = sim::standings_report(*run.standings, config);
        if (!write_file(report_out, report.dump(2) + "\n")) {
            std::cerr << "cybug: cannot write " << report_out << "\n";
            return 1;
        }
    }
    return 0;
}

int cmd_replay(const std::string& file, const std::string& format) {
    auto bytes = read_file(file);
    if (!bytes) {
        std::cerr << "cybug: cannot read " << file << "\n";
        return 2;
    }
    auto replay = sim::read_replay(*bytes);
    if (!replay) {
        std::cerr << "cybug: malformed replay: " << file << "\n";
        return 1;
    }
    if (format == "text") {
        for (const auto& e : replay->events) {
            std::cout << "[" << std::setw(5) << e.tick << "] ";
            if (e.actor) {
                std::cout << "#" << *e.actor;
            } else {
                std::cout << "world";
            }
            std::cout << " " << e.kind << " " << e.payload.dump() << "\n";
        }
        return 0;
    }
    auto summary = sim::reconstruct(replay->events);
    std::cout << "ticks: " << summary.ticks << "\n";
    std::cout << "cybugs:";
    if (summary.teams.empty()) std::cout << " none";
    for (const auto& [id, team] : summary.teams) std::cout << " " << id << "=" << team;
    std::cout << "\n";
    for (const auto& [team, score] : summary.scores) {
        std::cout << "team " << team << ": flags=" << score.flags << " kills=" << score.kills
                  << "\n";
    }
    std::cout << "survivors:";
    if (summary.survivors.empty()) std::cout << " none";
    for (int id : summary.survivors) std::cout << " " << id;
    std::cout << "\n";
    if (summary.result) std::cout << "result: " << summary.result->dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CAICL toolchain and Cybug battle simulator", "cybug"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "cybug 0.1.0");

    std::string file;
    bool strict = false;
    auto* parse_cmd = app.add_subcommand("parse", "Parse a script and print its summary");
    parse_cmd->add_option("file", file, "CAICL script")->required()->check(CLI::ExistingFile);
    parse_cmd->add_flag("--strict", strict, "Treat recoveries as errors");

    auto* lint_cmd = app.add_subcommand("lint", "Parse and report static findings");
    lint_cmd->add_option("file", file, "CAICL script")->required()->check(CLI::ExistingFile);

    std::string map_file;
    std::vector<std::string> bot_args;
    std::uint64_t seed = 0;
    int max_ticks = 0;
    std::string replay_out;
    std::string config_file;
    auto* run_cmd = app.add_subcommand("run", "Run one match and print the result");
    run_cmd->add_option("--map", map_file, "Map file")->required()->check(CLI::ExistingFile);
    run_cmd->add_option("--bot", bot_args, "PATH[:team] or builtin:NAME[:team]; repeatable")
        ->required();
    auto* seed_opt = run_cmd->add_option("--seed", seed, "Match seed (default: $CYBUG_SEED or 0)");
    auto* ticks_opt = run_cmd->add_option("--max-ticks", max_ticks, "Tick limit")
                          ->check(CLI::PositiveNumber);
    run_cmd->add_option("--replay", replay_out, "Write the replay (JSON lines) here");
    run_cmd->add_option("--config", config_file, "Rule overrides, key = value lines")
        ->check(CLI::ExistingFile);

    std::string bots_arg;
    int rounds = 1;
    std::string report_out;
    int jobs = 1;
    auto* tour_cmd = app.add_subcommand("tournament", "Round-robin over a set of bots");
    tour_cmd->add_option("--bots", bots_arg, "Directory of .cb files, or comma-separated list")
        ->required();
    tour_cmd->add_option("--map", map_file, "Map file")->required()->check(CLI::ExistingFile);
    tour_cmd->add_option("--rounds", rounds, "Matches per pair")->check(CLI::PositiveNumber);
    auto* tour_seed_opt =
        tour_cmd->add_option("--seed", seed, "Base seed (default: $CYBUG_SEED or 0)");
    tour_cmd->add_option("--report", report_out, "Write the standings report (JSON) here");
    tour_cmd->add_option("--jobs", jobs, "Worker threads; 0 = all cores");

    std::string format = "text";
    auto* replay_cmd = app.add_subcommand("replay", "Pretty-print a replay file");
    replay_cmd->add_option("file", file, "Replay file")->required()->check(CLI::ExistingFile);
    replay_cmd->add_option("--format", format, "text or summary")
        ->check(CLI::IsMember({"text", "summary"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (app.got_subcommand(parse_cmd)) return cmd_parse(file, strict);
    if (app.got_subcommand(lint_cmd)) return cmd_lint(file);
    if (app.got_subcommand(run_cmd)) {
        std::optional<int> ticks;
        if (ticks_opt->count() > 0) ticks = max_ticks;
        return cmd_run(map_file, bot_args, seed_opt->count() > 0, seed, ticks, replay_out,
                       config_file);
    }
    if (app.got_subcommand(tour_cmd)) {
        return cmd_tournament(bots_arg, map_file, rounds, tour_seed_opt->count() > 0, seed,
                              report_out, jobs);
    }
    if (app.got_subcommand(replay_cmd)) return cmd_replay(file, format);
    return 2;
}
