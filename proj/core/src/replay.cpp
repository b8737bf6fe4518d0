#include "cybug/replay.hpp"

#include <algorithm>
#include <set>

namespace cybug::sim {

std::optional<ReplayData> read_replay(std::string_view bytes) {
    ReplayData data;
    std::size_t start = 0;
    while (start < bytes.size()) {
        std::size_t end = bytes.find('\n', start);
        if (end == std::string_view::npos) end = bytes.size();
        std::string_view line = bytes.substr(start, end - start);
        start = end + 1;
        if (line.empty()) continue;
        auto event = event_from_json_line(line);
        if (!event) return std::nullopt;
        data.events.push_back(std::move(*event));
    }
    return data;
}

int ReplaySummary::points(const std::string& team, const RuleConfig& config) const {
    auto it = scores.find(team);
    if (it == scores.end()) return 0;
    return it->second.flags * config.flag_points + it->second.kills * config.kill_points;
}

ReplaySummary reconstruct(const std::vector<Event>& events) {
    ReplaySummary summary;
    std::set<int> alive;
    int max_tick = -1;

    for (const Event& e : events) {
        max_tick = std::max(max_tick, e.tick);
        if (e.kind == ev::spawned && e.actor) {
            const std::string team = e.payload.value("team", std::string{});
            summary.teams[*e.actor] = team;
            summary.scores.try_emplace(team);
            alive.insert(*e.actor);
        } else if (e.kind == ev::flag_taken) {
            summary.scores[e.payload.value("team", std::string{})].flags += 1;
        } else if (e.kind == ev::destroyed) {
            const int victim = e.payload.value("victim", -1);
            alive.erase(victim);
            const Json& by = e.payload.contains("by") ? e.payload.at("by") : Json(nullptr);
            if (by.is_number_integer()) {
                const int killer = by.get<int>();
                auto killer_team = summary.teams.find(killer);
                auto victim_team = summary.teams.find(victim);
                if (killer_team != summary.teams.end() && victim_team != summary.teams.end() &&
                    killer_team->second != victim_team->second)
                    summary.scores[killer_team->second].kills += 1;
            }
        } else if (e.kind == ev::match_end) {
            summary.result = e.payload;
            if (e.payload.contains("ticks") && e.payload["ticks"].is_number_integer())
                summary.ticks = e.payload["ticks"].get<int>();
        }
    }

    if (!summary.result) summary.ticks = max_tick + 1;
    summary.survivors.assign(alive.begin(), alive.end());
    return summary;
}

}  // namespace cybug::sim
