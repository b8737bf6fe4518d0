#include "cybug/rules.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <sstream>

namespace cybug::sim {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

using Setter = std::function<bool(RuleConfig&, std::string_view)>;

bool set_int(int& field, std::string_view value) {
    int parsed = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size() || parsed < 0) return false;
    field = parsed;
    return true;
}

bool set_u64(std::uint64_t& field, std::string_view value) {
    std::uint64_t parsed = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size()) return false;
    field = parsed;
    return true;
}

bool set_factor(double& field, std::string_view value) {
    try {
        std::size_t used = 0;
        double parsed = std::stod(std::string(value), &used);
        if (used != value.size() || parsed < 0.0 || parsed > 1.0) return false;
        field = parsed;
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

const std::map<std::string_view, Setter>& setters() {
    auto int_field = [](int RuleConfig::* member) {
        return [member](RuleConfig& c, std::string_view v) { return set_int(c.*member, v); };
    };
    static const std::map<std::string_view, Setter> table = {
        {"fuel_start", int_field(&RuleConfig::fuel_start)},
        {"fuel_max", int_field(&RuleConfig::fuel_max)},
        {"move_cost", int_field(&RuleConfig::move_cost)},
        {"blocked_move_cost", int_field(&RuleConfig::blocked_move_cost)},
        {"shield_upkeep_per_tick", int_field(&RuleConfig::shield_upkeep_per_tick)},
        {"missile_ammo", int_field(&RuleConfig::missile_ammo)},
        {"missile_damage", int_field(&RuleConfig::missile_damage)},
        {"missile_range", int_field(&RuleConfig::missile_range)},
        {"gun_ammo", int_field(&RuleConfig::gun_ammo)},
        {"gun_damage", int_field(&RuleConfig::gun_damage)},
        {"gun_range", int_field(&RuleConfig::gun_range)},
        {"grenade_ammo", int_field(&RuleConfig::grenade_ammo)},
        {"grenade_damage", int_field(&RuleConfig::grenade_damage)},
        {"grenade_offset", int_field(&RuleConfig::grenade_offset)},
        {"grenade_radius", int_field(&RuleConfig::grenade_radius)},
        {"discharge_damage", int_field(&RuleConfig::discharge_damage)},
        {"discharge_radius", int_field(&RuleConfig::discharge_radius)},
        {"selfdestruct_damage", int_field(&RuleConfig::selfdestruct_damage)},
        {"selfdestruct_radius", int_field(&RuleConfig::selfdestruct_radius)},
        {"mine_damage", int_field(&RuleConfig::mine_damage)},
        {"fuel_pickup", int_field(&RuleConfig::fuel_pickup)},
        {"shield_factor",
         [](RuleConfig& c, std::string_view v) { return set_factor(c.shield_factor, v); }},
        {"scan_range_long", int_field(&RuleConfig::scan_range_long)},
        {"scan_range_directional", int_field(&RuleConfig::scan_range_directional)},
        {"scan_fuel_cost", int_field(&RuleConfig::scan_fuel_cost)},
        {"budget", int_field(&RuleConfig::budget)},
        {"random_max", int_field(&RuleConfig::random_max)},
        {"flag_points", int_field(&RuleConfig::flag_points)},
        {"kill_points", int_field(&RuleConfig::kill_points)},
        {"max_ticks", int_field(&RuleConfig::max_ticks)},
        {"seed", [](RuleConfig& c, std::string_view v) { return set_u64(c.seed, v); }},
    };
    return table;
}

}  // namespace

std::optional<std::string> apply_config_text(RuleConfig& config, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    for (int line_no = 1; std::getline(in, raw); ++line_no) {
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos)
            return "line " + std::to_string(line_no) + ": expected key = value";
        std::string_view key = trim(line.substr(0, eq));
        std::string_view value = trim(line.substr(eq + 1));
        auto it = setters().find(key);
        if (it == setters().end())
            return "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'";
        if (!it->second(config, value))
            return "line " + std::to_string(line_no) + ": bad value '" + std::string(value) +
                   "' for '" + std::string(key) + "'";
    }
    return std::nullopt;
}

}  // namespace cybug::sim
