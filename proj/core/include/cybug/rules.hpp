#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cybug::sim {

// Every tunable of the battlefield. Defaults define the canonical rule set;
// tournaments pin their own via config files.
struct RuleConfig {
    int width = 0;   // taken from the map
    int height = 0;

    int fuel_start = 100;
    int fuel_max = 100;
    int move_cost = 1;
    int blocked_move_cost = 1;
    int shield_upkeep_per_tick = 1;

    int missile_ammo = 20;
    int missile_damage = 30;
    int missile_range = 8;
    int gun_ammo = 50;
    int gun_damage = 10;
    int gun_range = 3;
    int grenade_ammo = 5;
    int grenade_damage = 20;
    int grenade_offset = 3;
    int grenade_radius = 1;  // Chebyshev
    int discharge_damage = 20;
    int discharge_radius = 1;
    int selfdestruct_damage = 60;
    int selfdestruct_radius = 2;
    int mine_damage = 25;

    int fuel_pickup = 50;
    double shield_factor = 0.5;  // incoming damage multiplier, floor-rounded

    int scan_range_long = 8;
    int scan_range_directional = 4;
    int scan_fuel_cost = 0;

    int budget = 64;     // instruction budget per tick
    int random_max = 4;  // `generate random` draws 1..random_max

    int flag_points = 10;
    int kill_points = 5;

    int max_ticks = 2000;
    std::uint64_t seed = 0;

    friend bool operator==(const RuleConfig&, const RuleConfig&) = default;
};

// Applies `key = value` lines (# comments, blank lines allowed) on top of
// the given config. Returns an error message naming the offending line, or
// nullopt on success. Grid dimensions are not accepted: the map owns them.
std::optional<std::string> apply_config_text(RuleConfig& config, std::string_view text);

}  // namespace cybug::sim
