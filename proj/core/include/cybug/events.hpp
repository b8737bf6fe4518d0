#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace cybug::sim {

using Json = nlohmann::ordered_json;

// Event kinds, closed set.
namespace ev {
inline constexpr const char* spawned = "spawned";
inline constexpr const char* moved = "moved";
inline constexpr const char* bumped = "bumped";
inline constexpr const char* turned = "turned";
inline constexpr const char* scanned = "scanned";
inline constexpr const char* fired = "fired";
inline constexpr const char* hit = "hit";
inline constexpr const char* shield_changed = "shield_changed";
inline constexpr const char* discharged = "discharged";
inline constexpr const char* mine_tripped = "mine_tripped";
inline constexpr const char* fuel_taken = "fuel_taken";
inline constexpr const char* flag_taken = "flag_taken";
inline constexpr const char* self_destructed = "self_destructed";
inline constexpr const char* destroyed = "destroyed";
inline constexpr const char* out_of_ammo = "out_of_ammo";
inline constexpr const char* out_of_fuel = "out_of_fuel";
inline constexpr const char* fault = "fault";
inline constexpr const char* match_end = "match_end";
}  // namespace ev

struct Event {
    int tick = 0;
    std::optional<int> actor;  // nullopt = the world itself
    std::string kind;
    Json payload = Json::object();

    friend bool operator==(const Event&, const Event&) = default;
};

// One replay line: {"tick":…,"actor":…,"kind":…,"payload":…} with exactly
// that field order. actor is an id or the string "world". No trailing
// newline.
std::string to_json_line(const Event& e);

std::optional<Event> event_from_json_line(std::string_view line);

}  // namespace cybug::sim
