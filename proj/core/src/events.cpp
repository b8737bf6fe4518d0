#include "cybug/events.hpp"

namespace cybug::sim {

std::string to_json_line(const Event& e) {
    Json line = Json::object();
    line["tick"] = e.tick;
    if (e.actor)
        line["actor"] = *e.actor;
    else
        line["actor"] = "world";
    line["kind"] = e.kind;
    line["payload"] = e.payload;
    return line.dump();
}

std::optional<Event> event_from_json_line(std::string_view line) {
    Json parsed = Json::parse(line, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object()) return std::nullopt;
    if (!parsed.contains("tick") || !parsed.contains("actor") || !parsed.contains("kind") ||
        !parsed.contains("payload"))
        return std::nullopt;
    if (!parsed["tick"].is_number_integer() || !parsed["kind"].is_string()) return std::nullopt;

    Event e;
    e.tick = parsed["tick"].get<int>();
    const Json& actor = parsed["actor"];
    if (actor.is_number_integer())
        e.actor = actor.get<int>();
    else if (!(actor.is_string() && actor.get<std::string>() == "world"))
        return std::nullopt;
    e.kind = parsed["kind"].get<std::string>();
    e.payload = parsed["payload"];
    return e;
}

}  // namespace cybug::sim
