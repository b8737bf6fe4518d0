#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cybug/events.hpp"
#include "cybug/map.hpp"
#include "cybug/prng.hpp"
#include "cybug/vm.hpp"

namespace cybug::sim {

struct CybugEntry {
    int id = 0;
    std::string team;
    GridPoint pos;
    CybugVmState vm;
};

struct TeamScore {
    int flags = 0;
    int kills = 0;

    friend bool operator==(const TeamScore&, const TeamScore&) = default;
};

struct Outcome {
    enum class Kind { team_eliminated, tick_limit };
    Kind kind = Kind::tick_limit;
    std::optional<std::string> winner;  // nullopt = draw
};

// The battlefield. Strictly sequential, deterministic: one PRNG, bugs act
// in spawn order, every state change leaves an Event in the log.
class World {
public:
    World(MapData map, RuleConfig config);

    // Places a program at the next free spawn point. nullopt when the map
    // has no spawn point left.
    std::optional<int> spawn(caicl::Program program, std::string team);

    // Runs one full round of the tick loop; returns the events it emitted.
    std::vector<Event> tick();

    std::optional<Outcome> is_over() const;

    // Direct actuation, also used by the tick loop.
    Percepts perform_scan(int id, ScanKind kind);
    std::vector<Event> apply_action(int id, const Action& action);

    // Throws std::logic_error when a world invariant is broken.
    void check_invariants() const;

    int tick_count() const { return tick_; }
    const RuleConfig& config() const { return config_; }
    const MapData& map() const { return map_; }
    const std::vector<CybugEntry>& cybugs() const { return bugs_; }
    const CybugEntry& cybug(int id) const { return bugs_.at(id); }
    CybugEntry& cybug(int id) { return bugs_.at(id); }  // scenario construction
    const std::map<std::string, TeamScore>& scores() const { return scores_; }
    int team_points(const std::string& team) const;
    int initial_flags() const { return initial_flags_; }
    int initial_mines() const { return initial_mines_; }
    const std::vector<Event>& events() const { return events_; }

private:
    friend class WorldHost;

    void emit(std::optional<int> actor, const char* kind, Json payload);
    void run_turn(CybugEntry& bug);
    void resolve(CybugEntry& bug, const Action& action);
    void resolve_move(CybugEntry& bug, MoveDir dir);
    void resolve_fire(CybugEntry& bug, Weapon weapon);
    void resolve_discharge(CybugEntry& bug);
    void resolve_self_destruct(CybugEntry& bug);
    void damage_bug(CybugEntry& victim, int raw_amount, const char* cause,
                    std::optional<int> attacker);
    void splash(GridPoint center, int radius, int raw_amount, const char* cause,
                std::optional<int> attacker, std::optional<int> excluded);
    CybugEntry* living_at(GridPoint p);
    const CybugEntry* living_at(GridPoint p) const;
    static Json point_json(GridPoint p);

    MapData map_;
    RuleConfig config_;
    std::vector<CybugEntry> bugs_;
    Prng prng_;
    int tick_ = 0;
    std::map<std::string, TeamScore> scores_;
    std::vector<Event> events_;
    std::size_t next_spawn_ = 0;
    int initial_flags_ = 0;
    int initial_mines_ = 0;
};

// Cross-tick invariant checks that need history: damage never decreases,
// mines never come back. observe() also runs World::check_invariants.
class InvariantMonitor {
public:
    void observe(const World& world);

private:
    std::map<int, int> last_damage_;
    std::optional<int> last_mines_;
};

}  // namespace cybug::sim
