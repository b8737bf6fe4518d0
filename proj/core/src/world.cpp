#include "cybug/world.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cybug::sim {

namespace {

std::string_view weapon_name(Weapon w) {
    switch (w) {
        case Weapon::missile: return "missile";
        case Weapon::gun: return "gun";
        case Weapon::grenade: return "grenade";
    }
    return "?";
}

std::string_view scan_name(ScanKind k) {
    switch (k) {
        case ScanKind::long_range: return "long";
        case ScanKind::forward: return "forward";
        case ScanKind::left: return "left";
        case ScanKind::right: return "right";
        case ScanKind::gps: return "gps";
    }
    return "?";
}

std::string_view fault_name(FaultKind f) {
    switch (f) {
        case FaultKind::call_stack_overflow: return "call-stack-overflow";
        case FaultKind::return_without_call: return "return-without-call";
    }
    return "?";
}

EntityKind terrain_entity(Terrain t) {
    switch (t) {
        case Terrain::barrier: return EntityKind::barrier;
        case Terrain::mine: return EntityKind::mine;
        case Terrain::flag: return EntityKind::flag;
        case Terrain::fuel_depot: return EntityKind::fuel;
        case Terrain::empty: break;
    }
    return EntityKind::barrier;
}

}  // namespace

// Instant-instruction services for one bug's step.
class WorldHost : public StepHost {
public:
    WorldHost(World& world, CybugEntry& bug) : world_(world), bug_(bug) {}

    int random_in(int n) override { return world_.prng_.uniform(n); }

    GridPoint gps_scan() override {
        world_.emit(bug_.id, ev::scanned,
                    {{"scan", "gps"}, {"at", World::point_json(bug_.pos)}});
        return bug_.pos;
    }

    void shield_changed(bool up) override {
        world_.emit(bug_.id, ev::shield_changed, {{"up", up}});
    }

private:
    World& world_;
    CybugEntry& bug_;
};

World::World(MapData map, RuleConfig config)
    : map_(std::move(map)), config_(std::move(config)), prng_(config_.seed) {
    config_.width = map_.width;
    config_.height = map_.height;
    initial_flags_ = map_.count(Terrain::flag);
    initial_mines_ = map_.count(Terrain::mine);
}

Json World::point_json(GridPoint p) { return Json::array({p.x, p.y}); }

void World::emit(std::optional<int> actor, const char* kind, Json payload) {
    events_.push_back({tick_, actor, kind, std::move(payload)});
}

std::optional<int> World::spawn(caicl::Program program, std::string team) {
    if (next_spawn_ >= map_.spawns.size()) return std::nullopt;
    const GridPoint pos = map_.spawns[next_spawn_++];
    const int id = static_cast<int>(bugs_.size());
    bugs_.push_back({id, team, pos, init_vm(std::move(program), config_)});
    scores_.try_emplace(team);
    emit(id, ev::spawned,
         {{"at", point_json(pos)}, {"team", std::move(team)}, {"facing", "north"}});
    return id;
}

CybugEntry* World::living_at(GridPoint p) {
    for (CybugEntry& bug : bugs_)
        if (bug.vm.alive() && bug.pos == p) return &bug;
    return nullptr;
}

const CybugEntry* World::living_at(GridPoint p) const {
    return const_cast<World*>(this)->living_at(p);
}

std::vector<Event> World::tick() {
    const std::size_t first = events_.size();
    for (CybugEntry& bug : bugs_) {
        if (!bug.vm.alive()) continue;
        run_turn(bug);
    }
    ++tick_;
    return {events_.begin() + static_cast<std::ptrdiff_t>(first), events_.end()};
}

void World::run_turn(CybugEntry& bug) {
    if (bug.vm.shield_up && config_.shield_upkeep_per_tick > 0) {
        bug.vm.fuel = std::max(0, bug.vm.fuel - config_.shield_upkeep_per_tick);
        if (bug.vm.fuel == 0) {
            bug.vm.shield_up = false;
            emit(bug.id, ev::shield_changed, {{"up", false}, {"auto", true}});
        }
    }

    WorldHost host(*this, bug);
    StepResult step = step_tick(bug.vm, config_, host);
    if (step.fault) {
        emit(bug.id, ev::fault, {{"reason", std::string(fault_name(*step.fault))}});
        return;
    }
    resolve(bug, step.action);
}

void World::resolve(CybugEntry& bug, const Action& action) {
    switch (action.kind) {
        case Action::Kind::idle:
            break;
        case Action::Kind::move:
            resolve_move(bug, action.move);
            break;
        case Action::Kind::turn: {
            bug.vm.heading = action.turn == TurnDir::left ? rotate_left(bug.vm.heading)
                                                          : rotate_right(bug.vm.heading);
            emit(bug.id, ev::turned, {{"facing", std::string(heading_name(bug.vm.heading))}});
            break;
        }
        case Action::Kind::scan: {
            if (action.scan != ScanKind::gps && config_.scan_fuel_cost > 0)
                bug.vm.fuel = std::max(0, bug.vm.fuel - config_.scan_fuel_cost);
            perform_scan(bug.id, action.scan);
            break;
        }
        case Action::Kind::fire:
            resolve_fire(bug, action.weapon);
            break;
        case Action::Kind::discharge:
            resolve_discharge(bug);
            break;
        case Action::Kind::shield_set: {
            if (bug.vm.shield_up != action.shield_up) {
                bug.vm.shield_up = action.shield_up;
                emit(bug.id, ev::shield_changed, {{"up", action.shield_up}});
            }
            break;
        }
        case Action::Kind::self_destruct:
            resolve_self_destruct(bug);
            break;
    }
}

std::vector<Event> World::apply_action(int id, const Action& action) {
    const std::size_t first = events_.size();
    resolve(cybug(id), action);
    return {events_.begin() + static_cast<std::ptrdiff_t>(first), events_.end()};
}

Percepts World::perform_scan(int id, ScanKind kind) {
    CybugEntry& bug = cybug(id);
    Percepts percepts;
    percepts.bump = bug.vm.bump_flag;

    if (kind == ScanKind::gps) {
        percepts.gps = bug.pos;
        emit(id, ev::scanned, {{"scan", "gps"}, {"at", point_json(bug.pos)}});
        return percepts;
    }

    Heading dir = bug.vm.heading;
    if (kind == ScanKind::left) dir = rotate_left(dir);
    if (kind == ScanKind::right) dir = rotate_right(dir);
    const int range = kind == ScanKind::long_range ? config_.scan_range_long
                                                   : config_.scan_range_directional;
    const GridPoint step = heading_vector(dir);

    std::optional<ScanResult> found;
    GridPoint cell = bug.pos;
    for (int d = 1; d <= range; ++d) {
        cell = cell + step;
        if (!map_.in_bounds(cell)) break;
        if (const CybugEntry* other = living_at(cell)) {
            if (other->team != bug.team) {
                found = ScanResult{EntityKind::enemy, d};
                break;
            }
            continue;  // teammates are transparent
        }
        const Terrain t = map_.at(cell);
        if (t != Terrain::empty) {
            found = ScanResult{terrain_entity(t), d};
            break;
        }
    }

    bug.vm.scan_reg = found;
    percepts.scan_result = found;
    Json payload = {{"scan", std::string(scan_name(kind))}};
    if (found)
        payload["found"] = {{"entity", std::string(caicl::entity_kind_name(found->kind))},
                            {"distance", found->distance}};
    else
        payload["found"] = nullptr;
    emit(id, ev::scanned, std::move(payload));
    return percepts;
}

void World::resolve_move(CybugEntry& bug, MoveDir dir) {
    if (bug.vm.fuel == 0) {
        emit(bug.id, ev::out_of_fuel, Json::object());
        return;
    }
    const GridPoint vec = heading_vector(bug.vm.heading);
    const GridPoint target =
        dir == MoveDir::forward ? bug.pos + vec : bug.pos - vec;

    const bool blocked = !map_.in_bounds(target) || map_.at(target) == Terrain::barrier ||
                         living_at(target) != nullptr;
    if (blocked) {
        bug.vm.bump_flag = true;
        bug.vm.fuel = std::max(0, bug.vm.fuel - config_.blocked_move_cost);
        emit(bug.id, ev::bumped, {{"at", point_json(bug.pos)}, {"toward", point_json(target)}});
        return;
    }

    bug.vm.bump_flag = false;
    bug.vm.fuel = std::max(0, bug.vm.fuel - config_.move_cost);
    const GridPoint from = bug.pos;
    bug.pos = target;
    emit(bug.id, ev::moved, {{"from", point_json(from)}, {"to", point_json(target)}});

    switch (map_.at(target)) {
        case Terrain::mine: {
            map_.set(target, Terrain::empty);
            emit(bug.id, ev::mine_tripped, {{"at", point_json(target)}, {"cause", "step"}});
            damage_bug(bug, config_.mine_damage, "mine", std::nullopt);
            break;
        }
        case Terrain::fuel_depot: {
            const int before = bug.vm.fuel;
            bug.vm.fuel = std::min(config_.fuel_max, bug.vm.fuel + config_.fuel_pickup);
            map_.set(target, Terrain::empty);
            emit(bug.id, ev::fuel_taken,
                 {{"at", point_json(target)},
                  {"amount", bug.vm.fuel - before},
                  {"fuel", bug.vm.fuel}});
            break;
        }
        case Terrain::flag: {
            map_.set(target, Terrain::empty);
            ++bug.vm.flags_carried;
            ++scores_[bug.team].flags;
            emit(bug.id, ev::flag_taken,
                 {{"at", point_json(target)},
                  {"team", bug.team},
                  {"carried", bug.vm.flags_carried}});
            break;
        }
        default:
            break;
    }
}

void World::damage_bug(CybugEntry& victim, int raw_amount, const char* cause,
                       std::optional<int> attacker) {
    const bool was_alive = victim.vm.alive();
    const int amount =
        victim.vm.shield_up
            ? static_cast<int>(std::floor(raw_amount * config_.shield_factor))
            : raw_amount;
    victim.vm.damage = std::min(100, victim.vm.damage + amount);

    Json payload = {{"target", victim.id}, {"amount", amount}, {"cause", cause}};
    payload["by"] = attacker ? Json(*attacker) : Json(nullptr);
    emit(attacker, ev::hit, std::move(payload));

    if (was_alive && !victim.vm.alive()) {
        emit(std::nullopt, ev::destroyed,
             {{"victim", victim.id}, {"by", attacker ? Json(*attacker) : Json(nullptr)}});
        if (attacker && bugs_.at(*attacker).team != victim.team)
            ++scores_[bugs_.at(*attacker).team].kills;
    }
}

void World::splash(GridPoint center, int radius, int raw_amount, const char* cause,
                   std::optional<int> attacker, std::optional<int> excluded) {
    for (CybugEntry& other : bugs_) {
        if (!other.vm.alive()) continue;
        if (excluded && other.id == *excluded) continue;
        if (chebyshev(center, other.pos) > radius) continue;
        damage_bug(other, raw_amount, cause, attacker);
    }
}

void World::resolve_fire(CybugEntry& bug, Weapon weapon) {
    int& ammo = bug.vm.ammo[weapon];
    if (ammo == 0) {
        emit(bug.id, ev::out_of_ammo, {{"weapon", std::string(weapon_name(weapon))}});
        return;
    }
    --ammo;
    const GridPoint step = heading_vector(bug.vm.heading);

    if (weapon == Weapon::grenade) {
        GridPoint cell = bug.pos;
        for (int d = 0; d < config_.grenade_offset; ++d) {
            const GridPoint next = cell + step;
            if (!map_.in_bounds(next) || map_.at(next) == Terrain::barrier) break;
            cell = next;
        }
        emit(bug.id, ev::fired,
             {{"weapon", "grenade"}, {"from", point_json(bug.pos)}, {"det", point_json(cell)}});
        splash(cell, config_.grenade_radius, config_.grenade_damage, "grenade", bug.id,
               std::nullopt);
        return;
    }

    const int range = weapon == Weapon::missile ? config_.missile_range : config_.gun_range;
    const int damage = weapon == Weapon::missile ? config_.missile_damage : config_.gun_damage;
    emit(bug.id, ev::fired,
         {{"weapon", std::string(weapon_name(weapon))},
          {"from", point_json(bug.pos)},
          {"facing", std::string(heading_name(bug.vm.heading))}});

    GridPoint cell = bug.pos;
    for (int d = 1; d <= range; ++d) {
        cell = cell + step;
        if (!map_.in_bounds(cell) || map_.at(cell) == Terrain::barrier) break;
        if (map_.at(cell) == Terrain::mine) {
            map_.set(cell, Terrain::empty);
            emit(bug.id, ev::mine_tripped, {{"at", point_json(cell)}, {"cause", "shot"}});
            splash(cell, config_.discharge_radius, config_.mine_damage, "mine", bug.id,
                   std::nullopt);
            break;
        }
        if (CybugEntry* victim = living_at(cell)) {
            damage_bug(*victim, damage, weapon == Weapon::missile ? "missile" : "gun", bug.id);
            break;
        }
    }
}

void World::resolve_discharge(CybugEntry& bug) {
    emit(bug.id, ev::discharged, {{"at", point_json(bug.pos)}});

    // The anti-mine tool: every mine in the blast radius is cleared.
    for (int dy = -config_.discharge_radius; dy <= config_.discharge_radius; ++dy) {
        for (int dx = -config_.discharge_radius; dx <= config_.discharge_radius; ++dx) {
            const GridPoint cell = bug.pos + GridPoint{dx, dy};
            if (!map_.in_bounds(cell) || map_.at(cell) != Terrain::mine) continue;
            map_.set(cell, Terrain::empty);
            emit(bug.id, ev::mine_tripped, {{"at", point_json(cell)}, {"cause", "discharge"}});
        }
    }
    splash(bug.pos, config_.discharge_radius, config_.discharge_damage, "discharge", bug.id,
           bug.id);
}

void World::resolve_self_destruct(CybugEntry& bug) {
    emit(bug.id, ev::self_destructed, {{"at", point_json(bug.pos)}});
    splash(bug.pos, config_.selfdestruct_radius, config_.selfdestruct_damage, "self_destruct",
           bug.id, bug.id);
    bug.vm.damage = 100;
    emit(std::nullopt, ev::destroyed, {{"victim", bug.id}, {"by", nullptr}});
}

std::optional<Outcome> World::is_over() const {
    std::vector<std::string> alive_teams;
    for (const CybugEntry& bug : bugs_)
        if (bug.vm.alive() &&
            std::find(alive_teams.begin(), alive_teams.end(), bug.team) == alive_teams.end())
            alive_teams.push_back(bug.team);

    const bool eliminated = alive_teams.size() <= 1;
    const bool timed_out = tick_ >= config_.max_ticks;
    if (!eliminated && !timed_out) return std::nullopt;

    Outcome outcome;
    outcome.kind = eliminated ? Outcome::Kind::team_eliminated : Outcome::Kind::tick_limit;
    if (eliminated && alive_teams.size() == 1) {
        outcome.winner = alive_teams.front();
        return outcome;
    }

    // Tick limit, or nobody left standing: highest points, ties draw.
    std::optional<std::string> best;
    bool tied = false;
    for (const auto& [team, score] : scores_) {
        const int points = team_points(team);
        if (!best || points > team_points(*best)) {
            best = team;
            tied = false;
        } else if (points == team_points(*best)) {
            tied = true;
        }
    }
    if (best && !tied) outcome.winner = best;
    return outcome;
}

int World::team_points(const std::string& team) const {
    auto it = scores_.find(team);
    if (it == scores_.end()) return 0;
    return it->second.flags * config_.flag_points + it->second.kills * config_.kill_points;
}

void World::check_invariants() const {
    auto fail = [](const std::string& what) { throw std::logic_error("invariant: " + what); };

    int carried = 0;
    for (const CybugEntry& bug : bugs_) {
        const CybugVmState& vm = bug.vm;
        if (vm.fuel < 0 || vm.fuel > config_.fuel_max) fail("fuel out of bounds");
        if (vm.damage < 0 || vm.damage > 100) fail("damage out of bounds");
        if (vm.random_reg < 1 || vm.random_reg > config_.random_max)
            fail("random register out of bounds");
        if (static_cast<int>(vm.call_stack.size()) > kCallStackLimit)
            fail("call stack too deep");
        if (vm.pc < 0 || vm.pc > vm.program.size()) fail("pc out of range");
        carried += vm.flags_carried;
        if (!vm.alive()) continue;
        if (!map_.in_bounds(bug.pos)) fail("position out of bounds");
        if (map_.at(bug.pos) == Terrain::barrier) fail("standing in a barrier");
        for (const CybugEntry& other : bugs_)
            if (other.id != bug.id && other.vm.alive() && other.pos == bug.pos)
                fail("two living cybugs share a cell");
    }

    if (map_.count(Terrain::flag) + carried != initial_flags_) fail("flags not conserved");
    int scored = 0;
    for (const auto& [team, score] : scores_) scored += score.flags;
    if (scored != carried) fail("flag scores disagree with carried flags");
    if (map_.count(Terrain::mine) > initial_mines_) fail("mines appeared");
    if (tick_ > config_.max_ticks) fail("tick beyond limit");
}

void InvariantMonitor::observe(const World& world) {
    world.check_invariants();

    const int mines = world.map().count(Terrain::mine);
    if (last_mines_ && mines > *last_mines_)
        throw std::logic_error("invariant: mine count increased");
    last_mines_ = mines;

    for (const CybugEntry& bug : world.cybugs()) {
        auto [it, inserted] = last_damage_.try_emplace(bug.id, bug.vm.damage);
        if (!inserted && bug.vm.damage < it->second)
            throw std::logic_error("invariant: damage decreased");
        it->second = bug.vm.damage;
    }
}

}  // namespace cybug::sim
