#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cybug/ast.hpp"
#include "cybug/geometry.hpp"
#include "cybug/rules.hpp"

namespace cybug::sim {

using caicl::EntityKind;

enum class MoveDir { forward, backward };
enum class TurnDir { left, right };
enum class ScanKind { long_range, forward, left, right, gps };
enum class Weapon { missile, gun, grenade };
enum class IdleReason { budget_exhausted, program_halted };

// The one thing a Cybug does per tick.
struct Action {
    enum class Kind { move, turn, scan, fire, discharge, shield_set, self_destruct, idle };

    Kind kind = Kind::idle;
    MoveDir move = MoveDir::forward;
    TurnDir turn = TurnDir::left;
    ScanKind scan = ScanKind::long_range;
    Weapon weapon = Weapon::missile;
    bool shield_up = false;
    IdleReason idle = IdleReason::program_halted;

    static Action make_move(MoveDir d) { return {.kind = Kind::move, .move = d}; }
    static Action make_turn(TurnDir d) { return {.kind = Kind::turn, .turn = d}; }
    static Action make_scan(ScanKind k) { return {.kind = Kind::scan, .scan = k}; }
    static Action make_fire(Weapon w) { return {.kind = Kind::fire, .weapon = w}; }
    static Action make_discharge() { return {.kind = Kind::discharge}; }
    static Action make_shield(bool up) { return {.kind = Kind::shield_set, .shield_up = up}; }
    static Action make_self_destruct() { return {.kind = Kind::self_destruct}; }
    static Action make_idle(IdleReason r) { return {.kind = Kind::idle, .idle = r}; }

    friend bool operator==(const Action&, const Action&) = default;
};

struct ScanResult {
    EntityKind kind = EntityKind::barrier;
    int distance = 0;  // ≥ 1 when reported

    friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

struct Percepts {
    std::optional<ScanResult> scan_result;
    bool bump = false;
    std::optional<GridPoint> gps;
};

inline constexpr int kCallStackLimit = 16;

struct CybugVmState {
    caicl::Program program;
    int pc = 0;
    std::vector<int> call_stack;  // return indices, depth ≤ kCallStackLimit
    int fuel = 0;
    int damage = 0;
    int random_reg = 1;
    std::optional<ScanResult> scan_reg;
    bool bump_flag = false;
    bool shield_up = false;
    Heading heading = Heading::north;
    std::map<Weapon, int> ammo;
    int flags_carried = 0;
    bool faulted = false;

    bool alive() const { return damage < 100; }
};

enum class FaultKind { call_stack_overflow, return_without_call };

struct StepResult {
    Action action;
    std::vector<int> executed;  // instruction indices, in execution order
    std::optional<FaultKind> fault;
};

// Services the battlefield provides to a script mid-tick: instant
// instructions act through here so the host can observe them.
class StepHost {
public:
    virtual ~StepHost() = default;
    virtual int random_in(int n) = 0;          // uniform 1..n from the match PRNG
    virtual GridPoint gps_scan() = 0;          // own coordinates
    virtual void shield_changed(bool up) = 0;  // called when the shield flips
};

CybugVmState init_vm(caicl::Program program, const RuleConfig& config);

// Runs the program from pc until one acting instruction fires or the
// budget runs out. Instant instructions cost one budget unit each; `name`
// is free. pc persists across calls, pinning at the program end.
StepResult step_tick(CybugVmState& state, const RuleConfig& config, StepHost& host);

bool eval_condition(const caicl::Condition& cond, const CybugVmState& state,
                    const RuleConfig& config);

}  // namespace cybug::sim
