#include "cybug/vm.hpp"

namespace cybug::sim {

using namespace caicl;

CybugVmState init_vm(Program program, const RuleConfig& config) {
    CybugVmState state;
    state.program = std::move(program);
    state.fuel = config.fuel_start;
    state.ammo = {{Weapon::missile, config.missile_ammo},
                  {Weapon::gun, config.gun_ammo},
                  {Weapon::grenade, config.grenade_ammo}};
    return state;
}

namespace {

bool compare(int lhs, Comparator cmp, int rhs) {
    switch (cmp) {
        case Comparator::lt: return lhs < rhs;
        case Comparator::gt: return lhs > rhs;
        case Comparator::eq: return lhs == rhs;
        case Comparator::le: return lhs <= rhs;
        case Comparator::ge: return lhs >= rhs;
    }
    return false;
}

// Executes one op. Returns the tick-ending Action for acting ops, nullopt
// for instant ones (which advance pc themselves).
std::optional<Action> exec_op(const Op& op, CybugVmState& state, const RuleConfig& config,
                              StepHost& host, std::optional<FaultKind>& fault) {
    struct Visitor {
        CybugVmState& s;
        const RuleConfig& cfg;
        StepHost& host;
        std::optional<FaultKind>& fault;

        void set_shield(bool up) {
            ++s.pc;
            if (s.shield_up == up) return;
            s.shield_up = up;
            host.shield_changed(up);
        }
        std::optional<Action> acting(Action a) {
            ++s.pc;
            return a;
        }

        std::optional<Action> operator()(const NameDecl&) {
            ++s.pc;
            return std::nullopt;
        }
        std::optional<Action> operator()(const RaiseShield&) {
            set_shield(true);
            return std::nullopt;
        }
        std::optional<Action> operator()(const LowerShield&) {
            set_shield(false);
            return std::nullopt;
        }
        std::optional<Action> operator()(const MoveForward&) {
            return acting(Action::make_move(MoveDir::forward));
        }
        std::optional<Action> operator()(const MoveBackward&) {
            return acting(Action::make_move(MoveDir::backward));
        }
        std::optional<Action> operator()(const TurnLeft&) {
            return acting(Action::make_turn(TurnDir::left));
        }
        std::optional<Action> operator()(const TurnRight&) {
            return acting(Action::make_turn(TurnDir::right));
        }
        std::optional<Action> operator()(const LongRangeScan&) {
            return acting(Action::make_scan(ScanKind::long_range));
        }
        std::optional<Action> operator()(const ScanForward&) {
            return acting(Action::make_scan(ScanKind::forward));
        }
        std::optional<Action> operator()(const ScanLeft&) {
            return acting(Action::make_scan(ScanKind::left));
        }
        std::optional<Action> operator()(const ScanRight&) {
            return acting(Action::make_scan(ScanKind::right));
        }
        std::optional<Action> operator()(const GpsScan&) {
            host.gps_scan();
            ++s.pc;
            return std::nullopt;
        }
        std::optional<Action> operator()(const LaunchMissile&) {
            return acting(Action::make_fire(Weapon::missile));
        }
        std::optional<Action> operator()(const FireGun&) {
            return acting(Action::make_fire(Weapon::gun));
        }
        std::optional<Action> operator()(const ThrowGrenade&) {
            return acting(Action::make_fire(Weapon::grenade));
        }
        std::optional<Action> operator()(const DischargeEnergy&) {
            return acting(Action::make_discharge());
        }
        std::optional<Action> operator()(const GenerateRandom&) {
            s.random_reg = host.random_in(cfg.random_max);
            ++s.pc;
            return std::nullopt;
        }
        std::optional<Action> operator()(const SelfDestruct&) {
            return acting(Action::make_self_destruct());
        }
        std::optional<Action> operator()(const Goto& g) {
            if (auto target = s.program.resolve(g.folded))
                s.pc = *target;
            else
                ++s.pc;  // undefined label: documented no-op
            return std::nullopt;
        }
        std::optional<Action> operator()(const Gosub& g) {
            auto target = s.program.resolve(g.folded);
            if (!target) {
                ++s.pc;
                return std::nullopt;
            }
            if (static_cast<int>(s.call_stack.size()) >= kCallStackLimit) {
                fault = FaultKind::call_stack_overflow;
                return std::nullopt;
            }
            s.call_stack.push_back(s.pc + 1);
            s.pc = *target;
            return std::nullopt;
        }
        std::optional<Action> operator()(const Return&) {
            if (s.call_stack.empty()) {
                fault = FaultKind::return_without_call;
                return std::nullopt;
            }
            s.pc = s.call_stack.back();
            s.call_stack.pop_back();
            return std::nullopt;
        }
    };
    return std::visit(Visitor{state, config, host, fault}, op);
}

bool is_free_skip(const Instruction& instr) {
    return !instr.guard && std::holds_alternative<NameDecl>(instr.op);
}

}  // namespace

bool eval_condition(const Condition& cond, const CybugVmState& state, const RuleConfig& config) {
    struct Visitor {
        const CybugVmState& s;
        const RuleConfig& cfg;

        bool operator()(const ScanFound& c) const {
            if (!s.scan_reg || s.scan_reg->kind != c.kind) return false;
            const int relevant = c.kind == EntityKind::enemy ? cfg.missile_range
                                                             : cfg.scan_range_long;
            return s.scan_reg->distance <= relevant;
        }
        bool operator()(const BumpBarrier&) const { return s.bump_flag; }
        bool operator()(const RandomIs& c) const { return s.random_reg == c.value; }
        bool operator()(const FuelCmp& c) const { return compare(s.fuel, c.cmp, c.value); }
        bool operator()(const DamageCmp& c) const { return compare(s.damage, c.cmp, c.value); }
    };
    return std::visit(Visitor{state, config}, cond);
}

StepResult step_tick(CybugVmState& state, const RuleConfig& config, StepHost& host) {
    StepResult result;
    result.action = Action::make_idle(IdleReason::program_halted);
    if (state.faulted || !state.alive()) return result;

    const int size = state.program.size();
    int units = 0;

    while (true) {
        if (state.pc >= size || state.pc < 0) {
            state.pc = size;
            result.action = Action::make_idle(IdleReason::program_halted);
            return result;
        }
        const Instruction& instr = state.program.at(state.pc);

        if (is_free_skip(instr)) {
            ++state.pc;
            continue;
        }
        if (units == config.budget) {
            result.action = Action::make_idle(IdleReason::budget_exhausted);
            return result;
        }

        if (instr.guard) {
            ++units;
            result.executed.push_back(state.pc);
            if (!eval_condition(*instr.guard, state, config)) {
                ++state.pc;
                continue;
            }
            if (std::holds_alternative<NameDecl>(instr.op)) {
                ++state.pc;
                continue;
            }
            if (units == config.budget) {
                // Guard held but the budget cannot pay for the body; the
                // conditional re-evaluates next tick.
                result.action = Action::make_idle(IdleReason::budget_exhausted);
                return result;
            }
            ++units;
        } else {
            ++units;
            result.executed.push_back(state.pc);
        }

        std::optional<Action> acted = exec_op(instr.op, state, config, host, result.fault);
        if (result.fault) {
            state.faulted = true;
            result.action = Action::make_idle(IdleReason::program_halted);
            return result;
        }
        if (acted) {
            result.action = *acted;
            return result;
        }
    }
}

}  // namespace cybug::sim
