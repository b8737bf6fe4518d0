#include "cybug/ast.hpp"

namespace cybug::caicl {

std::string_view entity_kind_name(EntityKind k) {
    switch (k) {
        case EntityKind::enemy: return "enemy";
        case EntityKind::flag: return "flag";
        case EntityKind::barrier: return "barrier";
        case EntityKind::mine: return "mine";
        case EntityKind::fuel: return "fuel";
    }
    return "?";
}

std::optional<int> Program::resolve(std::string_view folded_label) const {
    auto it = labels.find(std::string(folded_label));
    if (it == labels.end()) return std::nullopt;
    return it->second;
}

namespace {

bool op_equal(const Op& a, const Op& b) {
    if (a.index() != b.index()) return false;
    if (const auto* ga = std::get_if<Goto>(&a))
        return ga->folded == std::get<Goto>(b).folded;
    if (const auto* sa = std::get_if<Gosub>(&a))
        return sa->folded == std::get<Gosub>(b).folded;
    return a == b;
}

}  // namespace

bool structurally_equal(const Program& a, const Program& b) {
    if (a.name != b.name) return false;
    if (a.labels != b.labels) return false;
    if (a.instructions.size() != b.instructions.size()) return false;
    for (std::size_t i = 0; i < a.instructions.size(); ++i) {
        const Instruction& x = a.instructions[i].instr;
        const Instruction& y = b.instructions[i].instr;
        if (x.guard != y.guard) return false;
        if (!op_equal(x.op, y.op)) return false;
    }
    return true;
}

bool is_acting(const Op& op) {
    return std::holds_alternative<MoveForward>(op) || std::holds_alternative<MoveBackward>(op) ||
           std::holds_alternative<TurnLeft>(op) || std::holds_alternative<TurnRight>(op) ||
           std::holds_alternative<LongRangeScan>(op) || std::holds_alternative<ScanForward>(op) ||
           std::holds_alternative<ScanLeft>(op) || std::holds_alternative<ScanRight>(op) ||
           std::holds_alternative<LaunchMissile>(op) || std::holds_alternative<FireGun>(op) ||
           std::holds_alternative<ThrowGrenade>(op) ||
           std::holds_alternative<DischargeEnergy>(op) ||
           std::holds_alternative<SelfDestruct>(op);
}

}  // namespace cybug::caicl
