#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cybug/source_span.hpp"
#include "cybug/token.hpp"

namespace cybug::caicl {

enum class EntityKind { enemy, flag, barrier, mine, fuel };

std::string_view entity_kind_name(EntityKind k);

// Conditions of `if` statements.
struct ScanFound {
    EntityKind kind;
    friend bool operator==(const ScanFound&, const ScanFound&) = default;
};
struct BumpBarrier {
    friend bool operator==(const BumpBarrier&, const BumpBarrier&) = default;
};
struct RandomIs {
    int value;
    friend bool operator==(const RandomIs&, const RandomIs&) = default;
};
struct FuelCmp {
    Comparator cmp;
    int value;
    friend bool operator==(const FuelCmp&, const FuelCmp&) = default;
};
struct DamageCmp {
    Comparator cmp;
    int value;
    friend bool operator==(const DamageCmp&, const DamageCmp&) = default;
};

using Condition = std::variant<ScanFound, BumpBarrier, RandomIs, FuelCmp, DamageCmp>;

// Statement operations. One struct per statement form; `If` is not an op —
// a conditional is an Instruction with a guard, which makes nested
// conditionals unrepresentable (the dialect allows a single level only).
struct NameDecl {
    std::string id;
    friend bool operator==(const NameDecl&, const NameDecl&) = default;
};
struct RaiseShield { friend bool operator==(const RaiseShield&, const RaiseShield&) = default; };
struct LowerShield { friend bool operator==(const LowerShield&, const LowerShield&) = default; };
struct MoveForward { friend bool operator==(const MoveForward&, const MoveForward&) = default; };
struct MoveBackward { friend bool operator==(const MoveBackward&, const MoveBackward&) = default; };
struct TurnLeft { friend bool operator==(const TurnLeft&, const TurnLeft&) = default; };
struct TurnRight { friend bool operator==(const TurnRight&, const TurnRight&) = default; };
struct LongRangeScan { friend bool operator==(const LongRangeScan&, const LongRangeScan&) = default; };
struct ScanForward { friend bool operator==(const ScanForward&, const ScanForward&) = default; };
struct ScanLeft { friend bool operator==(const ScanLeft&, const ScanLeft&) = default; };
struct ScanRight { friend bool operator==(const ScanRight&, const ScanRight&) = default; };
struct GpsScan { friend bool operator==(const GpsScan&, const GpsScan&) = default; };
struct LaunchMissile { friend bool operator==(const LaunchMissile&, const LaunchMissile&) = default; };
struct FireGun { friend bool operator==(const FireGun&, const FireGun&) = default; };
struct ThrowGrenade { friend bool operator==(const ThrowGrenade&, const ThrowGrenade&) = default; };
struct DischargeEnergy { friend bool operator==(const DischargeEnergy&, const DischargeEnergy&) = default; };
struct GenerateRandom { friend bool operator==(const GenerateRandom&, const GenerateRandom&) = default; };
struct SelfDestruct { friend bool operator==(const SelfDestruct&, const SelfDestruct&) = default; };
struct Goto {
    std::string target;  // verbatim
    std::string folded;
    friend bool operator==(const Goto&, const Goto&) = default;
};
struct Gosub {
    std::string target;
    std::string folded;
    friend bool operator==(const Gosub&, const Gosub&) = default;
};
struct Return { friend bool operator==(const Return&, const Return&) = default; };

using Op = std::variant<
    NameDecl, RaiseShield, LowerShield,
    MoveForward, MoveBackward, TurnLeft, TurnRight,
    LongRangeScan, ScanForward, ScanLeft, ScanRight, GpsScan,
    LaunchMissile, FireGun, ThrowGrenade, DischargeEnergy,
    GenerateRandom, SelfDestruct,
    Goto, Gosub, Return>;

struct Instruction {
    std::optional<Condition> guard;  // present = `if <guard> then <op>`
    Op op;

    bool is_conditional() const { return guard.has_value(); }
    friend bool operator==(const Instruction&, const Instruction&) = default;
};

struct SourcedInstruction {
    SourceSpan span;
    Instruction instr;
};

struct LabelDef {
    std::string raw;
    std::string folded;
    SourceSpan span;
    int index = 0;  // instruction index the label binds to
};

struct Program {
    std::string name = "unnamed";
    std::vector<SourcedInstruction> instructions;
    std::map<std::string, int> labels;  // case-folded label -> instruction index
    std::vector<LabelDef> label_defs;   // in definition order, for tooling

    int size() const { return static_cast<int>(instructions.size()); }
    const Instruction& at(int i) const { return instructions[i].instr; }

    std::optional<int> resolve(std::string_view folded_label) const;
};

// Structural equality: same name, instruction sequence and label bindings.
// Spans and label spelling are presentation detail and ignored.
bool structurally_equal(const Program& a, const Program& b);

// Acting ops consume the agent's one action for the tick; everything else
// is instant bookkeeping.
bool is_acting(const Op& op);

}  // namespace cybug::caicl
