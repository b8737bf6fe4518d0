#include <map>
#include <sstream>

#include "cybug/parse.hpp"

namespace cybug::caicl {

namespace {

std::string_view comparator_text(Comparator c) {
    switch (c) {
        case Comparator::lt: return "<";
        case Comparator::gt: return ">";
        case Comparator::eq: return "=";
        case Comparator::le: return "<=";
        case Comparator::ge: return ">=";
    }
    return "?";
}

void print_condition(std::ostream& out, const Condition& c) {
    struct Visitor {
        std::ostream& out;
        void operator()(const ScanFound& s) { out << "scan found " << entity_kind_name(s.kind); }
        void operator()(const BumpBarrier&) { out << "bump barrier"; }
        void operator()(const RandomIs& r) { out << "random is " << r.value; }
        void operator()(const FuelCmp& f) {
            out << "fuel is ";
            if (f.cmp != Comparator::eq) out << comparator_text(f.cmp) << ' ';
            out << f.value;
        }
        void operator()(const DamageCmp& d) {
            out << "damage is ";
            if (d.cmp != Comparator::eq) out << comparator_text(d.cmp) << ' ';
            out << d.value;
        }
    };
    std::visit(Visitor{out}, c);
}

void print_op(std::ostream& out, const Op& op) {
    struct Visitor {
        std::ostream& out;
        void operator()(const NameDecl& n) { out << "name " << n.id; }
        void operator()(const RaiseShield&) { out << "raise shield"; }
        void operator()(const LowerShield&) { out << "lower shield"; }
        void operator()(const MoveForward&) { out << "move forward"; }
        void operator()(const MoveBackward&) { out << "move backward"; }
        void operator()(const TurnLeft&) { out << "turn left"; }
        void operator()(const TurnRight&) { out << "turn right"; }
        void operator()(const LongRangeScan&) { out << "long range scan"; }
        void operator()(const ScanForward&) { out << "scan forward"; }
        void operator()(const ScanLeft&) { out << "scan left"; }
        void operator()(const ScanRight&) { out << "scan right"; }
        void operator()(const GpsScan&) { out << "gps scan"; }
        void operator()(const LaunchMissile&) { out << "launch missile"; }
        void operator()(const FireGun&) { out << "fire gun"; }
        void operator()(const ThrowGrenade&) { out << "throw grenade"; }
        void operator()(const DischargeEnergy&) { out << "discharge energy"; }
        void operator()(const GenerateRandom&) { out << "generate random"; }
        void operator()(const SelfDestruct&) { out << "self destruct"; }
        void operator()(const Goto& g) { out << "goto " << g.target; }
        void operator()(const Gosub& g) { out << "gosub " << g.target; }
        void operator()(const Return&) { out << "return"; }
    };
    std::visit(Visitor{out}, op);
}

}  // namespace

std::string to_source(const Program& p) {
    // Labels print just before the instruction they bind to, original
    // spelling preferred.
    std::map<int, std::vector<std::string>> labels_at;
    if (!p.label_defs.empty()) {
        for (const LabelDef& def : p.label_defs)
            labels_at[def.index].push_back(def.raw);
    } else {
        for (const auto& [folded, index] : p.labels)
            labels_at[index].push_back(folded);
    }

    std::ostringstream out;
    for (int i = 0; i < p.size(); ++i) {
        if (auto it = labels_at.find(i); it != labels_at.end())
            for (const std::string& label : it->second)
                out << label << ":\n";
        const Instruction& instr = p.at(i);
        if (instr.guard) {
            out << "if ";
            print_condition(out, *instr.guard);
            out << " then ";
        }
        print_op(out, instr.op);
        out << '\n';
    }
    return out.str();
}

}  // namespace cybug::caicl
