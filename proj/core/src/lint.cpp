#include "cybug/lint.hpp"

#include <deque>
#include <set>
#include <string>

namespace cybug::caicl {

namespace {

const Gosub* as_gosub(const Instruction& instr) { return std::get_if<Gosub>(&instr.op); }

std::vector<std::vector<int>> successor_lists(const Cfg& cfg) {
    std::vector<std::vector<int>> succ(cfg.node_count);
    for (const Edge& e : cfg.edges)
        if (e.to < cfg.node_count) succ[e.from].push_back(e.to);
    return succ;
}

std::vector<bool> reachable_from(const std::vector<std::vector<int>>& succ, int start) {
    std::vector<bool> seen(succ.size(), false);
    std::deque<int> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
        int node = queue.front();
        queue.pop_front();
        for (int next : succ[node])
            if (!seen[next]) {
                seen[next] = true;
                queue.push_back(next);
            }
    }
    return seen;
}

}  // namespace

std::vector<int> unreachable_indices(const Program& p) {
    const std::vector<bool> reach = reachable_from_entry(build_cfg(p));
    std::vector<int> out;
    for (int i = 0; i < p.size(); ++i)
        if (!reach[i]) out.push_back(i);
    return out;
}

std::vector<std::pair<int, int>> unreachable_regions(const Program& p) {
    std::set<int> label_starts;
    for (const auto& [name, index] : p.labels) label_starts.insert(index);

    std::vector<std::pair<int, int>> regions;
    for (int i : unreachable_indices(p)) {
        bool extends = !regions.empty() && regions.back().second == i - 1 &&
                       !label_starts.contains(i);
        if (extends)
            regions.back().second = i;
        else
            regions.push_back({i, i});
    }
    return regions;
}

std::vector<Diagnostic> lint(const Program& p) {
    std::vector<Diagnostic> out;

    for (int i : unreachable_indices(p))
        out.push_back({Severity::warning, diag::unreachable_code, p.instructions[i].span,
                       "statement can never execute"});

    std::set<std::string> referenced;
    for (const auto& [span, instr] : p.instructions) {
        const std::string* target = nullptr;
        const std::string* raw = nullptr;
        if (const auto* g = std::get_if<Goto>(&instr.op)) {
            target = &g->folded;
            raw = &g->target;
        } else if (const auto* g = as_gosub(instr)) {
            target = &g->folded;
            raw = &g->target;
        }
        if (!target) continue;
        referenced.insert(*target);
        if (!p.labels.contains(*target))
            out.push_back({Severity::warning, diag::undefined_label, span,
                           "label '" + *raw + "' is not defined"});
    }

    for (const LabelDef& def : p.label_defs)
        if (!referenced.contains(def.folded))
            out.push_back({Severity::warning, diag::unused_label, def.span,
                           "label '" + def.raw + "' is never used"});

    // missing-return: a gosub whose subroutine can never give control back,
    // either because no return is reachable from its entry or because the
    // body can walk off the end of the program.
    const Cfg cfg = build_cfg(p);
    const auto succ = successor_lists(cfg);
    std::set<std::string> flagged;
    for (const auto& [span, instr] : p.instructions) {
        const Gosub* g = as_gosub(instr);
        if (!g || flagged.contains(g->folded)) continue;
        auto target = p.resolve(g->folded);
        if (!target) continue;

        const std::vector<bool> body = reachable_from(succ, *target);
        bool returns = false;
        bool halts = false;
        for (int i = 0; i < cfg.node_count; ++i) {
            if (!body[i]) continue;
            if (std::holds_alternative<Return>(p.at(i).op)) returns = true;
        }
        for (const Edge& e : cfg.edges)
            if (body[e.from] && e.to == cfg.node_count && e.kind == EdgeKind::halt)
                halts = true;
        if (!returns || halts) {
            flagged.insert(g->folded);
            out.push_back({Severity::warning, diag::missing_return, span,
                           "subroutine '" + g->target + "' cannot return"});
        }
    }
    return out;
}

}  // namespace cybug::caicl
