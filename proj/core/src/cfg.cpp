#include "cybug/cfg.hpp"

#include <deque>

namespace cybug::caicl {

namespace {

std::optional<int> jump_target(const Program& p, const Op& op) {
    if (const auto* g = std::get_if<Goto>(&op)) return p.resolve(g->folded);
    if (const auto* g = std::get_if<Gosub>(&op)) return p.resolve(g->folded);
    return std::nullopt;
}

}  // namespace

std::vector<Edge> Cfg::edges_from(int node) const {
    std::vector<Edge> out;
    for (const Edge& e : edges)
        if (e.from == node) out.push_back(e);
    return out;
}

Cfg build_cfg(const Program& p) {
    Cfg cfg;
    const int n = p.size();
    cfg.node_count = n;

    auto add = [&](int from, int to, EdgeKind kind) {
        if (to == n && kind != EdgeKind::ret) kind = EdgeKind::halt;
        cfg.edges.push_back({from, to, kind});
    };

    for (int i = 0; i < n; ++i) {
        const Instruction& instr = p.at(i);
        if (instr.guard) {
            // Taken branch: where execution goes when the guard holds and
            // the inner op has run.
            int taken_to = i + 1;
            EdgeKind taken_kind = EdgeKind::taken;
            if (std::holds_alternative<Return>(instr.op)) {
                taken_to = n;
                taken_kind = EdgeKind::ret;
            } else if (auto t = jump_target(p, instr.op)) {
                taken_to = *t;
            }
            add(i, taken_to, taken_kind);
            add(i, i + 1, EdgeKind::fallthrough);
            continue;
        }
        if (std::holds_alternative<Return>(instr.op)) {
            add(i, n, EdgeKind::ret);
            continue;
        }
        if (std::holds_alternative<Goto>(instr.op)) {
            if (auto t = jump_target(p, instr.op))
                add(i, *t, EdgeKind::jump);
            else
                add(i, i + 1, EdgeKind::fallthrough);
            continue;
        }
        if (std::holds_alternative<Gosub>(instr.op)) {
            if (auto t = jump_target(p, instr.op)) {
                add(i, *t, EdgeKind::call);
                add(i, i + 1, EdgeKind::continuation);
            } else {
                add(i, i + 1, EdgeKind::fallthrough);
            }
            continue;
        }
        add(i, i + 1, EdgeKind::fallthrough);
    }
    return cfg;
}

std::vector<bool> reachable_from_entry(const Cfg& cfg) {
    std::vector<bool> reachable(cfg.node_count, false);
    if (cfg.node_count == 0) return reachable;

    std::vector<std::vector<int>> succ(cfg.node_count);
    for (const Edge& e : cfg.edges)
        if (e.to < cfg.node_count) succ[e.from].push_back(e.to);

    std::deque<int> queue{0};
    reachable[0] = true;
    while (!queue.empty()) {
        int node = queue.front();
        queue.pop_front();
        for (int next : succ[node]) {
            if (!reachable[next]) {
                reachable[next] = true;
                queue.push_back(next);
            }
        }
    }
    return reachable;
}

}  // namespace cybug::caicl
