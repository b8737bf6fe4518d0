#pragma once

#include <vector>

#include "cybug/ast.hpp"

namespace cybug::caicl {

// Control-flow graph over instruction indices. The index one past the last
// instruction is the exit: an edge pointing there is either a `ret` (the
// instruction returns to a caller) or a `halt` (execution falls off the end).
enum class EdgeKind {
    fallthrough,   // next instruction
    jump,          // unconditional goto
    taken,         // conditional's guard true
    call,          // gosub target
    continuation,  // resume point after a gosub returns
    ret,           // return to caller
    halt,          // off the end of the program
};

struct Edge {
    int from = 0;
    int to = 0;
    EdgeKind kind = EdgeKind::fallthrough;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Cfg {
    int node_count = 0;  // == program instruction count; exit node == node_count
    std::vector<Edge> edges;

    std::vector<Edge> edges_from(int node) const;
};

// Builds the graph. Every instruction index is a node; an If contributes
// exactly two edges (taken, fallthrough); a Gosub contributes call +
// continuation; a jump to an undefined label degrades to a no-op
// fallthrough, matching its run-time behavior.
Cfg build_cfg(const Program& p);

// reachable[i] == instruction i lies on some path from entry (index 0).
// Follows every edge kind, so gosub continuations count as reachable even
// if the subroutine never returns: an over-approximation, never an under-.
std::vector<bool> reachable_from_entry(const Cfg& cfg);

}  // namespace cybug::caicl
