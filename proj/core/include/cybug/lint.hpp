#pragma once

#include <utility>
#include <vector>

#include "cybug/cfg.hpp"
#include "cybug/diagnostics.hpp"

namespace cybug::caicl {

// Static findings over a parsed program: unreachable-code, undefined-label,
// unused-label, missing-return. All are warnings; none stop execution.
std::vector<Diagnostic> lint(const Program& p);

// Instruction indices with no path from entry, ascending.
std::vector<int> unreachable_indices(const Program& p);

// The same indices grouped into maximal contiguous runs, additionally split
// where a label is defined (a label starts a new region even when the run
// continues through it). Inclusive [first, last] index pairs.
std::vector<std::pair<int, int>> unreachable_regions(const Program& p);

}  // namespace cybug::caicl
