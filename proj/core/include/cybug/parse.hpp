#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cybug/ast.hpp"
#include "cybug/diagnostics.hpp"

namespace cybug::caicl {

enum class ParseMode {
    lenient,  // recover from the dialect's known bad spellings, warn
    strict,   // every recovery and unresolved reference is an error
};

struct ParseResult {
    std::optional<Program> program;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return program.has_value(); }
};

// Parses a whole script. Lenient mode is total: it always yields a program,
// skipping lines it cannot make sense of (with an error diagnostic). Strict
// mode yields no program when any error was emitted, and every recovery
// counts as an error there.
ParseResult parse(std::string_view source, ParseMode mode = ParseMode::lenient);

// Renders a program back to canonical source: parse(to_source(p)) needs no
// recovery and is structurally equal to p.
std::string to_source(const Program& p);

}  // namespace cybug::caicl
