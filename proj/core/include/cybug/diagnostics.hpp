#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cybug/source_span.hpp"

namespace cybug::caicl {

enum class Severity { error, warning, info };

// Closed set of diagnostic codes. Anything emitted by the toolchain uses
// one of these identifiers, so downstream tooling can filter on them.
namespace diag {
inline constexpr const char* recovered_syntax = "recovered-syntax";
inline constexpr const char* dangling_then = "dangling-then";
inline constexpr const char* undefined_label = "undefined-label";
inline constexpr const char* duplicate_label = "duplicate-label";
inline constexpr const char* duplicate_name = "duplicate-name";
inline constexpr const char* dangling_label = "dangling-label";
inline constexpr const char* syntax_error = "syntax-error";
inline constexpr const char* unreachable_code = "unreachable-code";
inline constexpr const char* unused_label = "unused-label";
inline constexpr const char* missing_return = "missing-return";
}  // namespace diag

struct Diagnostic {
    Severity severity = Severity::error;
    std::string code;
    SourceSpan span;
    std::string message;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

std::string_view severity_name(Severity s);

// CLI-facing one-line form: FILE:LINE:COL: SEVERITY[code] message
std::string format_diagnostic(const Diagnostic& d, std::string_view file);

bool has_errors(const std::vector<Diagnostic>& diags);

}  // namespace cybug::caicl
