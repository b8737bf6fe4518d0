#include "cybug/diagnostics.hpp"

#include <algorithm>
#include <sstream>

namespace cybug::caicl {

std::string_view severity_name(Severity s) {
    switch (s) {
        case Severity::error: return "error";
        case Severity::warning: return "warning";
        case Severity::info: return "info";
    }
    return "?";
}

std::string format_diagnostic(const Diagnostic& d, std::string_view file) {
    std::ostringstream out;
    out << file << ':' << d.span.line << ':' << d.span.column_start << ": "
        << severity_name(d.severity) << '[' << d.code << "] " << d.message;
    return out.str();
}

bool has_errors(const std::vector<Diagnostic>& diags) {
    return std::any_of(diags.begin(), diags.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::error; });
}

}  // namespace cybug::caicl
