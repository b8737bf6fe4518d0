#pragma once

namespace cybug::caicl {

// Half-open in spirit but stored inclusive: a span covers source
// columns [column_start, column_end] on a single 1-based line.
struct SourceSpan {
    int line = 1;
    int column_start = 1;
    int column_end = 1;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

}  // namespace cybug::caicl
