#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cybug/source_span.hpp"

namespace cybug::caicl {

enum class Keyword {
    kw_raise, kw_lower, kw_shield,
    kw_move, kw_forward, kw_backward,
    kw_turn, kw_left, kw_right,
    kw_long, kw_range, kw_scan, kw_gps,
    kw_launch, kw_missile, kw_fire, kw_gun, kw_throw, kw_grenade,
    kw_discharge, kw_energy,
    kw_self, kw_destruct,
    kw_generate, kw_random,
    kw_goto, kw_gosub, kw_return,
    kw_name, kw_if, kw_then, kw_found, kw_bump, kw_barrier, kw_is,
    kw_fuel, kw_damage, kw_enemy, kw_flag, kw_mine,
};

enum class Comparator { lt, gt, eq, le, ge };

enum class TokenKind { keyword, identifier, number, colon, comparator, error };

struct Token {
    TokenKind kind = TokenKind::error;
    SourceSpan span;
    Keyword keyword = Keyword::kw_name;  // valid when kind == keyword
    std::string text;                    // verbatim source text
    std::string folded;                  // case-folded form (identifiers)
    long long value = 0;                 // valid when kind == number
    Comparator cmp = Comparator::eq;     // valid when kind == comparator

    bool is_kw(Keyword k) const { return kind == TokenKind::keyword && keyword == k; }
};

std::string fold_ascii(std::string_view s);

// Splits source into tokens. Keywords are matched case-insensitively,
// identifiers keep their verbatim spelling plus a folded form. Blank lines
// and `#` comments produce nothing. Never fails: characters outside the
// grammar become error tokens with their span.
std::vector<Token> tokenize(std::string_view source);

}  // namespace cybug::caicl
