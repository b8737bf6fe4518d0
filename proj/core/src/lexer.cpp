#include "cybug/token.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace cybug::caicl {

std::string fold_ascii(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s)
        out.push_back(static_cast<char>(std::tolower(c)));
    return out;
}

namespace {

const std::unordered_map<std::string_view, Keyword>& keyword_table() {
    static const std::unordered_map<std::string_view, Keyword> table = {
        {"raise", Keyword::kw_raise},       {"lower", Keyword::kw_lower},
        {"shield", Keyword::kw_shield},     {"move", Keyword::kw_move},
        {"forward", Keyword::kw_forward},   {"backward", Keyword::kw_backward},
        {"turn", Keyword::kw_turn},         {"left", Keyword::kw_left},
        {"right", Keyword::kw_right},       {"long", Keyword::kw_long},
        {"range", Keyword::kw_range},       {"scan", Keyword::kw_scan},
        {"gps", Keyword::kw_gps},           {"launch", Keyword::kw_launch},
        {"missile", Keyword::kw_missile},   {"fire", Keyword::kw_fire},
        {"gun", Keyword::kw_gun},           {"throw", Keyword::kw_throw},
        {"grenade", Keyword::kw_grenade},   {"discharge", Keyword::kw_discharge},
        {"energy", Keyword::kw_energy},     {"self", Keyword::kw_self},
        {"destruct", Keyword::kw_destruct}, {"generate", Keyword::kw_generate},
        {"random", Keyword::kw_random},     {"goto", Keyword::kw_goto},
        {"gosub", Keyword::kw_gosub},       {"return", Keyword::kw_return},
        {"name", Keyword::kw_name},         {"if", Keyword::kw_if},
        {"then", Keyword::kw_then},         {"found", Keyword::kw_found},
        {"bump", Keyword::kw_bump},         {"barrier", Keyword::kw_barrier},
        {"is", Keyword::kw_is},             {"fuel", Keyword::kw_fuel},
        {"damage", Keyword::kw_damage},     {"enemy", Keyword::kw_enemy},
        {"flag", Keyword::kw_flag},         {"mine", Keyword::kw_mine},
    };
    return table;
}

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool ident_cont(unsigned char c) { return std::isalnum(c) || c == '_'; }

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (pos_ < src_.size()) {
            unsigned char c = src_[pos_];
            if (c == '\n') {
                ++pos_;
                ++line_;
                col_ = 1;
                continue;
            }
            if (c == '\r' || c == ' ' || c == '\t') {
                advance(1);
                continue;
            }
            if (c == '#') {
                skip_to_eol();
                continue;
            }
            if (ident_start(c)) {
                tokens.push_back(lex_word());
                continue;
            }
            if (std::isdigit(c)) {
                tokens.push_back(lex_number());
                continue;
            }
            if (c == ':') {
                tokens.push_back(single(TokenKind::colon, ":"));
                continue;
            }
            if (c == '<' || c == '>' || c == '=') {
                tokens.push_back(lex_comparator());
                continue;
            }
            tokens.push_back(single(TokenKind::error, std::string(1, static_cast<char>(c))));
        }
        return tokens;
    }

private:
    void advance(std::size_t n) {
        pos_ += n;
        col_ += static_cast<int>(n);
    }

    void skip_to_eol() {
        while (pos_ < src_.size() && src_[pos_] != '\n')
            advance(1);
    }

    Token single(TokenKind kind, std::string text) {
        Token t;
        t.kind = kind;
        t.span = {line_, col_, col_};
        t.text = std::move(text);
        t.folded = fold_ascii(t.text);
        advance(1);
        return t;
    }

    Token lex_word() {
        std::size_t start = pos_;
        int col0 = col_;
        while (pos_ < src_.size() && ident_cont(static_cast<unsigned char>(src_[pos_])))
            advance(1);
        Token t;
        t.text = std::string(src_.substr(start, pos_ - start));
        t.folded = fold_ascii(t.text);
        t.span = {line_, col0, col_ - 1};
        auto it = keyword_table().find(t.folded);
        if (it != keyword_table().end()) {
            t.kind = TokenKind::keyword;
            t.keyword = it->second;
        } else {
            t.kind = TokenKind::identifier;
        }
        return t;
    }

    Token lex_number() {
        std::size_t start = pos_;
        int col0 = col_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            advance(1);
        Token t;
        t.kind = TokenKind::number;
        t.text = std::string(src_.substr(start, pos_ - start));
        t.folded = t.text;
        t.span = {line_, col0, col_ - 1};
        try {
            t.value = std::stoll(t.text);
        } catch (const std::out_of_range&) {
            t.value = std::numeric_limits<long long>::max();
        }
        return t;
    }

    Token lex_comparator() {
        int col0 = col_;
        char c = src_[pos_];
        advance(1);
        std::string text(1, c);
        if ((c == '<' || c == '>') && pos_ < src_.size() && src_[pos_] == '=') {
            text.push_back('=');
            advance(1);
        }
        Token t;
        t.kind = TokenKind::comparator;
        t.text = text;
        t.folded = text;
        t.span = {line_, col0, col_ - 1};
        if (text == "<") t.cmp = Comparator::lt;
        else if (text == ">") t.cmp = Comparator::gt;
        else if (text == "=") t.cmp = Comparator::eq;
        else if (text == "<=") t.cmp = Comparator::le;
        else t.cmp = Comparator::ge;
        return t;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
    return Lexer(source).run();
}

}  // namespace cybug::caicl
