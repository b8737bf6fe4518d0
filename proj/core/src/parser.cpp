#include "cybug/parse.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace cybug::caicl {

namespace {

struct Line {
    int number = 0;
    std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::vector<Token> tokens) {
    std::vector<Line> lines;
    for (auto& t : tokens) {
        if (lines.empty() || lines.back().number != t.span.line)
            lines.push_back({t.span.line, {}});
        lines.back().tokens.push_back(std::move(t));
    }
    return lines;
}

SourceSpan line_span(const Line& line) {
    return {line.number, line.tokens.front().span.column_start,
            line.tokens.back().span.column_end};
}

int clamp_to_int(long long v) {
    return static_cast<int>(std::clamp<long long>(v, 0, std::numeric_limits<int>::max()));
}

class Parser {
public:
    explicit Parser(ParseMode mode) : mode_(mode) {}

    ParseResult run(std::string_view source) {
        for (const Line& line : split_lines(tokenize(source)))
            handle_line(line);
        finish();

        ParseResult result;
        result.diagnostics = std::move(diags_);
        if (mode_ == ParseMode::lenient || !has_errors(result.diagnostics))
            result.program = std::move(prog_);
        return result;
    }

private:
    // A recovery is a warning when lenient, an error when strict.
    Severity recovery_severity() const {
        return mode_ == ParseMode::strict ? Severity::error : Severity::warning;
    }

    void report(Severity sev, const char* code, SourceSpan span, std::string message) {
        diags_.push_back({sev, code, span, std::move(message)});
    }

    void handle_line(const Line& line) {
        const auto& ts = line.tokens;

        // Label definition: `Ident:` alone on its line.
        if (ts.size() == 2 && ts[0].kind == TokenKind::identifier &&
            ts[1].kind == TokenKind::colon) {
            if (pending_then_) fail_pending_then("label definition");
            pending_labels_.push_back({ts[0].text, ts[0].folded, ts[0].span, 0});
            return;
        }

        if (ts.front().is_kw(Keyword::kw_if)) {
            if (pending_then_) fail_pending_then("another conditional");
            handle_if_line(line);
            return;
        }

        std::optional<Op> op = parse_statement(ts, 0, ts.size(), line);
        if (!op) return;

        if (pending_then_) {
            // Recovery R2: this statement is the action of the dangling `then`.
            report(recovery_severity(), diag::dangling_then, pending_then_->span,
                   "'if ... then' without an action; using the next line's statement");
            append({std::move(pending_then_->cond)}, std::move(*op), pending_then_->span);
            pending_then_.reset();
            return;
        }
        append(std::nullopt, std::move(*op), line_span(line));
    }

    void handle_if_line(const Line& line) {
        const auto& ts = line.tokens;
        std::size_t i = 1;
        std::optional<Condition> cond = parse_condition(ts, i, line);
        if (!cond) return;

        // Recovery R1: `if <cond> goto then <id>` for `if <cond> then goto <id>`.
        if (i + 3 == ts.size() && ts[i].is_kw(Keyword::kw_goto) &&
            ts[i + 1].is_kw(Keyword::kw_then) && ts[i + 2].kind == TokenKind::identifier) {
            report(recovery_severity(), diag::recovered_syntax, line_span(line),
                   "'goto then' read as 'then goto'");
            Op op = Goto{ts[i + 2].text, ts[i + 2].folded};
            refs_.push_back({ts[i + 2].text, ts[i + 2].folded, ts[i + 2].span});
            append(std::move(cond), std::move(op), line_span(line));
            return;
        }

        if (i >= ts.size() || !ts[i].is_kw(Keyword::kw_then)) {
            syntax_error(line, "expected 'then' after condition");
            return;
        }
        ++i;

        if (i == ts.size()) {
            // Recovery R2 arms here; the next statement line completes it.
            pending_then_ = Pending{std::move(*cond), line_span(line)};
            return;
        }

        if (ts[i].is_kw(Keyword::kw_if)) {
            syntax_error(line, "conditionals cannot nest");
            return;
        }
        std::optional<Op> op = parse_statement(ts, i, ts.size(), line);
        if (!op) return;
        append(std::move(cond), std::move(*op), line_span(line));
    }

    std::optional<Condition> parse_condition(const std::vector<Token>& ts, std::size_t& i,
                                             const Line& line) {
        auto take = [&](Keyword k) {
            if (i < ts.size() && ts[i].is_kw(k)) { ++i; return true; }
            return false;
        };

        if (take(Keyword::kw_scan)) {
            if (!take(Keyword::kw_found)) {
                syntax_error(line, "expected 'found' after 'scan'");
                return std::nullopt;
            }
            static constexpr std::pair<Keyword, EntityKind> kinds[] = {
                {Keyword::kw_enemy, EntityKind::enemy}, {Keyword::kw_flag, EntityKind::flag},
                {Keyword::kw_barrier, EntityKind::barrier}, {Keyword::kw_mine, EntityKind::mine},
                {Keyword::kw_fuel, EntityKind::fuel}};
            for (auto [kw, kind] : kinds)
                if (take(kw)) return Condition{ScanFound{kind}};
            syntax_error(line, "expected an entity kind after 'scan found'");
            return std::nullopt;
        }
        if (take(Keyword::kw_bump)) {
            if (!take(Keyword::kw_barrier)) {
                syntax_error(line, "expected 'barrier' after 'bump'");
                return std::nullopt;
            }
            return Condition{BumpBarrier{}};
        }
        if (take(Keyword::kw_random)) {
            if (!take(Keyword::kw_is) || i >= ts.size() || ts[i].kind != TokenKind::number) {
                syntax_error(line, "expected 'is <number>' after 'random'");
                return std::nullopt;
            }
            return Condition{RandomIs{clamp_to_int(ts[i++].value)}};
        }
        bool fuel = ts[i].is_kw(Keyword::kw_fuel);
        bool damage = ts[i].is_kw(Keyword::kw_damage);
        if (fuel || damage) {
            ++i;
            if (!take(Keyword::kw_is)) {
                syntax_error(line, "expected 'is' in comparison");
                return std::nullopt;
            }
            Comparator cmp = Comparator::eq;
            if (i < ts.size() && ts[i].kind == TokenKind::comparator) cmp = ts[i++].cmp;
            if (i >= ts.size() || ts[i].kind != TokenKind::number) {
                syntax_error(line, "expected a number in comparison");
                return std::nullopt;
            }
            int value = clamp_to_int(ts[i++].value);
            if (fuel) return Condition{FuelCmp{cmp, value}};
            return Condition{DamageCmp{cmp, value}};
        }
        syntax_error(line, "unrecognized condition");
        return std::nullopt;
    }

    // Parses ts[begin..end) as one statement. Emits a diagnostic and returns
    // nullopt when the tokens fit no statement form.
    std::optional<Op> parse_statement(const std::vector<Token>& ts, std::size_t begin,
                                      std::size_t end, const Line& line) {
        std::size_t i = begin;
        auto take = [&](Keyword k) {
            if (i < end && ts[i].is_kw(k)) { ++i; return true; }
            return false;
        };
        auto done = [&](Op op) -> std::optional<Op> {
            if (i != end) {
                syntax_error(line, "unexpected text after statement");
                return std::nullopt;
            }
            return op;
        };

        if (take(Keyword::kw_name)) {
            if (i < end && ts[i].kind == TokenKind::identifier) {
                std::string id = ts[i++].text;
                return done(NameDecl{std::move(id)});
            }
            syntax_error(line, "expected an identifier after 'name'");
            return std::nullopt;
        }
        if (take(Keyword::kw_raise)) {
            if (take(Keyword::kw_shield)) return done(RaiseShield{});
        } else if (take(Keyword::kw_lower)) {
            if (take(Keyword::kw_shield)) return done(LowerShield{});
        } else if (take(Keyword::kw_move)) {
            if (take(Keyword::kw_forward)) return done(MoveForward{});
            if (take(Keyword::kw_backward)) return done(MoveBackward{});
        } else if (take(Keyword::kw_turn)) {
            if (take(Keyword::kw_left)) return done(TurnLeft{});
            if (take(Keyword::kw_right)) return done(TurnRight{});
        } else if (take(Keyword::kw_long)) {
            if (take(Keyword::kw_range) && take(Keyword::kw_scan)) return done(LongRangeScan{});
        } else if (take(Keyword::kw_scan)) {
            if (take(Keyword::kw_forward)) return done(ScanForward{});
            if (take(Keyword::kw_left)) return done(ScanLeft{});
            if (take(Keyword::kw_right)) return done(ScanRight{});
        } else if (take(Keyword::kw_gps)) {
            if (take(Keyword::kw_scan)) return done(GpsScan{});
        } else if (take(Keyword::kw_launch)) {
            if (take(Keyword::kw_missile)) return done(LaunchMissile{});
        } else if (take(Keyword::kw_fire)) {
            if (take(Keyword::kw_gun)) return done(FireGun{});
        } else if (take(Keyword::kw_throw)) {
            if (take(Keyword::kw_grenade)) return done(ThrowGrenade{});
        } else if (take(Keyword::kw_discharge)) {
            if (take(Keyword::kw_energy)) return done(DischargeEnergy{});
        } else if (take(Keyword::kw_generate)) {
            if (take(Keyword::kw_random)) return done(GenerateRandom{});
        } else if (take(Keyword::kw_self)) {
            if (take(Keyword::kw_destruct)) return done(SelfDestruct{});
        } else if (take(Keyword::kw_return)) {
            return done(Return{});
        } else if (ts[i].is_kw(Keyword::kw_goto) || ts[i].is_kw(Keyword::kw_gosub)) {
            bool is_goto = ts[i].is_kw(Keyword::kw_goto);
            ++i;
            if (i < end && ts[i].kind == TokenKind::identifier) {
                const Token& target = ts[i++];
                refs_.push_back({target.text, target.folded, target.span});
                Op op = is_goto ? Op{Goto{target.text, target.folded}}
                                : Op{Gosub{target.text, target.folded}};
                return done(std::move(op));
            }
            syntax_error(line, is_goto ? "expected a label after 'goto'"
                                       : "expected a label after 'gosub'");
            return std::nullopt;
        }
        syntax_error(line, "unrecognized statement");
        return std::nullopt;
    }

    void append(std::optional<Condition> guard, Op op, SourceSpan span) {
        if (auto* decl = std::get_if<NameDecl>(&op)) {
            if (saw_name_)
                report(Severity::warning, diag::duplicate_name, span,
                       "'name' given more than once; the last one wins");
            saw_name_ = true;
            prog_.name = decl->id;
        }

        int index = prog_.size();
        for (LabelDef& def : pending_labels_) {
            def.index = index;
            auto [it, inserted] = prog_.labels.emplace(def.folded, index);
            if (!inserted) {
                report(Severity::error, diag::duplicate_label, def.span,
                       "label '" + def.raw + "' is already defined");
                continue;
            }
            prog_.label_defs.push_back(def);
        }
        pending_labels_.clear();
        prog_.instructions.push_back({span, {std::move(guard), std::move(op)}});
    }

    void syntax_error(const Line& line, std::string message) {
        report(Severity::error, diag::syntax_error, line_span(line), std::move(message));
    }

    void fail_pending_then(std::string_view blocker) {
        report(Severity::error, diag::dangling_then, pending_then_->span,
               "'if ... then' without an action; " + std::string(blocker) +
                   " cannot complete it");
        pending_then_.reset();
    }

    void finish() {
        if (pending_then_) {
            report(Severity::error, diag::dangling_then, pending_then_->span,
                   "'if ... then' without an action at end of input");
            pending_then_.reset();
        }
        for (const LabelDef& def : pending_labels_)
            report(recovery_severity(), diag::dangling_label, def.span,
                   "label '" + def.raw + "' has no instruction to bind to; dropped");
        pending_labels_.clear();

        // Recovery R3: unresolved jump targets are warnings here and no-ops
        // at run time.
        for (const Ref& ref : refs_)
            if (!prog_.labels.contains(ref.folded))
                report(recovery_severity(), diag::undefined_label, ref.span,
                       "label '" + ref.raw + "' is not defined");
    }

    struct Pending {
        Condition cond;
        SourceSpan span;
    };
    struct Ref {
        std::string raw;
        std::string folded;
        SourceSpan span;
    };

    ParseMode mode_;
    Program prog_;
    std::vector<Diagnostic> diags_;
    std::vector<LabelDef> pending_labels_;
    std::optional<Pending> pending_then_;
    std::vector<Ref> refs_;
    bool saw_name_ = false;
};

}  // namespace

ParseResult parse(std::string_view source, ParseMode mode) {
    return Parser(mode).run(source);
}

}  // namespace cybug::caicl
