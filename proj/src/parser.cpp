#include "ngcl/parser.hpp"

#include <cctype>
#include <set>

#include "ngcl/errors.hpp"

namespace ngcl {

namespace {

enum class Tok { Ident, Number, Sym, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line, col;
};

const std::set<std::string> kKeywords = {"skip", "diverge", "if",  "else", "while", "true",
                                         "false", "and",    "or",  "not",  "vars",  "mod"};

std::vector<Token> lex(const std::string& src) {
    static const char* two_char[] = {":=", "[]", "==", "!=", "<=", ">=", "&&", "||"};
    std::vector<Token> out;
    std::size_t i = 0, line = 1, col = 1;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        const std::size_t l = line, cl = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            out.push_back({Tok::Ident, src.substr(i, j - i), l, cl});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            if (j - i > 18) throw ParseError("numeric literal too long", l, cl);
            out.push_back({Tok::Number, src.substr(i, j - i), l, cl});
            advance(j - i);
            continue;
        }
        bool matched = false;
        for (const char* sym : two_char) {
            if (src.compare(i, 2, sym) == 0) {
                out.push_back({Tok::Sym, sym, l, cl});
                advance(2);
                matched = true;
                break;
            }
        }
        if (matched) continue;
        if (std::string("+-*=<>!(){};,").find(c) != std::string::npos) {
            out.push_back({Tok::Sym, std::string(1, c), l, cl});
            advance(1);
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> toks, const StateSpace& space, std::size_t start = 0)
        : toks_(std::move(toks)), pos_(start), space_(space) {}

    Program program() {
        Program p = seq();
        expect_end();
        return p;
    }
    Guard guard_only() {
        Guard g = guard();
        expect_end();
        return g;
    }
    Expr expr_only() {
        Expr e = expr();
        expect_end();
        return e;
    }

private:
    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    bool is(const std::string& s, std::size_t k = 0) const {
        const Token& t = peek(k);
        return (t.kind == Tok::Sym || t.kind == Tok::Ident) && t.text == s;
    }
    bool accept(const std::string& s) {
        if (is(s)) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
        const Token& t = peek();
        std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError("expected " + what + ", found " + got, t.line, t.col);
    }
    void expect(const std::string& s) {
        if (!accept(s)) fail("'" + s + "'");
    }
    void expect_end() {
        if (peek().kind != Tok::End) fail("end of input");
    }

    Program seq() {
        Program first = choice();
        if (accept(";")) {
            if (peek().kind == Tok::End || is("}")) return first;  // trailing ';'
            return p_seq(first, seq());
        }
        return first;
    }

    Program choice() {
        Program first = atom();
        if (accept("[]")) return p_choice(first, choice());
        return first;
    }

    Program block() {
        expect("{");
        Program p = seq();
        expect("}");
        return p;
    }

    Program atom() {
        const Token& t = peek();
        if (is("{")) return block();
        if (accept("skip")) return p_skip();
        if (accept("diverge")) return p_diverge();
        if (accept("if")) return if_rest();
        if (accept("while")) {
            Guard g = guard();
            return p_while(g, block());
        }
        if (t.kind == Tok::Ident && !kKeywords.count(t.text) && is(":=", 1)) {
            std::size_t var = resolve(t);
            std::string name = t.text;
            pos_ += 2;
            return p_assign(var, name, expr());
        }
        fail("statement");
    }

    Program if_rest() {
        Guard g = guard();
        Program then_branch = block();
        Program else_branch = p_skip();
        if (accept("else")) else_branch = accept("if") ? if_rest() : block();
        return p_ite(g, then_branch, else_branch);
    }

    std::size_t resolve(const Token& t) const {
        auto idx = space_.index_of(t.text);
        if (!idx) throw UnknownVariableError(t.text);
        return *idx;
    }

    Guard guard() {
        Guard g = conj();
        while (accept("||") || accept("or")) g = g_or(g, conj());
        return g;
    }
    Guard conj() {
        Guard g = unary();
        while (accept("&&") || accept("and")) g = g_and(g, unary());
        return g;
    }
    Guard unary() {
        if (accept("!") || accept("not")) return g_not(unary());
        if (accept("true")) return g_true();
        if (accept("false")) return g_false();
        if (is("(")) {
            // Either a parenthesised guard or a comparison whose lhs starts with '('.
            const std::size_t save = pos_;
            try {
                ++pos_;
                Guard g = guard();
                expect(")");
                if (!is_cmp_op()) return g;
            } catch (const ParseError&) {
            }
            pos_ = save;
        }
        return comparison();
    }
    bool is_cmp_op() const {
        return is("=") || is("==") || is("!=") || is("<") || is("<=") || is(">") || is(">=");
    }
    Guard comparison() {
        Expr l = expr();
        if (accept("=") || accept("==")) return g_cmp(GuardKind::Eq, l, expr());
        if (accept("!=")) return g_cmp(GuardKind::Ne, l, expr());
        if (accept("<=")) return g_cmp(GuardKind::Le, l, expr());
        if (accept("<")) return g_cmp(GuardKind::Lt, l, expr());
        if (accept(">=")) return g_cmp(GuardKind::Le, expr(), l);
        if (accept(">")) return g_cmp(GuardKind::Lt, expr(), l);
        fail("comparison operator");
    }

    Expr expr() {
        Expr e = term();
        for (;;) {
            if (accept("+"))
                e = e_add(e, term());
            else if (accept("-"))
                e = e_sub(e, term());
            else
                return e;
        }
    }
    Expr term() {
        Expr e = factor();
        while (accept("*")) e = e_mul(e, factor());
        return e;
    }
    Expr factor() {
        const Token& t = peek();
        if (accept("-")) return e_neg(factor());
        if (accept("(")) {
            Expr e = expr();
            expect(")");
            return e;
        }
        if (t.kind == Tok::Number) {
            ++pos_;
            return e_const(std::stoll(t.text));
        }
        if (t.kind == Tok::Ident && !kKeywords.count(t.text)) {
            ++pos_;
            return e_var(resolve(t), t.text);
        }
        fail("expression");
    }

    std::vector<Token> toks_;
    std::size_t pos_;
    const StateSpace& space_;
};

}  // namespace

Program parse_program(const std::string& text, const StateSpace& space) { return Parser(lex(text), space).program(); }

Guard parse_guard(const std::string& text, const StateSpace& space) { return Parser(lex(text), space).guard_only(); }

Expr parse_expr(const std::string& text, const StateSpace& space) { return Parser(lex(text), space).expr_only(); }

Predicate parse_predicate(const std::string& text, const StateSpace& space) {
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{') {
        auto close = text.rfind('}');
        if (close == std::string::npos || close < i) throw ParseError("unterminated state set", 1, i + 1);
        Predicate p(space.size());
        std::string body = text.substr(i + 1, close - i - 1);
        std::size_t pos = 0;
        while (pos < body.size()) {
            auto open = body.find('<', pos);
            if (open == std::string::npos) {
                if (body.find_first_not_of(" \t\r\n,", pos) != std::string::npos)
                    throw ParseError("expected '<' in state set", 1, i + 2 + pos);
                break;
            }
            auto end = body.find('>', open);
            if (end == std::string::npos) throw ParseError("unterminated state", 1, i + 2 + open);
            p.set(space.parse_state(body.substr(open + 1, end - open - 1)));
            pos = end + 1;
        }
        return p;
    }
    return guard_predicate(parse_guard(text, space), space);
}

ProgramFile parse_program_file(const std::string& text, const FileOptions& opts) {
    auto toks = lex(text);
    std::size_t start = 0;
    std::optional<std::vector<std::string>> vars;
    std::optional<Value> modulus;
    if (toks[0].kind == Tok::Ident && toks[0].text == "vars") {
        vars.emplace();
        std::size_t k = 1;
        while (toks[k].kind == Tok::Ident && !kKeywords.count(toks[k].text)) {
            vars->push_back(toks[k].text);
            ++k;
            if (toks[k].kind == Tok::Sym && toks[k].text == ",") ++k;
        }
        if (toks[k].kind != Tok::Ident || toks[k].text != "mod") throw ParseError("expected 'mod' in header", toks[k].line, toks[k].col);
        ++k;
        if (toks[k].kind != Tok::Number) throw ParseError("expected modulus", toks[k].line, toks[k].col);
        modulus = std::stoll(toks[k].text);
        start = k + 1;
    }
    if (opts.vars) vars = opts.vars;
    if (opts.modulus) modulus = opts.modulus;
    if (!vars) {
        vars.emplace();
        std::set<std::string> seen;
        for (std::size_t k = start; k < toks.size(); ++k) {
            const auto& t = toks[k];
            if (t.kind == Tok::Ident && !kKeywords.count(t.text) && seen.insert(t.text).second) vars->push_back(t.text);
        }
    }
    if (!modulus) throw InvalidArgument("no modulus: add a 'vars ... mod m' header or pass one explicitly");
    StateSpace space(*vars, *modulus);
    Program p = Parser(std::move(toks), space, start).program();
    return {std::move(space), std::move(p)};
}

}  // namespace ngcl
