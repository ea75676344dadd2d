#include "ngcl/topkat.hpp"

#include "ngcl/errors.hpp"
#include "ngcl/semantics.hpp"

namespace ngcl {

namespace {

KatTerm node(KatKind k, KatTerm a = nullptr, KatTerm b = nullptr) {
    return std::make_shared<const KatNode>(KatNode{k, {}, {}, {}, std::move(a), std::move(b)});
}

}  // namespace

KatTerm k_zero() { return node(KatKind::Zero); }
KatTerm k_one() { return node(KatKind::One); }
KatTerm k_top() { return node(KatKind::Top); }
KatTerm k_test(Predicate p, std::string label) {
    return std::make_shared<const KatNode>(KatNode{KatKind::Test, std::move(label), std::move(p), {}, nullptr, nullptr});
}
KatTerm k_prim(Relation r, std::string label) {
    return std::make_shared<const KatNode>(KatNode{KatKind::Prim, std::move(label), {}, std::move(r), nullptr, nullptr});
}
KatTerm k_plus(KatTerm a, KatTerm b) { return node(KatKind::Plus, std::move(a), std::move(b)); }
KatTerm k_dot(KatTerm a, KatTerm b) { return node(KatKind::Dot, std::move(a), std::move(b)); }
KatTerm k_star(KatTerm a) { return node(KatKind::Star, std::move(a)); }
KatTerm k_not(KatTerm a) { return node(KatKind::Not, std::move(a)); }

bool is_test(const KatTerm& t) {
    switch (t->kind) {
        case KatKind::Zero:
        case KatKind::One:
        case KatKind::Test: return true;
        case KatKind::Not: return is_test(t->a);
        case KatKind::Plus:
        case KatKind::Dot: return is_test(t->a) && is_test(t->b);
        default: return false;
    }
}

Relation eval_kat(const KatTerm& t, std::size_t n) {
    switch (t->kind) {
        case KatKind::Zero: return Relation(n);
        case KatKind::One: return Relation::identity(n);
        case KatKind::Top: return Relation::top(n);
        case KatKind::Test:
            if (t->test.universe() != n) throw InvalidArgument("test over a different state space");
            return Relation::diag(t->test);
        case KatKind::Prim:
            if (t->prim.universe() != n) throw InvalidArgument("primitive over a different state space");
            return t->prim;
        case KatKind::Plus: return eval_kat(t->a, n) | eval_kat(t->b, n);
        case KatKind::Dot: return eval_kat(t->a, n).compose(eval_kat(t->b, n));
        case KatKind::Star: return eval_kat(t->a, n).star();
        case KatKind::Not:
            if (!is_test(t->a)) throw InvalidArgument("negation applied to a non-test term: " + print(t->a));
            return Relation::diag(~eval_kat(t->a, n).domain());
    }
    throw InvariantError("bad KAT term");
}

std::string print(const KatTerm& t) {
    switch (t->kind) {
        case KatKind::Zero: return "0";
        case KatKind::One: return "1";
        case KatKind::Top: return "T";
        case KatKind::Test: return "[" + t->label + "]";
        case KatKind::Prim: return "(" + t->label + ")";
        case KatKind::Plus: return "(" + print(t->a) + " + " + print(t->b) + ")";
        case KatKind::Dot: return print(t->a) + " " + print(t->b);
        case KatKind::Star: {
            bool atomic = t->a->kind != KatKind::Dot;
            return (atomic ? print(t->a) : "(" + print(t->a) + ")") + "*";
        }
        case KatKind::Not: return "!" + (t->a->kind == KatKind::Dot ? "(" + print(t->a) + ")" : print(t->a));
    }
    throw InvariantError("bad KAT term");
}

KatTerm compile_kat(const Program& p, const StateSpace& space) {
    switch (p->kind) {
        case ProgramKind::Skip: return k_one();
        case ProgramKind::Diverge: return k_zero();
        case ProgramKind::Assign: return k_prim(denote_relation(p, space), print(p));
        case ProgramKind::Seq: return k_dot(compile_kat(p->a, space), compile_kat(p->b, space));
        case ProgramKind::Choice: return k_plus(compile_kat(p->a, space), compile_kat(p->b, space));
        case ProgramKind::Ite: {
            KatTerm g = k_test(guard_predicate(p->guard, space), print(p->guard));
            return k_plus(k_dot(g, compile_kat(p->a, space)), k_dot(k_not(g), compile_kat(p->b, space)));
        }
        case ProgramKind::While: {
            KatTerm g = k_test(guard_predicate(p->guard, space), print(p->guard));
            return k_dot(k_star(k_dot(g, compile_kat(p->a, space))), k_not(g));
        }
    }
    throw InvariantError("bad program kind");
}

// ---- catalog ----

namespace {

using S = KatSym;

KatEquation eq(std::vector<KatSym> l, std::vector<KatSym> r, bool negated = false) {
    return KatEquation{std::move(l), std::move(r), negated};
}

}  // namespace

const std::vector<CatalogEntry>& equation_catalog() {
    static const std::vector<CatalogEntry> catalog = {
        {"LISBON", {eq({S::B, S::P, S::C, S::Top}, {S::B, S::Top})}},
        {"PARTIAL_CORRECTNESS", {eq({S::Top, S::B, S::P, S::C}, {S::Top, S::B, S::P})}},
        {"PC_CONTRA", {eq({S::NotB, S::P, S::NotC, S::Top}, {S::P, S::NotC, S::Top})}},
        {"DWLP_UB", {eq({S::NotB, S::P, S::NotC, S::Top}, {S::NotB, S::Top})}},
        {"INCORRECTNESS", {eq({S::Top, S::B, S::P, S::C}, {S::Top, S::C})}},
        {"ANGELIC_PARTIAL_INCORRECTNESS", {eq({S::Top, S::B, S::P, S::C}, {S::Top, S::P, S::C})}},
        {"DEMONIC_PARTIAL_INCORRECTNESS", {eq({S::B, S::P, S::C, S::Top}, {S::P, S::C, S::Top})}},
        {"PI_CONTRA", {eq({S::Top, S::NotB, S::P, S::NotC}, {S::Top, S::NotB, S::P})}},
        {"DSLP_UB", {eq({S::Top, S::NotB, S::P, S::NotC}, {S::Top, S::NotC})}},
        {"DSP_UB", {eq({S::Top, S::NotB, S::P, S::NotC}, {S::Top, S::P, S::NotC})}},
        {"IN_BETWEEN", {eq({S::B, S::P, S::C, S::Top}, {S::B, S::P, S::Top})}},
        {"DEMONIC_INCORRECTNESS",
         {eq({S::B, S::P, S::C, S::Top}, {S::P, S::C, S::Top}), eq({S::Top, S::C}, {S::Top, S::P, S::C})}},
        {"OUTCOME_CONJUNCTION", {eq({S::B, S::P, S::C}, {S::Zero}, true), eq({S::B, S::P, S::NotC}, {S::Zero})}},
    };
    return catalog;
}

const CatalogEntry* find_equation(std::string_view id) {
    for (const auto& e : equation_catalog())
        if (e.id == id) return &e;
    return nullptr;
}

namespace {

std::string sym_text(KatSym s) {
    switch (s) {
        case S::Top: return "T";
        case S::B: return "b";
        case S::NotB: return "!b";
        case S::P: return "p";
        case S::C: return "c";
        case S::NotC: return "!c";
        case S::Zero: return "0";
    }
    return "?";
}

std::string word_text(const std::vector<KatSym>& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + sym_text(w[i]);
    return out;
}

}  // namespace

KatTerm word_term(const std::vector<KatSym>& w, const Predicate& b, const Relation& p, const Predicate& c) {
    KatTerm t;
    for (auto s : w) {
        KatTerm f;
        switch (s) {
            case S::Top: f = k_top(); break;
            case S::B: f = k_test(b, "b"); break;
            case S::NotB: f = k_not(k_test(b, "b")); break;
            case S::P: f = k_prim(p, "p"); break;
            case S::C: f = k_test(c, "c"); break;
            case S::NotC: f = k_not(k_test(c, "c")); break;
            case S::Zero: f = k_zero(); break;
        }
        t = t ? k_dot(t, f) : f;
    }
    return t ? t : k_one();
}

namespace {

KatSym negate(KatSym s) {
    switch (s) {
        case S::B: return S::NotB;
        case S::NotB: return S::B;
        case S::C: return S::NotC;
        case S::NotC: return S::C;
        default: return s;
    }
}

bool is_cond(KatSym s) { return s == S::B || s == S::NotB || s == S::C || s == S::NotC; }

}  // namespace

std::string print(const KatEquation& e) { return word_text(e.lhs) + (e.negated ? " != " : " = ") + word_text(e.rhs); }

std::string print(const CatalogEntry& e) {
    std::string out;
    for (std::size_t i = 0; i < e.system.size(); ++i) out += (i ? " and " : "") + print(e.system[i]);
    return out;
}

Relation eval_word(const std::vector<KatSym>& w, const Predicate& b, const Relation& p, const Predicate& c) {
    const std::size_t n = p.universe();
    if (w.empty()) return Relation::identity(n);
    auto test_of = [&](KatSym s) {
        switch (s) {
            case S::B: return b;
            case S::NotB: return ~b;
            case S::C: return c;
            default: return ~c;
        }
    };
    Relation r;
    switch (w[0]) {
        case S::Top: r = Relation::top(n); break;
        case S::P: r = p; break;
        case S::Zero: r = Relation(n); break;
        default: r = Relation::diag(test_of(w[0])); break;
    }
    for (std::size_t i = 1; i < w.size(); ++i) {
        switch (w[i]) {
            case S::Top:
                for (StateIndex s = 0; s < n; ++s) r.row(s) = Predicate(n, !r.row(s).none());
                break;
            case S::P: r = r.compose(p); break;
            case S::Zero: r = Relation(n); break;
            default: {
                const Predicate t = test_of(w[i]);
                for (StateIndex s = 0; s < n; ++s) r.row(s) &= t;
            }
        }
    }
    return r;
}

bool check_equation(const KatEquation& e, const Predicate& b, const Relation& p, const Predicate& c) {
    const bool same = eval_word(e.lhs, b, p, c) == eval_word(e.rhs, b, p, c);
    return e.negated ? !same : same;
}

bool check_equation(const CatalogEntry& e, const Predicate& b, const Relation& p, const Predicate& c) {
    for (const auto& eq : e.system)
        if (!check_equation(eq, b, p, c)) return false;
    return true;
}

std::optional<KatEquation> apply_t1(const KatEquation& e) {
    auto mirror = [](const std::vector<KatSym>& w) {
        std::vector<KatSym> out(w.rbegin(), w.rend());
        for (auto& s : out) {
            if (s == S::B) s = S::C;
            else if (s == S::C) s = S::B;
            else if (s == S::NotB) s = S::NotC;
            else if (s == S::NotC) s = S::NotB;
        }
        return out;
    };
    return KatEquation{mirror(e.lhs), mirror(e.rhs), e.negated};
}

std::optional<KatEquation> apply_t2(const KatEquation& e) {
    const auto& r = e.rhs;
    std::vector<KatSym> out;
    if (r.size() == 2 && is_cond(r[0]) && r[1] == S::Top) out = {r[0], S::P, S::Top};
    else if (r.size() == 3 && is_cond(r[0]) && r[1] == S::P && r[2] == S::Top) out = {r[0], S::Top};
    else if (r.size() == 2 && r[0] == S::Top && is_cond(r[1])) out = {S::Top, S::P, r[1]};
    else if (r.size() == 3 && r[0] == S::Top && r[1] == S::P && is_cond(r[2])) out = {S::Top, r[2]};
    else return std::nullopt;
    return KatEquation{e.lhs, out, e.negated};
}

std::optional<KatEquation> apply_t3(const KatEquation& e) {
    std::vector<KatSym> rhs = e.rhs;
    bool swapped = false;
    for (std::size_t i = 0; i + 1 < rhs.size() && !swapped; ++i) {
        if ((rhs[i] == S::B || rhs[i] == S::NotB) && rhs[i + 1] == S::P) {
            KatSym c = rhs[i] == S::B ? S::C : S::NotC;
            rhs[i] = S::P;
            rhs[i + 1] = c;
            swapped = true;
        } else if (rhs[i] == S::P && (rhs[i + 1] == S::C || rhs[i + 1] == S::NotC)) {
            KatSym b = rhs[i + 1] == S::C ? S::B : S::NotB;
            rhs[i] = b;
            rhs[i + 1] = S::P;
            swapped = true;
        }
    }
    if (!swapped) return std::nullopt;
    KatEquation out{e.lhs, rhs, e.negated};
    for (auto& s : out.lhs) s = negate(s);
    for (auto& s : out.rhs) s = negate(s);
    return out;
}

std::vector<TransformationLink> transformation_links() {
    std::vector<TransformationLink> links;
    const auto& cat = equation_catalog();
    using Fn = std::optional<KatEquation> (*)(const KatEquation&);
    const std::pair<const char*, Fn> ts[] = {{"t1", apply_t1}, {"t2", apply_t2}, {"t3", apply_t3}};
    for (const auto& from : cat) {
        if (from.system.size() != 1) continue;
        for (auto [tname, fn] : ts) {
            auto r = fn(from.system[0]);
            if (!r) continue;
            for (const auto& to : cat)
                if (to.system.size() == 1 && to.system[0] == *r) links.push_back({from.id, tname, to.id});
        }
    }
    return links;
}

}  // namespace ngcl
