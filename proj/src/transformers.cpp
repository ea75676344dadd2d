#include "ngcl/transformers.hpp"

#include <cctype>
#include <string>

#include "ngcl/errors.hpp"

namespace ngcl {

namespace {

constexpr std::array<std::string_view, 8> kNames = {"awp", "dwp", "awlp", "dwlp", "asp", "dsp", "aslp", "dslp"};

}  // namespace

std::string_view name(TransformerKind k) { return kNames[static_cast<std::size_t>(k)]; }

std::optional<TransformerKind> parse_transformer(std::string_view s) {
    std::string key(s);
    for (auto& ch : key) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == key) return static_cast<TransformerKind>(i);
    return std::nullopt;
}

// ---- oracle ----

Predicate oracle(TransformerKind k, const Semantics& sem, const Predicate& pred) {
    const std::size_t n = sem.rel.universe();
    Predicate out(n);
    switch (k) {
        case TransformerKind::AWP:
            for (StateIndex s = 0; s < n; ++s) out.set(s, sem.rel.row(s).intersects(pred));
            return out;
        case TransformerKind::DWLP:
            for (StateIndex s = 0; s < n; ++s) out.set(s, sem.rel.row(s).subset_of(pred));
            return out;
        case TransformerKind::DWP:
            for (StateIndex s = 0; s < n; ++s) out.set(s, !sem.may_diverge.test(s) && sem.rel.row(s).subset_of(pred));
            return out;
        case TransformerKind::AWLP:
            for (StateIndex s = 0; s < n; ++s) out.set(s, sem.may_diverge.test(s) || sem.rel.row(s).intersects(pred));
            return out;
        case TransformerKind::ASP:
            for (StateIndex t = 0; t < n; ++t) out.set(t, sem.conv.row(t).intersects(pred));
            return out;
        case TransformerKind::DSLP:
            for (StateIndex t = 0; t < n; ++t) out.set(t, sem.conv.row(t).subset_of(pred));
            return out;
        case TransformerKind::DSP:
            for (StateIndex t = 0; t < n; ++t) out.set(t, !sem.conv.row(t).none() && sem.conv.row(t).subset_of(pred));
            return out;
        case TransformerKind::ASLP:
            for (StateIndex t = 0; t < n; ++t) out.set(t, sem.conv.row(t).none() || sem.conv.row(t).intersects(pred));
            return out;
    }
    throw InvariantError("bad transformer kind");
}

Predicate oracle(TransformerKind k, const Program& p, const StateSpace& space, const Predicate& pred) {
    return oracle(k, analyze(p, space), pred);
}

// ---- inductive rules ----

namespace {

Predicate backward_assign(const ProgramNode& n, const StateSpace& space, const Predicate& c) {
    Predicate out(space.size());
    for (StateIndex s = 0; s < space.size(); ++s) out.set(s, c.test(space.set(s, n.var, eval(n.expr, space, s))));
    return out;
}

// Final states t such that some (exists=true) or every (exists=false) value a
// with t(x) = e(t[x:=a]) has t[x:=a] in b.
Predicate forward_assign(const ProgramNode& n, const StateSpace& space, const Predicate& b, bool exists) {
    Predicate out(space.size());
    for (StateIndex t = 0; t < space.size(); ++t) {
        const Value tx = space.get(t, n.var);
        bool verdict = !exists;
        for (Value a = 0; a < space.modulus(); ++a) {
            const StateIndex pre = space.set(t, n.var, a);
            if (eval(n.expr, space, pre) != tx) continue;
            if (exists && b.test(pre)) {
                verdict = true;
                break;
            }
            if (!exists && !b.test(pre)) {
                verdict = false;
                break;
            }
        }
        out.set(t, verdict);
    }
    return out;
}

template <class F>
Predicate fixpoint(Predicate start, F f) {
    for (;;) {
        Predicate next = f(start);
        if (next == start) return start;
        start = std::move(next);
    }
}

Predicate wp_rule(TransformerKind k, const Program& p, const StateSpace& space, const Predicate& c) {
    const std::size_t n = space.size();
    const bool angelic = k == TransformerKind::AWP || k == TransformerKind::AWLP;
    const bool liberal = k == TransformerKind::AWLP || k == TransformerKind::DWLP;
    switch (p->kind) {
        case ProgramKind::Skip: return c;
        case ProgramKind::Diverge: return Predicate(n, liberal);
        case ProgramKind::Assign: return backward_assign(*p, space, c);
        case ProgramKind::Seq: return wp_rule(k, p->a, space, wp_rule(k, p->b, space, c));
        case ProgramKind::Choice: {
            Predicate l = wp_rule(k, p->a, space, c), r = wp_rule(k, p->b, space, c);
            return angelic ? (l | r) : (l & r);
        }
        case ProgramKind::Ite: {
            Predicate g = guard_predicate(p->guard, space);
            return (g & wp_rule(k, p->a, space, c)) | (wp_rule(k, p->b, space, c) - g);
        }
        case ProgramKind::While: {
            Predicate g = guard_predicate(p->guard, space);
            Predicate exit = c - g;
            return fixpoint(Predicate(n, liberal), [&](const Predicate& X) { return exit | (g & wp_rule(k, p->a, space, X)); });
        }
    }
    throw InvariantError("bad program kind");
}

Predicate asp_rule(const Program& p, const StateSpace& space, const Predicate& b);
Predicate dslp_rule(const Program& p, const StateSpace& space, const Predicate& b);

Predicate asp_rule(const Program& p, const StateSpace& space, const Predicate& b) {
    switch (p->kind) {
        case ProgramKind::Skip: return b;
        case ProgramKind::Diverge: return Predicate(space.size());
        case ProgramKind::Assign: return forward_assign(*p, space, b, true);
        case ProgramKind::Seq: return asp_rule(p->b, space, asp_rule(p->a, space, b));
        case ProgramKind::Choice: return asp_rule(p->a, space, b) | asp_rule(p->b, space, b);
        case ProgramKind::Ite: {
            Predicate g = guard_predicate(p->guard, space);
            return asp_rule(p->a, space, g & b) | asp_rule(p->b, space, b - g);
        }
        case ProgramKind::While: {
            Predicate g = guard_predicate(p->guard, space);
            Predicate heads = fixpoint(Predicate(space.size()), [&](const Predicate& Y) { return b | asp_rule(p->a, space, g & Y); });
            return heads - g;
        }
    }
    throw InvariantError("bad program kind");
}

Predicate dslp_rule(const Program& p, const StateSpace& space, const Predicate& b) {
    switch (p->kind) {
        case ProgramKind::Skip: return b;
        case ProgramKind::Diverge: return Predicate::full(space.size());
        case ProgramKind::Assign: return forward_assign(*p, space, b, false);
        case ProgramKind::Seq: return dslp_rule(p->b, space, dslp_rule(p->a, space, b));
        case ProgramKind::Choice: return dslp_rule(p->a, space, b) & dslp_rule(p->b, space, b);
        case ProgramKind::Ite: {
            Predicate g = guard_predicate(p->guard, space);
            return dslp_rule(p->a, space, ~g | b) & dslp_rule(p->b, space, g | b);
        }
        case ProgramKind::While: {
            // Loop-head states all of whose origins lie in b (greatest fixpoint);
            // states satisfying g are never final.
            Predicate g = guard_predicate(p->guard, space);
            Predicate heads = fixpoint(Predicate::full(space.size()),
                                       [&](const Predicate& Y) { return b & dslp_rule(p->a, space, ~g | Y); });
            return g | heads;
        }
    }
    throw InvariantError("bad program kind");
}

}  // namespace

Predicate inductive(TransformerKind k, const Program& p, const StateSpace& space, const Predicate& pred) {
    switch (k) {
        case TransformerKind::AWP:
        case TransformerKind::DWP:
        case TransformerKind::AWLP:
        case TransformerKind::DWLP: return wp_rule(k, p, space, pred);
        case TransformerKind::ASP: return asp_rule(p, space, pred);
        case TransformerKind::DSLP: return dslp_rule(p, space, pred);
        case TransformerKind::DSP: return asp_rule(p, space, pred) & dslp_rule(p, space, pred);
        case TransformerKind::ASLP: return asp_rule(p, space, pred) | dslp_rule(p, space, pred);
    }
    throw InvariantError("bad transformer kind");
}

Predicate transform(TransformerKind k, const Program& p, const StateSpace& space, const Predicate& pred, Engine engine) {
    if (pred.universe() != space.size()) throw InvalidArgument("predicate does not match the state space");
    switch (engine) {
        case Engine::Oracle: return oracle(k, p, space, pred);
        case Engine::Inductive: return inductive(k, p, space, pred);
        case Engine::Both: {
            Predicate o = oracle(k, p, space, pred);
            Predicate i = inductive(k, p, space, pred);
            if (o != i)
                throw EngineMismatch(std::string(name(k)) + " engines disagree on " + print(p) + ": oracle " +
                                     o.render(space) + " vs inductive " + i.render(space));
            return o;
        }
    }
    throw InvariantError("bad engine");
}

// ---- classes ----

int coreachability_class(const Semantics& sem, const Predicate& c, StateIndex s) {
    const bool tc = sem.rel.row(s).intersects(c);
    const bool tn = !sem.rel.row(s).subset_of(c);
    const bool d = sem.may_diverge.test(s);
    const int bits = (tc ? 4 : 0) | (tn ? 2 : 0) | (d ? 1 : 0);
    // indexed by tc tn d
    static constexpr int table[8] = {0, 4, 7, 6, 1, 2, 3, 5};
    if (table[bits] == 0) throw InvariantError("state neither terminates nor diverges");
    return table[bits];
}

int reachability_class(const Semantics& sem, const Predicate& b, StateIndex t) {
    const bool from_b = sem.conv.row(t).intersects(b);
    const bool from_nb = !sem.conv.row(t).subset_of(b);
    if (from_b) return from_nb ? 2 : 1;
    return from_nb ? 4 : 3;
}

bool class_accepted(TransformerKind k, int cls) {
    switch (k) {
        case TransformerKind::AWP: return cls == 1 || cls == 2 || cls == 3 || cls == 5;
        case TransformerKind::DWP: return cls == 1;
        case TransformerKind::DWLP: return cls == 1 || cls == 2 || cls == 4;
        case TransformerKind::AWLP: return cls >= 1 && cls <= 6;
        case TransformerKind::ASP: return cls == 1 || cls == 2;
        case TransformerKind::DSP: return cls == 1;
        case TransformerKind::DSLP: return cls == 1 || cls == 3;
        case TransformerKind::ASLP: return cls >= 1 && cls <= 3;
    }
    return false;
}

Predicate from_classes(TransformerKind k, const Semantics& sem, const Predicate& pred) {
    const std::size_t n = sem.rel.universe();
    Predicate out(n);
    for (StateIndex s = 0; s < n; ++s) {
        const int cls = is_backward(k) ? coreachability_class(sem, pred, s) : reachability_class(sem, pred, s);
        out.set(s, class_accepted(k, cls));
    }
    return out;
}

}  // namespace ngcl
