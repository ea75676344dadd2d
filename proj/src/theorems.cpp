#include "ngcl/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "ngcl/errors.hpp"
#include "ngcl/parser.hpp"
#include "ngcl/semantics.hpp"
#include "ngcl/taxonomy.hpp"
#include "ngcl/topkat.hpp"
#include "ngcl/transformers.hpp"

namespace ngcl {

namespace {

using TK = TransformerKind;

const std::vector<std::string> kTheorems = {
    "ORDERING",
    "CONTRAPOSITIVE",
    "GALOIS_PC",
    "GALOIS_PI",
    "COMBO_IDENTITIES",
    "FIG4_IMPLICATIONS",
    "BRIDGES",
    "REMARK_DIVERGING",
    "TERMINATION_COLLAPSE",
    "MAY_TERMINATION",
    "MAY_MUST_TERMINATION",
    "REACHABILITY_COLLAPSE",
    "DETERMINISM_COLLAPSE",
    "REVERSIBILITY_COLLAPSE",
    "BRANCHING_COLLAPSE",
    "FORCED_GALOIS",
    "COROLLARIES",
    "CLASS_ANATOMY",
    "ENGINE_AGREEMENT",
    "SEMANTICS_AGREEMENT",
    "KAT_COMPILE",
};

const std::vector<std::string> kConditional = {"TERMINATION_COLLAPSE",  "MAY_TERMINATION",        "REACHABILITY_COLLAPSE",
                                               "DETERMINISM_COLLAPSE",  "REVERSIBILITY_COLLAPSE", "BRANCHING_COLLAPSE",
                                               "FORCED_GALOIS"};

// Everything a theorem may ask about one corpus case, computed once.
struct Ctx {
    const CaseView& view;
    Semantics sem;
    std::vector<std::array<Predicate, 8>> tr;  // tr[i][k]: kind k applied to predicates[i]
    std::vector<std::size_t> complement;       // index of ¬predicates[i]
    std::size_t empty_idx = 0, full_idx = 0;

    explicit Ctx(const CaseView& v) : view(v), sem(analyze(v.program, v.space)) {
        const auto& preds = v.predicates;
        tr.resize(preds.size());
        for (std::size_t i = 0; i < preds.size(); ++i)
            for (auto k : kAllTransformers) tr[i][static_cast<std::size_t>(k)] = oracle(k, sem, preds[i]);
        complement.resize(preds.size());
        for (std::size_t i = 0; i < preds.size(); ++i) {
            const Predicate neg = ~preds[i];
            auto it = std::find(preds.begin(), preds.end(), neg);
            if (it == preds.end()) throw InvariantError("predicate pool not closed under complement");
            complement[i] = static_cast<std::size_t>(it - preds.begin());
            if (preds[i].none()) empty_idx = i;
            if (preds[i].all()) full_idx = i;
        }
    }

    std::size_t npred() const { return view.predicates.size(); }
    const Predicate& pred(std::size_t i) const { return view.predicates[i]; }
    const Predicate& T(TK k, std::size_t i) const { return tr[i][static_cast<std::size_t>(k)]; }

    TransformerValues values(std::size_t bi, std::size_t ci) const {
        TransformerValues tv;
        for (auto k : kAllTransformers) tv.v[static_cast<std::size_t>(k)] = T(k, is_backward(k) ? ci : bi);
        return tv;
    }

    Witness witness(std::optional<std::size_t> bi, std::optional<std::size_t> ci, std::optional<StateIndex> s,
                    std::string detail) const {
        Witness w;
        w.space = describe_space(view.space);
        w.program = print(view.program);
        if (bi) w.pre = pred(*bi).render(view.space);
        if (ci) w.post = pred(*ci).render(view.space);
        if (s) w.state = view.space.render(*s);
        w.detail = std::move(detail);
        return w;
    }
};

// Lowest state where two predicates differ inside `scope`.
std::optional<StateIndex> differ_within(const Predicate& a, const Predicate& b, const Predicate& scope) {
    return (((a - b) | (b - a)) & scope).first();
}

struct Runner {
    Verdict v;
    std::function<void(Ctx&, Runner&)> on_case;
    // Per-slice hook for claims about fixed programs.
    std::function<void(const StateSpace&, std::size_t slice, Runner&)> on_slice;
    bool conditional = false;
    bool failed() const { return !v.holds; }
    void fail(Witness w) {
        if (v.holds) {
            v.holds = false;
            v.witness = std::move(w);
        }
    }
    void vacuity(Witness w) {
        if (!v.nonvacuity) v.nonvacuity = std::move(w);
    }
    bool finished() const { return failed() && (!conditional || v.nonvacuity.has_value()); }
};

void each_pair(Ctx& c, Runner& r, const std::function<bool(std::size_t, std::size_t)>& fn) {
    for (std::size_t bi = 0; bi < c.npred(); ++bi)
        for (std::size_t ci = 0; ci < c.npred(); ++ci) {
            ++r.v.triples;
            if (!fn(bi, ci)) return;
        }
}

// ---- unconditional theorems ----

void ordering(Ctx& c, Runner& r) {
    struct Inc {
        TK small, big;
    };
    static const Inc incs[] = {{TK::DWP, TK::AWP},  {TK::AWP, TK::AWLP}, {TK::DWP, TK::DWLP}, {TK::DWLP, TK::AWLP},
                               {TK::DSP, TK::ASP},  {TK::ASP, TK::ASLP}, {TK::DSP, TK::DSLP}, {TK::DSLP, TK::ASLP}};
    for (std::size_t i = 0; i < c.npred() && !r.failed(); ++i) {
        ++r.v.triples;
        for (const auto& inc : incs) {
            if (auto s = c.T(inc.small, i).first_not_in(c.T(inc.big, i))) {
                const bool back = is_backward(inc.small);
                r.fail(c.witness(back ? std::nullopt : std::optional(i), back ? std::optional(i) : std::nullopt, s,
                                 std::string(name(inc.small)) + " not contained in " + std::string(name(inc.big))));
                return;
            }
        }
    }
}

void contrapositive(Ctx& c, Runner& r) {
    struct Pair {
        TK a, b;
    };
    static const Pair pairs[] = {{TK::AWP, TK::DWLP}, {TK::DWP, TK::AWLP}, {TK::ASP, TK::DSLP}, {TK::DSP, TK::ASLP}};
    for (std::size_t i = 0; i < c.npred() && !r.failed(); ++i) {
        ++r.v.triples;
        const std::size_t ni = c.complement[i];
        for (const auto& pr : pairs) {
            // a(q) = ¬b(¬q), i.e. a(q) and b(¬q) partition Σ
            const Predicate& a = c.T(pr.a, i);
            const Predicate& b = c.T(pr.b, ni);
            std::optional<StateIndex> s = (a & b).first();
            if (!s) s = (~(a | b)).first();
            if (s) {
                const bool back = is_backward(pr.a);
                r.fail(c.witness(back ? std::nullopt : std::optional(i), back ? std::optional(i) : std::nullopt, s,
                                 std::string(name(pr.a)) + "(q) != not " + std::string(name(pr.b)) + "(not q)"));
                return;
            }
        }
    }
    // Logic level: L valid for <b,p,c> iff its partner is valid for <¬b,p,¬c>.
    static const std::pair<Logic, Logic> logic_pairs[] = {
        {Logic::AwpUB, Logic::DwlpLB}, {Logic::DwpUB, Logic::AwlpLB}, {Logic::AwpLB, Logic::DwlpUB},
        {Logic::DwpLB, Logic::AwlpUB}, {Logic::AspUB, Logic::DslpLB}, {Logic::AspLB, Logic::DslpUB},
        {Logic::DspUB, Logic::AslpLB}, {Logic::DspLB, Logic::AslpUB}};
    each_pair(c, r, [&](std::size_t bi, std::size_t ci) {
        const auto tv = c.values(bi, ci);
        const std::size_t nb = c.complement[bi], nc = c.complement[ci];
        const auto ntv = c.values(nb, nc);
        for (auto [l1, l2] : logic_pairs) {
            if (holds(l1, tv, c.pred(bi), c.pred(ci)) != holds(l2, ntv, c.pred(nb), c.pred(nc))) {
                r.fail(c.witness(bi, ci, std::nullopt,
                                 std::string(name(l1)) + " on <b,p,c> disagrees with " + std::string(name(l2)) +
                                     " on <not b,p,not c>"));
                return false;
            }
        }
        return true;
    });
}

void galois(Ctx& c, Runner& r, Logic a, Logic b) {
    each_pair(c, r, [&](std::size_t bi, std::size_t ci) {
        const auto tv = c.values(bi, ci);
        const auto va = evaluate(a, tv, c.pred(bi), c.pred(ci));
        const auto vb = evaluate(b, tv, c.pred(bi), c.pred(ci));
        if (va.holds != vb.holds) {
            r.fail(c.witness(bi, ci, va.holds ? vb.witness : va.witness,
                             std::string(name(a)) + (va.holds ? " holds but " : " fails but ") + std::string(name(b)) +
                                 (vb.holds ? " holds" : " fails")));
            return false;
        }
        return true;
    });
}

void combo(Ctx& c, Runner& r) {
    for (std::size_t i = 0; i < c.npred() && !r.failed(); ++i) {
        ++r.v.triples;
        const Predicate& asp = c.T(TK::ASP, i);
        const Predicate& dslp = c.T(TK::DSLP, i);
        if (auto s = differ_within(c.T(TK::DSP, i), asp & dslp, Predicate::full(asp.universe()))) {
            r.fail(c.witness(i, std::nullopt, s, "dsp != asp & dslp"));
            return;
        }
        if (auto s = differ_within(c.T(TK::ASLP, i), asp | dslp, Predicate::full(asp.universe()))) {
            r.fail(c.witness(i, std::nullopt, s, "aslp != asp | dslp"));
            return;
        }
    }
}

void fig4(Ctx& c, Runner& r) {
    using L = Logic;
    static const std::pair<L, L> arrows[] = {
        {L::DwpLB, L::AwpLB},   {L::DwpLB, L::DwlpLB},  {L::AwpLB, L::AwlpLB},  {L::DwlpLB, L::AwlpLB},
        {L::AwpUB, L::DwpUB},   {L::AwlpUB, L::AwpUB},  {L::AwlpUB, L::DwlpUB}, {L::DwlpUB, L::DwpUB},
        {L::DspLB, L::AspLB},   {L::DspLB, L::DslpLB},  {L::AspLB, L::AslpLB},  {L::DslpLB, L::AslpLB},
        {L::AspUB, L::DspUB},   {L::AslpUB, L::AspUB},  {L::AslpUB, L::DslpUB}, {L::DslpUB, L::DspUB},
        // in-between logics
        {L::DwpLB, L::Intersection}, {L::Intersection, L::AwpLB}, {L::Intersection, L::DwlpLB},
        {L::AwpLB, L::Union},        {L::DwlpLB, L::Union},       {L::Union, L::AwlpLB},
    };
    each_pair(c, r, [&](std::size_t bi, std::size_t ci) {
        const auto tv = c.values(bi, ci);
        for (auto [from, to] : arrows) {
            if (holds(from, tv, c.pred(bi), c.pred(ci)) && !holds(to, tv, c.pred(bi), c.pred(ci))) {
                r.fail(c.witness(bi, ci, evaluate(to, tv, c.pred(bi), c.pred(ci)).witness,
                                 std::string(name(from)) + " holds but " + std::string(name(to)) + " fails"));
                return false;
            }
        }
        return true;
    });
}

struct Bridge {
    const char* equation;
    Logic logic;
};

const Bridge kBridges[] = {
    {"LISBON", Logic::AwpLB},
    {"PARTIAL_CORRECTNESS", Logic::DwlpLB},
    {"PARTIAL_CORRECTNESS", Logic::AspUB},
    {"PC_CONTRA", Logic::DwlpLB},
    {"DWLP_UB", Logic::DwlpUB},
    {"INCORRECTNESS", Logic::AspLB},
    {"ANGELIC_PARTIAL_INCORRECTNESS", Logic::AslpLB},
    {"DEMONIC_PARTIAL_INCORRECTNESS", Logic::DslpLB},
    {"DEMONIC_PARTIAL_INCORRECTNESS", Logic::AwpUB},
    {"PI_CONTRA", Logic::AwpUB},
    {"DSLP_UB", Logic::DslpUB},
    {"DSP_UB", Logic::DspUB},
    {"DEMONIC_INCORRECTNESS", Logic::DspLB},
    {"IN_BETWEEN", Logic::Union},
};

void bridges(Ctx& c, Runner& r) {
    each_pair(c, r, [&](std::size_t bi, std::size_t ci) {
        const auto tv = c.values(bi, ci);
        for (const auto& br : kBridges) {
            const bool eq = check_equation(*find_equation(br.equation), c.pred(bi), c.sem.rel, c.pred(ci));
            if (eq != holds(br.logic, tv, c.pred(bi), c.pred(ci))) {
                r.fail(c.witness(bi, ci, std::nullopt,
                                 std::string(br.equation) + (eq ? " holds" : " fails") + " but " +
                                     std::string(name(br.logic)) + (eq ? " fails" : " holds")));
                return false;
            }
        }
        return true;
    });
}

void corollaries(Ctx& c, Runner& r) {
    ++r.v.triples;
    const std::size_t e = c.empty_idx, f = c.full_idx;
    const bool terminates = c.sem.may_diverge.none();
    if (c.T(TK::DWP, f).all() != terminates) {
        r.fail(c.witness(std::nullopt, f, std::nullopt, "dwp(p,true)=true disagrees with the termination flag"));
        return;
    }
    const bool reachable = c.sem.rel.codomain().all();
    const bool forms[] = {c.T(TK::ASP, f).all(), c.T(TK::DSP, f).all(), c.T(TK::DSLP, e).none(), c.T(TK::ASLP, e).none()};
    const char* labels[] = {"asp(p,true)=true", "dsp(p,true)=true", "dslp(p,false)=false", "aslp(p,false)=false"};
    for (std::size_t i = 0; i < 4; ++i) {
        if (forms[i] != reachable) {
            r.fail(c.witness(std::nullopt, std::nullopt, std::nullopt,
                             std::string(labels[i]) + " disagrees with the reachability flag"));
            return;
        }
    }
}

void may_must(Ctx& c, Runner& r) {
    // may termination: awp(p,true) = ¬dwlp(p,false); must termination: dwp(p,true) = ¬awlp(p,false)
    ++r.v.triples;
    const std::size_t e = c.empty_idx, f = c.full_idx;
    const Predicate may_terminate = c.sem.rel.domain();
    const Predicate must_terminate = ~c.sem.may_diverge;
    struct Row {
        const Predicate& got;
        const Predicate& expect;
        const char* label;
    };
    const Predicate not_dwlp = ~c.T(TK::DWLP, e);
    const Predicate not_awlp = ~c.T(TK::AWLP, e);
    const Row rows[] = {{c.T(TK::AWP, f), may_terminate, "awp(p,true) is not the may-terminate set"},
                        {not_dwlp, may_terminate, "not dwlp(p,false) is not the may-terminate set"},
                        {c.T(TK::DWP, f), must_terminate, "dwp(p,true) is not the must-terminate set"},
                        {not_awlp, must_terminate, "not awlp(p,false) is not the must-terminate set"}};
    for (const auto& row : rows) {
        if (auto s = differ_within(row.got, row.expect, Predicate::full(may_terminate.universe()))) {
            r.fail(c.witness(std::nullopt, std::nullopt, s, row.label));
            return;
        }
    }
}

void class_anatomy(Ctx& c, Runner& r) {
    for (std::size_t i = 0; i < c.npred() && !r.failed(); ++i) {
        ++r.v.triples;
        for (auto k : kAllTransformers) {
            if (auto s = differ_within(from_classes(k, c.sem, c.pred(i)), c.T(k, i), Predicate::full(c.pred(i).universe()))) {
                const bool back = is_backward(k);
                r.fail(c.witness(back ? std::nullopt : std::optional(i), back ? std::optional(i) : std::nullopt, s,
                                 std::string(name(k)) + " differs from its class reading"));
                return;
            }
        }
    }
}

void engines(Ctx& c, Runner& r) {
    for (std::size_t i = 0; i < c.npred() && !r.failed(); ++i) {
        ++r.v.triples;
        for (auto k : kAllTransformers) {
            const Predicate ind = inductive(k, c.view.program, c.view.space, c.pred(i));
            if (auto s = differ_within(ind, c.T(k, i), Predicate::full(ind.universe()))) {
                const bool back = is_backward(k);
                r.fail(c.witness(back ? std::nullopt : std::optional(i), back ? std::optional(i) : std::nullopt, s,
                                 std::string(name(k)) + ": inductive " + ind.render(c.view.space) + " vs oracle " +
                                     c.T(k, i).render(c.view.space)));
                return;
            }
        }
    }
}

void semantics_agreement(Ctx& c, Runner& r) {
    ++r.v.triples;
    const auto& space = c.view.space;
    TransitionGraph g(c.view.program, space);
    const Relation term = g.terminal_relation();
    for (StateIndex s = 0; s < space.size(); ++s) {
        const Predicate img = image(c.view.program, space, s);
        if (img != c.sem.rel.row(s) || term.row(s) != img) {
            r.fail(c.witness(std::nullopt, std::nullopt, s, "graph, collecting and relational images differ"));
            return;
        }
    }
    if (auto s = c.sem.must_diverge.first_not_in(c.sem.may_diverge)) {
        r.fail(c.witness(std::nullopt, std::nullopt, s, "must-diverge state that cannot diverge"));
        return;
    }
    // pointwise decomposition of the collecting semantics and the inverse
    for (std::size_t i = 0; i < c.npred(); ++i) {
        if (collecting(c.view.program, space, c.pred(i)) != c.sem.rel.post(c.pred(i))) {
            r.fail(c.witness(i, std::nullopt, std::nullopt, "collecting(S) is not the union of images"));
            return;
        }
        if (preimage(c.view.program, space, c.pred(i)) != c.sem.rel.pre(c.pred(i))) {
            r.fail(c.witness(std::nullopt, i, std::nullopt, "inverse semantics disagrees with the relation"));
            return;
        }
    }
}

void kat_compile(Ctx& c, Runner& r) {
    ++r.v.triples;
    const Relation k = eval_kat(compile_kat(c.view.program, c.view.space), c.view.space.size());
    if (k != c.sem.rel) {
        std::optional<StateIndex> s;
        for (StateIndex a = 0; a < k.universe() && !s; ++a)
            if (k.row(a) != c.sem.rel.row(a)) s = a;
        r.fail(c.witness(std::nullopt, std::nullopt, s, "eval_kat(compile_kat(p)) != denote_relation(p)"));
    }
}

// ---- conditional theorems ----

// Runs `claim` on every pair; pairs passing `filter` must satisfy it, and the
// first failing pair outside the filter is recorded for non-vacuity.
void conditional(Ctx& c, Runner& r, const std::function<bool(std::size_t, std::size_t)>& filter,
                 const std::function<std::optional<std::pair<StateIndex, std::string>>(std::size_t, std::size_t, bool)>& claim) {
    each_pair(c, r, [&](std::size_t bi, std::size_t ci) {
        const bool in = filter(bi, ci);
        if (in) ++r.v.filtered;
        if (in && r.failed()) return true;
        if (!in && r.v.nonvacuity) return true;
        if (auto bad = claim(bi, ci, in)) {
            auto w = c.witness(bi, ci, bad->first, bad->second);
            if (in)
                r.fail(std::move(w));
            else
                r.vacuity(std::move(w));
        }
        return true;
    });
}

using Fail = std::optional<std::pair<StateIndex, std::string>>;

Fail equal_on(const Predicate& a, const Predicate& b, const Predicate& scope, const std::string& label) {
    if (auto s = differ_within(a, b, scope)) return std::make_pair(*s, label);
    return std::nullopt;
}

void termination(Ctx& c, Runner& r, bool strict) {
    const Predicate full = Predicate::full(c.view.space.size());
    conditional(
        c, r,
        [&](std::size_t bi, std::size_t) {
            return strict ? c.sem.may_diverge.none() : !c.pred(bi).intersects(c.sem.may_diverge);
        },
        [&](std::size_t bi, std::size_t ci, bool) -> Fail {
            const Predicate& scope = strict ? full : c.pred(bi);
            if (auto f = equal_on(c.T(TK::DWP, ci), c.T(TK::DWLP, ci), scope, "dwp != dwlp")) return f;
            return equal_on(c.T(TK::AWP, ci), c.T(TK::AWLP, ci), scope, "awp != awlp");
        });
}

void may_termination(Ctx& c, Runner& r, bool strict) {
    // As stated: may termination (awp(p,true) = true) is equivalent to
    // awlp(p,false) = false, and makes the angelic transformers coincide.
    const Predicate full = Predicate::full(c.view.space.size());
    const Predicate& awp_true = c.T(TK::AWP, c.full_idx);
    const Predicate& awlp_false = c.T(TK::AWLP, c.empty_idx);
    conditional(
        c, r,
        [&](std::size_t bi, std::size_t) { return strict ? awp_true.all() : c.pred(bi).subset_of(awp_true); },
        [&](std::size_t bi, std::size_t ci, bool in) -> Fail {
            const Predicate& scope = strict ? full : c.pred(bi);
            if (auto s = (awlp_false & scope).first(); s && in)
                return std::make_pair(*s, std::string("awp(p,true) holds but awlp(p,false) does not vanish"));
            return equal_on(c.T(TK::AWP, ci), c.T(TK::AWLP, ci), scope, "awp != awlp");
        });
}

void reachability(Ctx& c, Runner& r, bool strict) {
    const Predicate full = Predicate::full(c.view.space.size());
    const Predicate reach = c.sem.rel.codomain();
    conditional(
        c, r, [&](std::size_t, std::size_t ci) { return strict ? reach.all() : c.pred(ci).subset_of(reach); },
        [&](std::size_t bi, std::size_t ci, bool) -> Fail {
            const Predicate& scope = strict ? full : c.pred(ci);
            if (auto f = equal_on(c.T(TK::ASP, bi), c.T(TK::ASLP, bi), scope, "asp != aslp")) return f;
            return equal_on(c.T(TK::DSP, bi), c.T(TK::DSLP, bi), scope, "dsp != dslp");
        });
}

void determinism(Ctx& c, Runner& r) {
    const Predicate full = Predicate::full(c.view.space.size());
    const bool det = !has_choice(c.view.program);
    conditional(
        c, r, [&](std::size_t, std::size_t) { return det; },
        [&](std::size_t, std::size_t ci, bool) -> Fail {
            if (auto f = equal_on(c.T(TK::AWP, ci), c.T(TK::DWP, ci), full, "awp != dwp")) return f;
            return equal_on(c.T(TK::AWLP, ci), c.T(TK::DWLP, ci), full, "awlp != dwlp");
        });
}

Predicate multi_origin(const Semantics& sem) {
    Predicate out(sem.rel.universe());
    for (StateIndex t = 0; t < sem.rel.universe(); ++t) out.set(t, sem.conv.row(t).count() > 1);
    return out;
}

void reversibility(Ctx& c, Runner& r, bool strict) {
    const Predicate full = Predicate::full(c.view.space.size());
    const Predicate multi = multi_origin(c.sem);
    conditional(
        c, r, [&](std::size_t, std::size_t ci) { return strict ? multi.none() : !c.pred(ci).intersects(multi); },
        [&](std::size_t bi, std::size_t ci, bool) -> Fail {
            const Predicate& scope = strict ? full : c.pred(ci);
            if (auto f = equal_on(c.T(TK::ASP, bi), c.T(TK::DSP, bi), scope, "asp != dsp")) return f;
            return equal_on(c.T(TK::ASLP, bi), c.T(TK::DSLP, bi), scope, "aslp != dslp");
        });
}

void branching(Ctx& c, Runner& r, bool strict) {
    const Predicate full = Predicate::full(c.view.space.size());
    const Predicate branch = c.sem.may_diverge - c.sem.must_diverge;
    conditional(
        c, r, [&](std::size_t bi, std::size_t) { return strict ? branch.none() : !c.pred(bi).intersects(branch); },
        [&](std::size_t bi, std::size_t ci, bool) -> Fail {
            const Predicate& scope = strict ? full : c.pred(bi);
            const Predicate& awp = c.T(TK::AWP, ci);
            const Predicate& dwlp = c.T(TK::DWLP, ci);
            if (auto f = equal_on(c.T(TK::DWP, ci), awp & dwlp, scope, "dwp != awp & dwlp")) return f;
            return equal_on(c.T(TK::AWLP, ci), awp | dwlp, scope, "awlp != awp | dwlp");
        });
}

void forced_galois(Ctx& c, Runner& r) {
    const bool filter = !has_choice(c.view.program) && multi_origin(c.sem).none();
    conditional(
        c, r, [&](std::size_t, std::size_t) { return filter; },
        [&](std::size_t bi, std::size_t ci, bool) -> Fail {
            const auto tv = c.values(bi, ci);
            const auto a = evaluate(Logic::AwlpLB, tv, c.pred(bi), c.pred(ci));
            const auto d = evaluate(Logic::DspUB, tv, c.pred(bi), c.pred(ci));
            if (a.holds == d.holds) return std::nullopt;
            const StateIndex s = a.holds ? *d.witness : *a.witness;
            return std::make_pair(s, std::string(a.holds ? "awlpLB holds but dspUB fails" : "dspUB holds but awlpLB fails"));
        });
}

// ---- per-slice claims ----

void remark_diverging(const StateSpace& space, std::size_t, Runner& r) {
    // skip and skip [] while true {skip}: same collecting semantics, different awlp.
    const Program skip = p_skip();
    const Program loop = p_choice(p_skip(), p_while(g_true(), p_skip()));
    const std::size_t n = space.size();
    std::vector<Predicate> preds;
    if (n <= 16)
        preds = all_predicates(n);
    else
        preds = {Predicate::empty(n), Predicate::full(n)};
    ++r.v.programs;
    bool awlp_differs = false;
    for (const auto& q : preds) {
        ++r.v.triples;
        if (collecting(skip, space, q) != collecting(loop, space, q)) {
            Witness w{describe_space(space), print(skip), print(loop), q.render(space), std::nullopt, std::nullopt,
                      "collecting semantics differ"};
            r.fail(std::move(w));
            return;
        }
        if (oracle(TK::AWLP, skip, space, q) != oracle(TK::AWLP, loop, space, q)) awlp_differs = true;
    }
    if (!awlp_differs) {
        Witness w{describe_space(space), print(skip), print(loop), std::nullopt, std::nullopt, std::nullopt,
                  "awlp does not distinguish the two programs"};
        r.fail(std::move(w));
    }
}

Runner make_runner(const std::string& id, const SurveyOptions& opts) {
    Runner r;
    r.v.claim = id;
    r.conditional = is_conditional(id);
    const bool strict = opts.strict;
    if (id == "ORDERING") r.on_case = ordering;
    else if (id == "CONTRAPOSITIVE") r.on_case = contrapositive;
    else if (id == "GALOIS_PC") r.on_case = [](Ctx& c, Runner& rr) { galois(c, rr, Logic::DwlpLB, Logic::AspUB); };
    else if (id == "GALOIS_PI") r.on_case = [](Ctx& c, Runner& rr) { galois(c, rr, Logic::AwpUB, Logic::DslpLB); };
    else if (id == "COMBO_IDENTITIES") r.on_case = combo;
    else if (id == "FIG4_IMPLICATIONS") r.on_case = fig4;
    else if (id == "BRIDGES") r.on_case = bridges;
    else if (id == "REMARK_DIVERGING") r.on_slice = remark_diverging;
    else if (id == "TERMINATION_COLLAPSE") r.on_case = [strict](Ctx& c, Runner& rr) { termination(c, rr, strict); };
    else if (id == "MAY_TERMINATION") r.on_case = [strict](Ctx& c, Runner& rr) { may_termination(c, rr, strict); };
    else if (id == "MAY_MUST_TERMINATION") r.on_case = may_must;
    else if (id == "REACHABILITY_COLLAPSE") r.on_case = [strict](Ctx& c, Runner& rr) { reachability(c, rr, strict); };
    else if (id == "DETERMINISM_COLLAPSE") r.on_case = determinism;
    else if (id == "REVERSIBILITY_COLLAPSE") r.on_case = [strict](Ctx& c, Runner& rr) { reversibility(c, rr, strict); };
    else if (id == "BRANCHING_COLLAPSE") r.on_case = [strict](Ctx& c, Runner& rr) { branching(c, rr, strict); };
    else if (id == "FORCED_GALOIS") r.on_case = forced_galois;
    else if (id == "COROLLARIES") r.on_case = corollaries;
    else if (id == "CLASS_ANATOMY") r.on_case = class_anatomy;
    else if (id == "ENGINE_AGREEMENT") r.on_case = engines;
    else if (id == "SEMANTICS_AGREEMENT") r.on_case = semantics_agreement;
    else if (id == "KAT_COMPILE") r.on_case = kat_compile;
    else throw InvalidArgument("unknown theorem '" + id + "'");
    return r;
}

}  // namespace

const std::vector<std::string>& theorem_ids() { return kTheorems; }

bool is_theorem(const std::string& id) { return std::find(kTheorems.begin(), kTheorems.end(), id) != kTheorems.end(); }

bool is_conditional(const std::string& id) {
    return std::find(kConditional.begin(), kConditional.end(), id) != kConditional.end();
}

std::string describe_space(const StateSpace& space) {
    std::string out = "vars ";
    for (std::size_t i = 0; i < space.vars().size(); ++i) out += (i ? ", " : "") + space.vars()[i];
    return out + " mod " + std::to_string(space.modulus());
}

std::vector<Verdict> check_theorems(const std::vector<std::string>& ids, const CorpusSpec& corpus,
                                    const SurveyOptions& opts) {
    using Clock = std::chrono::steady_clock;
    std::vector<Runner> runners;
    for (const auto& id : ids) runners.push_back(make_runner(id, opts));
    std::vector<double> elapsed(runners.size(), 0.0);

    std::size_t last_slice = static_cast<std::size_t>(-1);
    for_each_case(corpus, [&](const CaseView& view) {
        if (view.slice != last_slice) {
            last_slice = view.slice;
            for (std::size_t i = 0; i < runners.size(); ++i) {
                if (!runners[i].on_slice || runners[i].failed()) continue;
                const auto t0 = Clock::now();
                runners[i].on_slice(view.space, view.slice, runners[i]);
                elapsed[i] += std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
            }
        }
        bool any = false;
        for (const auto& r : runners)
            if (r.on_case && !r.finished()) any = true;
        if (!any) return true;
        const auto t0 = Clock::now();
        Ctx ctx(view);
        const double shared = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        for (std::size_t i = 0; i < runners.size(); ++i) {
            auto& r = runners[i];
            if (!r.on_case || r.finished()) continue;
            const auto t1 = Clock::now();
            ++r.v.programs;
            r.on_case(ctx, r);
            elapsed[i] += shared + std::chrono::duration<double, std::milli>(Clock::now() - t1).count();
        }
        return true;
    });

    std::vector<Verdict> out;
    for (std::size_t i = 0; i < runners.size(); ++i) {
        Verdict v = std::move(runners[i].v);
        v.corpus = corpus.name;
        v.seed = corpus.seed;
        v.duration_ms = elapsed[i];
        out.push_back(std::move(v));
    }
    return out;
}

Verdict check_theorem(const std::string& id, const CorpusSpec& corpus, const SurveyOptions& opts) {
    return check_theorems({id}, corpus, opts).front();
}

}  // namespace ngcl
