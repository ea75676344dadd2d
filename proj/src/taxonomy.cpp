#include "ngcl/taxonomy.hpp"

#include <algorithm>
#include <cctype>

#include "ngcl/errors.hpp"

namespace ngcl {

namespace {

constexpr std::array<std::string_view, kLogicCount> kLogicNames = {
    "awpLB",  "awpUB",  "dwpLB",  "dwpUB",  "awlpLB", "awlpUB", "dwlpLB",      "dwlpUB",           "aspLB",
    "aspUB",  "dspLB",  "dspUB",  "aslpLB", "aslpUB", "dslpLB", "dslpUB",      "UNION_LOGIC",      "INTERSECTION_LOGIC"};

struct Alias {
    std::string_view alias;
    Logic logic;
};

constexpr Alias kAliases[] = {
    {"lisbon", Logic::AwpLB},
    {"total-correctness", Logic::DwpLB},
    {"partial-correctness", Logic::DwlpLB},
    {"hoare", Logic::DwlpLB},
    {"angelic-partial-correctness", Logic::AwlpLB},
    {"partial-incorrectness", Logic::DslpLB},
    {"incorrectness", Logic::AspLB},
    {"demonic-incorrectness", Logic::DspLB},
    {"angelic-partial-incorrectness", Logic::AslpLB},
    {"in-between", Logic::Union},
    {"union", Logic::Union},
    {"intersection", Logic::Intersection},
};

std::string squash(std::string_view s) {
    std::string out;
    for (char c : s)
        if (std::isalnum(static_cast<unsigned char>(c))) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

bool simple(Logic l) { return static_cast<int>(l) < 16; }

}  // namespace

std::array<Logic, kLogicCount> all_logics() {
    std::array<Logic, kLogicCount> out{};
    for (std::size_t i = 0; i < kLogicCount; ++i) out[i] = static_cast<Logic>(i);
    return out;
}

TransformerKind transformer_of(Logic l) {
    if (!simple(l)) throw InvalidArgument("in-between logics combine two transformers");
    return static_cast<TransformerKind>(static_cast<int>(l) / 2);
}

Bound bound_of(Logic l) {
    if (!simple(l)) return Bound::LB;
    return static_cast<int>(l) % 2 == 0 ? Bound::LB : Bound::UB;
}

Logic make_logic(TransformerKind k, Bound b) {
    return static_cast<Logic>(static_cast<int>(k) * 2 + (b == Bound::UB ? 1 : 0));
}

std::string_view name(Logic l) { return kLogicNames[static_cast<std::size_t>(l)]; }

std::string_view colloquial_name(Logic l) {
    switch (l) {
        case Logic::AwpLB: return "Lisbon logic (angelic total correctness)";
        case Logic::DwpLB: return "Hoare logic (total correctness)";
        case Logic::AwlpLB: return "angelic partial correctness";
        case Logic::DwlpLB:
        case Logic::AspUB: return "Hoare logic (partial correctness)";
        case Logic::AwpUB:
        case Logic::DslpLB: return "partial incorrectness";
        case Logic::DspLB: return "demonic incorrectness";
        case Logic::AslpLB: return "angelic partial incorrectness";
        case Logic::AspLB: return "incorrectness logic";
        case Logic::Union: return "in-between logic (union)";
        case Logic::Intersection: return "in-between logic (intersection)";
        default: return "";
    }
}

std::string subset_condition(Logic l) {
    if (l == Logic::Union) return "b <= awp(p,c) | dwlp(p,c)";
    if (l == Logic::Intersection) return "b <= awp(p,c) & dwlp(p,c)";
    const auto k = transformer_of(l);
    const std::string t = std::string(name(k)) + (is_backward(k) ? "(p,c)" : "(p,b)");
    const std::string side = is_backward(k) ? "b" : "c";
    return bound_of(l) == Bound::LB ? side + " <= " + t : t + " <= " + side;
}

std::optional<std::string_view> equation_link(Logic l) {
    switch (l) {
        case Logic::AwpLB: return "LISBON";
        case Logic::DwlpLB:
        case Logic::AspUB: return "PARTIAL_CORRECTNESS";
        case Logic::DwlpUB: return "DWLP_UB";
        case Logic::AspLB: return "INCORRECTNESS";
        case Logic::AslpLB: return "ANGELIC_PARTIAL_INCORRECTNESS";
        case Logic::AwpUB:
        case Logic::DslpLB: return "DEMONIC_PARTIAL_INCORRECTNESS";
        case Logic::DslpUB: return "DSLP_UB";
        case Logic::DspUB: return "DSP_UB";
        case Logic::DspLB: return "DEMONIC_INCORRECTNESS";
        case Logic::Union: return "IN_BETWEEN";
        case Logic::Intersection: return "OUTCOME_CONJUNCTION";
        default: return std::nullopt;
    }
}

std::optional<Logic> parse_logic(std::string_view s) {
    const std::string key = squash(s);
    for (std::size_t i = 0; i < kLogicCount; ++i)
        if (squash(kLogicNames[i]) == key) return static_cast<Logic>(i);
    for (const auto& a : kAliases)
        if (squash(a.alias) == key) return a.logic;
    if (key == "union" || key == "unionlogic") return Logic::Union;
    return std::nullopt;
}

TransformerValues transformer_values(const Semantics& sem, const Predicate& b, const Predicate& c) {
    TransformerValues tv;
    for (auto k : kAllTransformers) tv.v[static_cast<std::size_t>(k)] = oracle(k, sem, is_backward(k) ? c : b);
    return tv;
}

LogicVerdict evaluate(Logic l, const TransformerValues& tv, const Predicate& b, const Predicate& c) {
    auto subset = [](const Predicate& small, const Predicate& big) {
        LogicVerdict v;
        v.witness = small.first_not_in(big);
        v.holds = !v.witness.has_value();
        return v;
    };
    if (l == Logic::Union) return subset(b, tv[TransformerKind::AWP] | tv[TransformerKind::DWLP]);
    if (l == Logic::Intersection) return subset(b, tv[TransformerKind::AWP] & tv[TransformerKind::DWLP]);
    const auto k = transformer_of(l);
    const Predicate& side = is_backward(k) ? b : c;
    return bound_of(l) == Bound::LB ? subset(side, tv[k]) : subset(tv[k], side);
}

bool holds(Logic l, const TransformerValues& tv, const Predicate& b, const Predicate& c) {
    return evaluate(l, tv, b, c).holds;
}

LogicVerdict evaluate(Logic l, const Triple& t, const StateSpace& space) {
    if (t.pre.universe() != space.size() || t.post.universe() != space.size())
        throw InvalidArgument("triple predicates do not match the state space");
    const Semantics sem = analyze(t.program, space);
    return evaluate(l, transformer_values(sem, t.pre, t.post), t.pre, t.post);
}

bool holds(Logic l, const Triple& t, const StateSpace& space) { return evaluate(l, t, space).holds; }

// ---- assumptions ----

namespace {

Flag flag_from(std::optional<StateIndex> witness, std::string note = {}) {
    Flag f;
    f.status = witness ? Tri::Fails : Tri::Holds;
    f.witness = witness;
    if (witness) f.note = std::move(note);
    return f;
}

}  // namespace

AssumptionSet classify(const Program& p, const StateSpace&, const Semantics& sem, const Predicate& scope_pre,
                       const Predicate& scope_post) {
    AssumptionSet a;
    a.termination = flag_from((scope_pre & sem.may_diverge).first(), "may diverge");

    const Predicate reachable = sem.rel.codomain();
    a.reachability = flag_from(scope_post.first_not_in(reachable), "unreachable");

    a.determinism.status = has_choice(p) ? Tri::Fails : Tri::Holds;
    if (has_choice(p)) a.determinism.note = "program contains a nondeterministic choice";

    std::optional<StateIndex> many;
    for (auto t : scope_post.states()) {
        const std::size_t k = sem.conv.row(t).count();
        if (k > 1) {
            many = t;
            a.reversibility.note = "preimage has " + std::to_string(k) + " elements";
            break;
        }
    }
    const std::string rev_note = a.reversibility.note;
    a.reversibility = flag_from(many, rev_note);

    const Predicate branching = sem.may_diverge - sem.must_diverge;
    a.no_branching_divergence = flag_from((scope_pre & branching).first(), "may but need not diverge");
    return a;
}

AssumptionSet classify(const Program& p, const StateSpace& space, const Predicate& scope_pre,
                       const Predicate& scope_post) {
    return classify(p, space, analyze(p, space), scope_pre, scope_post);
}

bool semantically_deterministic(const Semantics& sem) {
    for (StateIndex s = 0; s < sem.rel.universe(); ++s) {
        const std::size_t k = sem.rel.row(s).count();
        if (k > 1) return false;
        if (k == 1 && sem.may_diverge.test(s)) return false;
    }
    return true;
}

std::string_view name(Tri t) {
    switch (t) {
        case Tri::Holds: return "holds";
        case Tri::Fails: return "fails";
        case Tri::NotEvaluated: return "not-evaluated";
    }
    return "?";
}

}  // namespace ngcl
