#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ngcl/ast.hpp"
#include "ngcl/predicate.hpp"
#include "ngcl/semantics.hpp"
#include "ngcl/transformers.hpp"

namespace ngcl {

// The sixteen transformer/bound combinations, then the two in-between logics.
// LB: b ⊆ T(p,c) for backward T, c ⊆ T(p,b) for forward T.
// UB: T(p,c) ⊆ b for backward T, T(p,b) ⊆ c for forward T.
enum class Logic : int {
    AwpLB, AwpUB, DwpLB, DwpUB, AwlpLB, AwlpUB, DwlpLB, DwlpUB,
    AspLB, AspUB, DspLB, DspUB, AslpLB, AslpUB, DslpLB, DslpUB,
    Union,         // b ⊆ awp(p,c) ∪ dwlp(p,c)
    Intersection,  // b ⊆ awp(p,c) ∩ dwlp(p,c)
};

inline constexpr std::size_t kLogicCount = 18;
std::array<Logic, kLogicCount> all_logics();

enum class Bound { LB, UB };

// For the sixteen simple logics; throws for the in-between ones.
TransformerKind transformer_of(Logic l);
Bound bound_of(Logic l);
Logic make_logic(TransformerKind k, Bound b);

std::string_view name(Logic l);             // "awpLB", ..., "UNION_LOGIC"
std::string_view colloquial_name(Logic l);  // "" when the logic has none
std::string subset_condition(Logic l);      // "b ⊆ awp(p,c)" in ASCII: "b <= awp(p,c)"
// TopKAT catalog entry characterising the logic, if any.
std::optional<std::string_view> equation_link(Logic l);
// Accepts ids ("dwpLB"), colloquial aliases ("total-correctness") and
// case/punctuation variants ("DWP_LB").
std::optional<Logic> parse_logic(std::string_view s);

struct Triple {
    Predicate pre;
    Program program;
    Predicate post;
};

// The eight transformers of one program for one (b, c): backward ones on c,
// forward ones on b.
struct TransformerValues {
    std::array<Predicate, 8> v;
    const Predicate& operator[](TransformerKind k) const { return v[static_cast<std::size_t>(k)]; }
};
TransformerValues transformer_values(const Semantics& sem, const Predicate& b, const Predicate& c);

struct LogicVerdict {
    bool holds = true;
    // A state violating the subset condition: initial for backward logics,
    // final for forward ones.
    std::optional<StateIndex> witness;
};

LogicVerdict evaluate(Logic l, const TransformerValues& tv, const Predicate& b, const Predicate& c);
bool holds(Logic l, const TransformerValues& tv, const Predicate& b, const Predicate& c);
bool holds(Logic l, const Triple& t, const StateSpace& space);
LogicVerdict evaluate(Logic l, const Triple& t, const StateSpace& space);

// ---- assumptions ----

enum class Tri { Holds, Fails, NotEvaluated };

struct Flag {
    Tri status = Tri::NotEvaluated;
    std::optional<StateIndex> witness;
    std::string note;
};

struct AssumptionSet {
    Flag termination;              // no state of scope_pre may diverge
    Flag reachability;             // every state of scope_post is reachable
    Flag determinism;              // syntactic: no choice node
    Flag reversibility;            // every state of scope_post has at most one origin
    Flag no_branching_divergence;  // may-divergence equals must-divergence on scope_pre
};

AssumptionSet classify(const Program& p, const StateSpace& space, const Semantics& sem, const Predicate& scope_pre,
                       const Predicate& scope_post);
AssumptionSet classify(const Program& p, const StateSpace& space, const Predicate& scope_pre,
                       const Predicate& scope_post);

// Semantic determinism: every state has at most one outcome, and a state that
// may diverge has none. Not used by the determinism collapse, which is syntactic.
bool semantically_deterministic(const Semantics& sem);

std::string_view name(Tri t);

}  // namespace ngcl
