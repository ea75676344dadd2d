#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "ngcl/ast.hpp"
#include "ngcl/predicate.hpp"
#include "ngcl/semantics.hpp"

namespace ngcl {

enum class TransformerKind { AWP, DWP, AWLP, DWLP, ASP, DSP, ASLP, DSLP };

inline constexpr std::array<TransformerKind, 8> kAllTransformers = {
    TransformerKind::AWP, TransformerKind::DWP, TransformerKind::AWLP, TransformerKind::DWLP,
    TransformerKind::ASP, TransformerKind::DSP, TransformerKind::ASLP, TransformerKind::DSLP};

std::string_view name(TransformerKind k);
std::optional<TransformerKind> parse_transformer(std::string_view s);
// Backward transformers map a postcondition to initial states; forward ones
// map a precondition to final states.
inline bool is_backward(TransformerKind k) { return static_cast<int>(k) < 4; }

enum class Engine { Oracle, Inductive, Both };

// Direct reading of the semantic definitions, over [[p]] and may-divergence.
Predicate oracle(TransformerKind k, const Semantics& sem, const Predicate& pred);
Predicate oracle(TransformerKind k, const Program& p, const StateSpace& space, const Predicate& pred);

// Syntax-directed rules; loops by Kleene iteration (least or greatest fixpoint).
Predicate inductive(TransformerKind k, const Program& p, const StateSpace& space, const Predicate& pred);

// Engine::Both computes both and throws EngineMismatch if they differ.
Predicate transform(TransformerKind k, const Program& p, const StateSpace& space, const Predicate& pred,
                    Engine engine = Engine::Oracle);

// ---- classes of states ----
//
// Coreachability of an initial state s w.r.t. c, from three observations:
//   can terminate in c, can terminate outside c, can diverge.
//   1: c only          2: c + diverge      3: c + not-c      4: diverge only
//   5: all three       6: not-c + diverge  7: not-c only
int coreachability_class(const Semantics& sem, const Predicate& c, StateIndex s);
// Reachability of a final state t w.r.t. b:
//   1: reachable only from b   2: from b and not-b   3: unreachable   4: only from not-b
int reachability_class(const Semantics& sem, const Predicate& b, StateIndex t);
// Which classes each transformer accepts.
bool class_accepted(TransformerKind k, int cls);
// The transformer recomputed as the union of its accepted classes.
Predicate from_classes(TransformerKind k, const Semantics& sem, const Predicate& pred);

}  // namespace ngcl
