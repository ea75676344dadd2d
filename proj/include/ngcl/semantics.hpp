#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ngcl/ast.hpp"
#include "ngcl/predicate.hpp"
#include "ngcl/relation.hpp"
#include "ngcl/state_space.hpp"

namespace ngcl {

inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

// Collecting semantics lifted to sets: the union of [[p]]s over s in S.
Predicate collecting(const Program& p, const StateSpace& space, const Predicate& S);
// [[p]]s for a single state.
Predicate image(const Program& p, const StateSpace& space, StateIndex s);
// Inverse collecting semantics: {s | [[p]]s meets T}.
Predicate preimage(const Program& p, const StateSpace& space, const Predicate& T);

// Input/output relation of p, compositionally (loops by Kleene iteration).
Relation denote_relation(const Program& p, const StateSpace& space);

// Small-step configuration graph over (continuation, state) pairs.
class TransitionGraph {
public:
    TransitionGraph(const Program& p, const StateSpace& space, std::size_t node_budget = kDefaultNodeBudget);

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t initial(StateIndex s) const { return initial_[s]; }
    bool terminal(std::size_t node) const { return nodes_[node].cont.empty(); }
    StateIndex state(std::size_t node) const { return nodes_[node].state; }
    const std::vector<std::size_t>& successors(std::size_t node) const { return nodes_[node].succ; }

    // States from which some execution runs forever (reaches a cycle).
    Predicate may_diverge() const;
    // Terminal states reachable from each initial state.
    Relation terminal_relation() const;
    std::string to_dot() const;

private:
    struct Node {
        std::vector<const ProgramNode*> cont;  // top of stack at back
        StateIndex state;
        std::vector<std::size_t> succ;
    };
    const StateSpace& space_;
    std::vector<Node> nodes_;
    std::vector<std::size_t> initial_;
};

// Everything the oracle transformers need about one program.
struct Semantics {
    Relation rel;
    Relation conv;
    Predicate may_diverge;
    Predicate must_diverge;
};

Semantics analyze(const Program& p, const StateSpace& space, std::size_t node_budget = kDefaultNodeBudget);

}  // namespace ngcl
