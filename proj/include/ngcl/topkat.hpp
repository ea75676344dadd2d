#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ngcl/ast.hpp"
#include "ngcl/predicate.hpp"
#include "ngcl/relation.hpp"

namespace ngcl {

// ---- TopKAT terms, interpreted in the relational model ----

struct KatNode;
using KatTerm = std::shared_ptr<const KatNode>;

enum class KatKind { Zero, One, Top, Test, Prim, Plus, Dot, Star, Not };

struct KatNode {
    KatKind kind;
    std::string label;       // Test / Prim
    Predicate test;          // Test
    Relation prim;           // Prim
    KatTerm a, b;            // Plus/Dot; Star/Not use a
};

KatTerm k_zero();
KatTerm k_one();
KatTerm k_top();
KatTerm k_test(Predicate p, std::string label = "b");
KatTerm k_prim(Relation r, std::string label = "p");
KatTerm k_plus(KatTerm a, KatTerm b);
KatTerm k_dot(KatTerm a, KatTerm b);
KatTerm k_star(KatTerm a);
KatTerm k_not(KatTerm a);  // only over Boolean (test) subterms

// True for terms built from tests, 0, 1, +, . and negation only.
bool is_test(const KatTerm& t);
// Throws InvalidArgument for negation of a non-test term.
Relation eval_kat(const KatTerm& t, std::size_t n);
std::string print(const KatTerm& t);

// nGCL program as a KAT term: if/while via guarded choice and guarded star.
KatTerm compile_kat(const Program& p, const StateSpace& space);

// ---- equation catalog ----

enum class KatSym { Top, B, NotB, P, C, NotC, Zero };

struct KatEquation {
    std::vector<KatSym> lhs, rhs;
    bool negated = false;  // lhs != rhs
    bool operator==(const KatEquation&) const = default;
};

struct CatalogEntry {
    std::string id;
    std::vector<KatEquation> system;  // conjunction
};

const std::vector<CatalogEntry>& equation_catalog();
const CatalogEntry* find_equation(std::string_view id);
std::string print(const KatEquation& eq);
std::string print(const CatalogEntry& e);

// A word over the catalog alphabet as a KAT term, and its direct evaluation
// by left-to-right composition (same value as eval_kat of the term).
KatTerm word_term(const std::vector<KatSym>& w, const Predicate& b, const Relation& p, const Predicate& c);
Relation eval_word(const std::vector<KatSym>& w, const Predicate& b, const Relation& p, const Predicate& c);

// Evaluate an entry for a triple: b, c tests and p a relation.
bool check_equation(const CatalogEntry& e, const Predicate& b, const Relation& p, const Predicate& c);
bool check_equation(const KatEquation& e, const Predicate& b, const Relation& p, const Predicate& c);

// Syntactic transformations between equations:
//   t1  mirror both sides (converse, swapping the roles of b and c);
//   t2  on the rhs, insert or drop p next to the top element;
//   t3  on the rhs, swap "b p" with "p c", then negate every test.
std::optional<KatEquation> apply_t1(const KatEquation& e);
std::optional<KatEquation> apply_t2(const KatEquation& e);
std::optional<KatEquation> apply_t3(const KatEquation& e);

struct TransformationLink {
    std::string from, via, to;
};
// Links between single-equation catalog entries induced by t1..t3.
std::vector<TransformationLink> transformation_links();

}  // namespace ngcl
