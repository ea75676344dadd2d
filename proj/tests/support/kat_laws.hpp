#pragma once

// Random KatTerms and an extensional check of the Kleene-algebra-with-tests
// axioms (plus the top element) in the relational model.

#include <cstdint>
#include <string>

#include "ngcl/generator.hpp"
#include "ngcl/topkat.hpp"

namespace ngcl::testing {

inline Relation random_relation(Rng& rng, std::size_t n, unsigned density) {
    Relation r(n);
    for (StateIndex a = 0; a < n; ++a)
        for (StateIndex b = 0; b < n; ++b) r.set(a, b, rng.chance(density));
    return r;
}

inline Predicate random_pred(Rng& rng, std::size_t n) {
    Predicate q(n);
    for (StateIndex s = 0; s < n; ++s) q.set(s, rng.chance(50));
    return q;
}

inline KatTerm random_test(Rng& rng, std::size_t n, int depth) {
    if (depth <= 0 || rng.chance(40)) {
        switch (rng.below(4)) {
            case 0: return k_zero();
            case 1: return k_one();
            default: return k_test(random_pred(rng, n));
        }
    }
    switch (rng.below(3)) {
        case 0: return k_not(random_test(rng, n, depth - 1));
        case 1: return k_plus(random_test(rng, n, depth - 1), random_test(rng, n, depth - 1));
        default: return k_dot(random_test(rng, n, depth - 1), random_test(rng, n, depth - 1));
    }
}

inline KatTerm random_term(Rng& rng, std::size_t n, int depth) {
    if (depth <= 0 || rng.chance(30)) {
        switch (rng.below(6)) {
            case 0: return k_zero();
            case 1: return k_one();
            case 2: return k_top();
            case 3: return random_test(rng, n, 1);
            default: return k_prim(random_relation(rng, n, 30));
        }
    }
    switch (rng.below(3)) {
        case 0: return k_plus(random_term(rng, n, depth - 1), random_term(rng, n, depth - 1));
        case 1: return k_dot(random_term(rng, n, depth - 1), random_term(rng, n, depth - 1));
        default: return k_star(random_term(rng, n, depth - 1));
    }
}

inline bool leq(const Relation& a, const Relation& b) { return (a | b) == b; }

struct LawReport {
    std::size_t terms = 0;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::size_t induction_cases = 0;  // star induction with an arbitrary x whose premise held
    std::string first_failure;
};

// `count` triples (a, b, c) of random terms over Σ of size 1..3, plus a pair
// of random tests per round.
inline LawReport check_kat_laws(std::uint64_t seed, int count) {
    Rng rng(seed);
    LawReport rep;
    for (int i = 0; i < count; ++i) {
        const std::size_t n = 1 + rng.below(3);
        const auto a = random_term(rng, n, 3), b = random_term(rng, n, 3), c = random_term(rng, n, 3);
        rep.terms += 3;
        const auto A = eval_kat(a, n), B = eval_kat(b, n), C = eval_kat(c, n);
        const auto one = Relation::identity(n), zero = Relation(n), top = Relation::top(n);
        auto law = [&](bool ok, const char* what) {
            ++rep.checks;
            if (ok) return;
            if (rep.failures++ == 0)
                rep.first_failure = std::string(what) + " with a = " + print(a) + ", b = " + print(b) + ", c = " + print(c);
        };
        // idempotent semiring
        law((A | (B | C)) == ((A | B) | C), "+ associative");
        law((A | B) == (B | A), "+ commutative");
        law((A | zero) == A, "0 unit of +");
        law((A | A) == A, "+ idempotent");
        law(A.compose(B.compose(C)) == A.compose(B).compose(C), "; associative");
        law(one.compose(A) == A, "1 left unit");
        law(A.compose(one) == A, "1 right unit");
        law(zero.compose(A) == zero, "0 left annihilator");
        law(A.compose(zero) == zero, "0 right annihilator");
        law(A.compose(B | C) == (A.compose(B) | A.compose(C)), "left distributivity");
        law((A | B).compose(C) == (A.compose(C) | B.compose(C)), "right distributivity");
        // the four star laws
        const auto S = eval_kat(k_star(a), n);
        law(leq(one | A.compose(S), S), "1 + a a* <= a*");
        law(leq(one | S.compose(A), S), "1 + a* a <= a*");
        const auto X = S.compose(B | C);  // satisfies b + a x <= x
        law(leq(B | A.compose(X), X) && leq(S.compose(B), X), "b + a x <= x => a* b <= x");
        const auto Y = (B | C).compose(S);  // satisfies b + x a <= x
        law(leq(B | Y.compose(A), Y) && leq(B.compose(S), Y), "b + x a <= x => b a* <= x");
        if (leq(B | A.compose(C), C)) {
            ++rep.induction_cases;
            law(leq(S.compose(B), C), "b + a c <= c => a* b <= c");
        }
        if (leq(B | C.compose(A), C)) {
            ++rep.induction_cases;
            law(leq(B.compose(S), C), "b + c a <= c => b a* <= c");
        }
        law(leq(A, top), "a <= T");
        // tests form a Boolean algebra
        const auto s = random_test(rng, n, 2), t = random_test(rng, n, 2);
        rep.terms += 2;
        const auto Ts = eval_kat(s, n), Tt = eval_kat(t, n), Tns = eval_kat(k_not(s), n);
        law(Ts.compose(Tt) == Tt.compose(Ts), "tests commute");
        law(Ts.compose(Ts) == Ts, "tests idempotent");
        law((Ts | Tns) == one, "s + !s = 1");
        law(Ts.compose(Tns) == zero, "s !s = 0");
        law(eval_kat(k_not(k_not(s)), n) == Ts, "!!s = s");
        law(eval_kat(k_not(k_plus(s, t)), n) == Tns.compose(eval_kat(k_not(t), n)), "!(s + t) = !s !t");
        law(leq(Ts, one), "s <= 1");
    }
    return rep;
}

}  // namespace ngcl::testing
