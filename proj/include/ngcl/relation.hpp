#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ngcl/predicate.hpp"
#include "ngcl/state_space.hpp"

namespace ngcl {

// Dense relations are n*n bits; keep them to something that fits comfortably.
inline constexpr std::size_t kRelationCap = std::size_t{1} << 13;

// Binary relation over {0..n-1}: row(s) is the image of s.
class Relation {
public:
    Relation() = default;
    explicit Relation(std::size_t n);

    static Relation identity(std::size_t n);
    static Relation top(std::size_t n);
    static Relation diag(const Predicate& p);
    static Relation from_pairs(std::size_t n, const std::vector<std::pair<StateIndex, StateIndex>>& pairs);

    std::size_t universe() const { return n_; }
    bool test(StateIndex a, StateIndex b) const { return rows_[a].test(b); }
    void set(StateIndex a, StateIndex b, bool v = true) { rows_[a].set(b, v); }
    const Predicate& row(StateIndex a) const { return rows_[a]; }
    Predicate& row(StateIndex a) { return rows_[a]; }

    bool empty() const;
    std::size_t count() const;
    Predicate domain() const;
    Predicate codomain() const;
    Relation converse() const;
    // Image / preimage of a set.
    Predicate post(const Predicate& s) const;
    Predicate pre(const Predicate& t) const;

    Relation operator|(const Relation& o) const;
    Relation operator&(const Relation& o) const;
    // Sequential composition: (a,c) iff exists b. (a,b) in *this and (b,c) in o.
    Relation compose(const Relation& o) const;
    // Reflexive-transitive closure.
    Relation star() const;

    std::vector<std::pair<StateIndex, StateIndex>> pairs() const;
    bool operator==(const Relation& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    bool operator!=(const Relation& o) const { return !(*this == o); }

    std::string render(const StateSpace& space) const;

private:
    std::size_t n_ = 0;
    std::vector<Predicate> rows_;
};

}  // namespace ngcl
