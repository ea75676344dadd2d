#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "ngcl/state_space.hpp"

namespace ngcl {

// Subset of a state space, as a bitset indexed by StateIndex. Small universes
// stay inline, which matters for corpus runs over millions of triples.
class Predicate {
public:
    using Words = boost::container::small_vector<std::uint64_t, 2>;

    Predicate() = default;
    explicit Predicate(std::size_t n, bool full = false);

    static Predicate empty(std::size_t n) { return Predicate(n, false); }
    static Predicate full(std::size_t n) { return Predicate(n, true); }
    // Bit i of mask is state i (only for n <= 64).
    static Predicate from_mask(std::size_t n, std::uint64_t mask);

    std::size_t universe() const { return n_; }
    bool test(StateIndex s) const { return (words_[s >> 6] >> (s & 63)) & 1u; }
    void set(StateIndex s, bool v = true) {
        if (v)
            words_[s >> 6] |= std::uint64_t{1} << (s & 63);
        else
            words_[s >> 6] &= ~(std::uint64_t{1} << (s & 63));
    }

    std::size_t count() const;
    bool none() const;
    bool all() const { return count() == n_; }
    bool subset_of(const Predicate& o) const;
    bool intersects(const Predicate& o) const;
    // Lowest state in *this \ o, if any.
    std::optional<StateIndex> first_not_in(const Predicate& o) const;
    std::optional<StateIndex> first() const;
    std::vector<StateIndex> states() const;

    Predicate operator~() const;
    Predicate& operator&=(const Predicate& o);
    Predicate& operator|=(const Predicate& o);
    Predicate& operator-=(const Predicate& o);
    friend Predicate operator&(Predicate a, const Predicate& b) { return a &= b; }
    friend Predicate operator|(Predicate a, const Predicate& b) { return a |= b; }
    friend Predicate operator-(Predicate a, const Predicate& b) { return a -= b; }
    bool operator==(const Predicate& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const Predicate& o) const { return !(*this == o); }

    const Words& words() const { return words_; }

    // "{<x=0>, <x=2>}"
    std::string render(const StateSpace& space) const;

private:
    void trim();
    std::size_t n_ = 0;
    Words words_;
};

}  // namespace ngcl
