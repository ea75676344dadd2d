#include "ngcl/relation.hpp"

#include "ngcl/errors.hpp"

namespace ngcl {

Relation::Relation(std::size_t n) : n_(n) {
    if (n > kRelationCap)
        throw StateCapError("relation over " + std::to_string(n) + " states exceeds dense cap " +
                            std::to_string(kRelationCap));
    rows_.assign(n, Predicate(n));
}

Relation Relation::identity(std::size_t n) {
    Relation r(n);
    for (StateIndex s = 0; s < n; ++s) r.set(s, s);
    return r;
}

Relation Relation::top(std::size_t n) {
    Relation r(n);
    for (auto& row : r.rows_) row = Predicate::full(n);
    return r;
}

Relation Relation::diag(const Predicate& p) {
    Relation r(p.universe());
    for (auto s : p.states()) r.set(s, s);
    return r;
}

Relation Relation::from_pairs(std::size_t n, const std::vector<std::pair<StateIndex, StateIndex>>& pairs) {
    Relation r(n);
    for (auto [a, b] : pairs) {
        if (a >= n || b >= n) throw InvalidArgument("relation pair out of range");
        r.set(a, b);
    }
    return r;
}

bool Relation::empty() const {
    for (const auto& row : rows_)
        if (!row.none()) return false;
    return true;
}

std::size_t Relation::count() const {
    std::size_t c = 0;
    for (const auto& row : rows_) c += row.count();
    return c;
}

Predicate Relation::domain() const {
    Predicate d(n_);
    for (StateIndex s = 0; s < n_; ++s)
        if (!rows_[s].none()) d.set(s);
    return d;
}

Predicate Relation::codomain() const {
    Predicate c(n_);
    for (const auto& row : rows_) c |= row;
    return c;
}

Relation Relation::converse() const {
    Relation r(n_);
    for (StateIndex a = 0; a < n_; ++a)
        for (auto b : rows_[a].states()) r.set(b, a);
    return r;
}

Predicate Relation::post(const Predicate& s) const {
    Predicate out(n_);
    for (auto a : s.states()) out |= rows_[a];
    return out;
}

Predicate Relation::pre(const Predicate& t) const {
    Predicate out(n_);
    for (StateIndex a = 0; a < n_; ++a)
        if (rows_[a].intersects(t)) out.set(a);
    return out;
}

Relation Relation::operator|(const Relation& o) const {
    Relation r = *this;
    for (StateIndex a = 0; a < n_; ++a) r.rows_[a] |= o.rows_[a];
    return r;
}

Relation Relation::operator&(const Relation& o) const {
    Relation r = *this;
    for (StateIndex a = 0; a < n_; ++a) r.rows_[a] &= o.rows_[a];
    return r;
}

Relation Relation::compose(const Relation& o) const {
    Relation r(n_);
    for (StateIndex a = 0; a < n_; ++a)
        for (auto b : rows_[a].states()) r.rows_[a] |= o.rows_[b];
    return r;
}

Relation Relation::star() const {
    // Warshall on bit rows.
    Relation r = *this;
    for (StateIndex s = 0; s < n_; ++s) r.set(s, s);
    for (StateIndex k = 0; k < n_; ++k)
        for (StateIndex a = 0; a < n_; ++a)
            if (r.test(a, k)) r.rows_[a] |= r.rows_[k];
    return r;
}

std::vector<std::pair<StateIndex, StateIndex>> Relation::pairs() const {
    std::vector<std::pair<StateIndex, StateIndex>> out;
    for (StateIndex a = 0; a < n_; ++a)
        for (auto b : rows_[a].states()) out.emplace_back(a, b);
    return out;
}

std::string Relation::render(const StateSpace& space) const {
    std::string out = "{";
    bool first = true;
    for (auto [a, b] : pairs()) {
        if (!first) out += ", ";
        first = false;
        out += "(" + space.render(a) + ", " + space.render(b) + ")";
    }
    return out + "}";
}

}  // namespace ngcl
