#include "ngcl/predicate.hpp"

#include <bit>

#include "ngcl/errors.hpp"

namespace ngcl {

Predicate::Predicate(std::size_t n, bool full) : n_(n), words_((n + 63) / 64, full ? ~std::uint64_t{0} : 0) {
    trim();
}

Predicate Predicate::from_mask(std::size_t n, std::uint64_t mask) {
    if (n > 64) throw InvalidArgument("from_mask needs a universe of at most 64 states");
    Predicate p(n);
    if (n > 0) p.words_[0] = mask;
    p.trim();
    return p;
}

void Predicate::trim() {
    if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
}

std::size_t Predicate::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool Predicate::none() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

bool Predicate::subset_of(const Predicate& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

bool Predicate::intersects(const Predicate& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

std::optional<StateIndex> Predicate::first_not_in(const Predicate& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto w = words_[i] & ~o.words_[i];
        if (w) return static_cast<StateIndex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }
    return std::nullopt;
}

std::optional<StateIndex> Predicate::first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return static_cast<StateIndex>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
    return std::nullopt;
}

std::vector<StateIndex> Predicate::states() const {
    std::vector<StateIndex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto w = words_[i];
        while (w) {
            out.push_back(static_cast<StateIndex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
            w &= w - 1;
        }
    }
    return out;
}

Predicate Predicate::operator~() const {
    Predicate r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
}

Predicate& Predicate::operator&=(const Predicate& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

Predicate& Predicate::operator|=(const Predicate& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

Predicate& Predicate::operator-=(const Predicate& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

std::string Predicate::render(const StateSpace& space) const {
    std::string out = "{";
    bool first_item = true;
    for (auto s : states()) {
        if (!first_item) out += ", ";
        first_item = false;
        out += space.render(s);
    }
    return out + "}";
}

}  // namespace ngcl
