#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ngcl {

using StateIndex = std::uint32_t;
using Value = std::int64_t;

inline constexpr std::size_t kHardStateCap = std::size_t{1} << 20;

// Cap currently in force: kHardStateCap, optionally lowered via NGCL_STATE_CAP.
std::size_t state_cap();

// Finite store x1..xn -> Z_m. States are enumerated lexicographically,
// first variable most significant.
class StateSpace {
public:
    StateSpace(std::vector<std::string> vars, Value modulus);

    const std::vector<std::string>& vars() const { return vars_; }
    Value modulus() const { return modulus_; }
    std::size_t size() const { return size_; }

    std::optional<std::size_t> index_of(const std::string& var) const;
    std::size_t require_index(const std::string& var) const;

    Value get(StateIndex s, std::size_t var) const;
    StateIndex set(StateIndex s, std::size_t var, Value v) const;
    StateIndex encode(const std::vector<Value>& values) const;
    std::vector<Value> decode(StateIndex s) const;

    Value normalize(Value v) const {
        Value r = v % modulus_;
        return r < 0 ? r + modulus_ : r;
    }

    // "<x=0,y=1>"
    std::string render(StateIndex s) const;
    // Accepts "<x=0,y=1>", "x=0,y=1" or a bare index.
    StateIndex parse_state(const std::string& text) const;

    bool operator==(const StateSpace& o) const { return vars_ == o.vars_ && modulus_ == o.modulus_; }

private:
    std::vector<std::string> vars_;
    Value modulus_;
    std::size_t size_;
    std::vector<StateIndex> stride_;
};

}  // namespace ngcl
