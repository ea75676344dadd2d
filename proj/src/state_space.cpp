#include "ngcl/state_space.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>

#include "ngcl/errors.hpp"

namespace ngcl {

std::size_t state_cap() {
    const char* env = std::getenv("NGCL_STATE_CAP");
    if (env == nullptr || *env == '\0') return kHardStateCap;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) return kHardStateCap;
    return std::min<std::size_t>(kHardStateCap, static_cast<std::size_t>(v));
}

StateSpace::StateSpace(std::vector<std::string> vars, Value modulus) : vars_(std::move(vars)), modulus_(modulus) {
    if (modulus_ < 1) throw InvalidArgument("modulus must be >= 1");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (!seen.insert(v).second) throw InvalidArgument("duplicate variable '" + v + "'");
    }
    const std::size_t cap = state_cap();
    std::size_t n = 1;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (n > cap / static_cast<std::size_t>(modulus_)) {
            throw StateCapError("state space " + std::to_string(modulus_) + "^" + std::to_string(vars_.size()) +
                                " exceeds cap " + std::to_string(cap));
        }
        n *= static_cast<std::size_t>(modulus_);
    }
    size_ = n;
    stride_.assign(vars_.size(), 1);
    for (std::size_t i = vars_.size(); i-- > 1;) stride_[i - 1] = stride_[i] * static_cast<StateIndex>(modulus_);
}

std::optional<std::size_t> StateSpace::index_of(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

std::size_t StateSpace::require_index(const std::string& var) const {
    auto i = index_of(var);
    if (!i) throw UnknownVariableError(var);
    return *i;
}

Value StateSpace::get(StateIndex s, std::size_t var) const {
    return static_cast<Value>((s / stride_[var]) % static_cast<StateIndex>(modulus_));
}

StateIndex StateSpace::set(StateIndex s, std::size_t var, Value v) const {
    const Value old = get(s, var);
    return s - static_cast<StateIndex>(old) * stride_[var] + static_cast<StateIndex>(normalize(v)) * stride_[var];
}

StateIndex StateSpace::encode(const std::vector<Value>& values) const {
    if (values.size() != vars_.size()) throw InvalidArgument("state arity mismatch");
    StateIndex s = 0;
    for (std::size_t i = 0; i < values.size(); ++i) s += static_cast<StateIndex>(normalize(values[i])) * stride_[i];
    return s;
}

std::vector<Value> StateSpace::decode(StateIndex s) const {
    std::vector<Value> out(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) out[i] = get(s, i);
    return out;
}

std::string StateSpace::render(StateIndex s) const {
    std::string out = "<";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) out += ",";
        out += vars_[i] + "=" + std::to_string(get(s, i));
    }
    return out + ">";
}

StateIndex StateSpace::parse_state(const std::string& text) const {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '<' && c != '>') t += c;
    if (!t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        auto v = std::stoull(t);
        if (v >= size_) throw InvalidArgument("state index out of range: " + t);
        return static_cast<StateIndex>(v);
    }
    std::vector<Value> vals(vars_.size(), 0);
    std::vector<bool> given(vars_.size(), false);
    std::size_t pos = 0;
    while (pos < t.size()) {
        auto comma = t.find(',', pos);
        std::string item = t.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InvalidArgument("malformed state '" + text + "'");
        auto idx = require_index(item.substr(0, eq));
        vals[idx] = std::stoll(item.substr(eq + 1));
        given[idx] = true;
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    for (std::size_t i = 0; i < given.size(); ++i)
        if (!given[i]) throw InvalidArgument("state '" + text + "' does not assign " + vars_[i]);
    return encode(vals);
}

}  // namespace ngcl
