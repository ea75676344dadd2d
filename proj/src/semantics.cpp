#include "ngcl/semantics.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

#include "ngcl/errors.hpp"

namespace ngcl {

namespace {

Predicate assign_post(const ProgramNode& n, const StateSpace& space, const Predicate& S) {
    Predicate out(space.size());
    for (auto s : S.states()) out.set(space.set(s, n.var, eval(n.expr, space, s)));
    return out;
}

}  // namespace

Predicate collecting(const Program& p, const StateSpace& space, const Predicate& S) {
    switch (p->kind) {
        case ProgramKind::Skip: return S;
        case ProgramKind::Diverge: return Predicate(space.size());
        case ProgramKind::Assign: return assign_post(*p, space, S);
        case ProgramKind::Seq: return collecting(p->b, space, collecting(p->a, space, S));
        case ProgramKind::Choice: return collecting(p->a, space, S) | collecting(p->b, space, S);
        case ProgramKind::Ite: {
            Predicate g = guard_predicate(p->guard, space);
            return collecting(p->a, space, S & g) | collecting(p->b, space, S - g);
        }
        case ProgramKind::While: {
            // Loop heads reachable from S, as a least fixpoint; exits are those failing g.
            Predicate g = guard_predicate(p->guard, space);
            Predicate heads(space.size());
            for (;;) {
                Predicate next = S | collecting(p->a, space, heads & g);
                if (next == heads) break;
                heads = std::move(next);
            }
            return heads - g;
        }
    }
    throw InvariantError("bad program kind");
}

Predicate image(const Program& p, const StateSpace& space, StateIndex s) {
    Predicate S(space.size());
    S.set(s);
    return collecting(p, space, S);
}

Predicate preimage(const Program& p, const StateSpace& space, const Predicate& T) {
    Predicate out(space.size());
    for (StateIndex s = 0; s < space.size(); ++s)
        if (image(p, space, s).intersects(T)) out.set(s);
    return out;
}

Relation denote_relation(const Program& p, const StateSpace& space) {
    const std::size_t n = space.size();
    switch (p->kind) {
        case ProgramKind::Skip: return Relation::identity(n);
        case ProgramKind::Diverge: return Relation(n);
        case ProgramKind::Assign: {
            Relation r(n);
            for (StateIndex s = 0; s < n; ++s) r.set(s, space.set(s, p->var, eval(p->expr, space, s)));
            return r;
        }
        case ProgramKind::Seq: return denote_relation(p->a, space).compose(denote_relation(p->b, space));
        case ProgramKind::Choice: return denote_relation(p->a, space) | denote_relation(p->b, space);
        case ProgramKind::Ite: {
            Predicate g = guard_predicate(p->guard, space);
            return Relation::diag(g).compose(denote_relation(p->a, space)) |
                   Relation::diag(~g).compose(denote_relation(p->b, space));
        }
        case ProgramKind::While: {
            Predicate g = guard_predicate(p->guard, space);
            Relation exit = Relation::diag(~g);
            Relation step = Relation::diag(g).compose(denote_relation(p->a, space));
            Relation r(n);  // Kleene iteration from the empty relation
            for (;;) {
                Relation next = exit | step.compose(r);
                if (next == r) return r;
                r = std::move(next);
            }
        }
    }
    throw InvariantError("bad program kind");
}

// ---- configuration graph ----

namespace {

struct ConfigKey {
    std::vector<const ProgramNode*> cont;
    StateIndex state;
    bool operator==(const ConfigKey& o) const { return state == o.state && cont == o.cont; }
};

struct ConfigHash {
    std::size_t operator()(const ConfigKey& k) const {
        std::size_t h = std::hash<StateIndex>{}(k.state);
        for (auto* p : k.cont) h ^= std::hash<const void*>{}(p) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace

TransitionGraph::TransitionGraph(const Program& p, const StateSpace& space, std::size_t node_budget) : space_(space) {
    std::unordered_map<ConfigKey, std::size_t, ConfigHash> index;
    std::deque<std::size_t> work;
    auto intern = [&](std::vector<const ProgramNode*> cont, StateIndex s) {
        ConfigKey key{std::move(cont), s};
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        if (nodes_.size() >= node_budget)
            throw ResourceError("configuration graph exceeds node budget " + std::to_string(node_budget));
        std::size_t id = nodes_.size();
        nodes_.push_back({key.cont, s, {}});
        index.emplace(std::move(key), id);
        work.push_back(id);
        return id;
    };

    initial_.resize(space.size());
    for (StateIndex s = 0; s < space.size(); ++s) initial_[s] = intern({p.get()}, s);

    while (!work.empty()) {
        const std::size_t id = work.front();
        work.pop_front();
        if (nodes_[id].cont.empty()) continue;
        auto cont = nodes_[id].cont;
        const StateIndex s = nodes_[id].state;
        const ProgramNode* top = cont.back();
        cont.pop_back();
        std::vector<std::size_t> succ;
        switch (top->kind) {
            case ProgramKind::Skip: succ.push_back(intern(cont, s)); break;
            case ProgramKind::Diverge: succ.push_back(id); break;
            case ProgramKind::Assign: succ.push_back(intern(cont, space.set(s, top->var, eval(top->expr, space, s)))); break;
            case ProgramKind::Seq: {
                auto c = cont;
                c.push_back(top->b.get());
                c.push_back(top->a.get());
                succ.push_back(intern(std::move(c), s));
                break;
            }
            case ProgramKind::Choice: {
                auto l = cont, r = cont;
                l.push_back(top->a.get());
                r.push_back(top->b.get());
                succ.push_back(intern(std::move(l), s));
                succ.push_back(intern(std::move(r), s));
                break;
            }
            case ProgramKind::Ite: {
                auto c = cont;
                c.push_back(eval(top->guard, space, s) ? top->a.get() : top->b.get());
                succ.push_back(intern(std::move(c), s));
                break;
            }
            case ProgramKind::While: {
                auto c = cont;
                if (eval(top->guard, space, s)) {
                    c.push_back(top);
                    c.push_back(top->a.get());
                }
                succ.push_back(intern(std::move(c), s));
                break;
            }
        }
        nodes_[id].succ = std::move(succ);
    }
}

Predicate TransitionGraph::may_diverge() const {
    // Iterative Tarjan; SCCs complete in reverse topological order, so every
    // successor SCC is already decided when its predecessor finishes.
    const std::size_t n = nodes_.size();
    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> idx(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
    std::vector<bool> on_stack(n, false), comp_diverges;
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> call;  // (node, next successor position)
    std::size_t counter = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (idx[root] != kUnvisited) continue;
        call.emplace_back(root, 0);
        idx[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            const auto& succ = nodes_[v].succ;
            if (pos < succ.size()) {
                std::size_t w = succ[pos++];
                if (idx[w] == kUnvisited) {
                    idx[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], idx[w]);
                }
                continue;
            }
            const std::size_t node = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[node]);
            if (low[node] != idx[node]) continue;
            const std::size_t c = comp_diverges.size();
            std::vector<std::size_t> members;
            for (;;) {
                std::size_t w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp[w] = c;
                members.push_back(w);
                if (w == node) break;
            }
            bool diverges = members.size() > 1;
            for (auto m : members) {
                for (auto w : nodes_[m].succ) {
                    if (w == m) diverges = true;
                    else if (comp[w] != c && comp_diverges[comp[w]]) diverges = true;
                }
            }
            comp_diverges.push_back(diverges);
        }
    }

    Predicate out(space_.size());
    for (StateIndex s = 0; s < space_.size(); ++s)
        if (comp_diverges[comp[initial_[s]]]) out.set(s);
    return out;
}

Relation TransitionGraph::terminal_relation() const {
    Relation r(space_.size());
    std::vector<std::size_t> seen(nodes_.size(), static_cast<std::size_t>(-1));
    for (StateIndex s = 0; s < space_.size(); ++s) {
        std::vector<std::size_t> stack{initial_[s]};
        seen[initial_[s]] = s;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            if (terminal(v)) r.set(s, nodes_[v].state);
            for (auto w : nodes_[v].succ) {
                if (seen[w] != s) {
                    seen[w] = s;
                    stack.push_back(w);
                }
            }
        }
    }
    return r;
}

std::string TransitionGraph::to_dot() const {
    auto escape = [](const std::string& s) {
        std::string out;
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out;
    };
    std::string out = "digraph configurations {\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        std::string label = space_.render(nodes_[i].state) + "\\n";
        if (nodes_[i].cont.empty()) {
            label += "(done)";
        } else {
            for (auto it = nodes_[i].cont.rbegin(); it != nodes_[i].cont.rend(); ++it) {
                if (it != nodes_[i].cont.rbegin()) label += " ;; ";
                label += escape(print(Program(Program{}, *it)));
            }
        }
        out += "  n" + std::to_string(i) + " [label=\"" + label + "\"" + (nodes_[i].cont.empty() ? ", peripheries=2" : "") + "];\n";
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        for (auto w : nodes_[i].succ) out += "  n" + std::to_string(i) + " -> n" + std::to_string(w) + ";\n";
    return out + "}\n";
}

Semantics analyze(const Program& p, const StateSpace& space, std::size_t node_budget) {
    Semantics sem;
    sem.rel = denote_relation(p, space);
    sem.conv = sem.rel.converse();
    sem.may_diverge = TransitionGraph(p, space, node_budget).may_diverge();
    sem.must_diverge = ~sem.rel.domain();
    return sem;
}

}  // namespace ngcl
