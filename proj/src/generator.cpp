#include "ngcl/generator.hpp"

#include <algorithm>

#include "ngcl/errors.hpp"

namespace ngcl {

std::vector<Expr> expression_pool(const StateSpace& space, std::size_t expr_depth) {
    std::vector<Expr> atoms;
    for (Value k = 0; k < space.modulus(); ++k) atoms.push_back(e_const(k));
    for (std::size_t i = 0; i < space.vars().size(); ++i) atoms.push_back(e_var(i, space.vars()[i]));
    if (expr_depth <= 1) return atoms;
    if (expr_depth > 2) throw InvalidArgument("exhaustive expression depth is limited to 2");
    std::vector<Expr> out = atoms;
    for (const auto& a : atoms) out.push_back(e_neg(a));
    for (auto make : {e_add, e_sub, e_mul})
        for (const auto& a : atoms)
            for (const auto& b : atoms) out.push_back(make(a, b));
    return out;
}

std::vector<Guard> guard_pool(const StateSpace& space) {
    std::vector<Guard> out{g_true(), g_false()};
    for (std::size_t i = 0; i < space.vars().size(); ++i)
        for (Value k = 0; k < space.modulus(); ++k)
            out.push_back(g_cmp(GuardKind::Eq, e_var(i, space.vars()[i]), e_const(k)));
    return out;
}

namespace {

void exhaustive(const GeneratorConfig& cfg, const StateSpace& space, const std::function<bool(const Program&)>& fn) {
    if (cfg.max_depth == 0) return;
    const auto exprs = expression_pool(space, cfg.expr_depth);
    const auto guards = guard_pool(space);

    // upto[d] holds all programs of depth <= d; depth_of parallels it.
    std::vector<Program> upto;
    std::vector<std::size_t> depth_of;
    upto.push_back(p_skip());
    upto.push_back(p_diverge());
    for (std::size_t v = 0; v < space.vars().size(); ++v)
        for (const auto& e : exprs) upto.push_back(p_assign(v, space.vars()[v], e));
    depth_of.assign(upto.size(), 1);
    for (const auto& p : upto)
        if (!fn(p)) return;

    for (std::size_t d = 2; d <= cfg.max_depth; ++d) {
        const bool last = d == cfg.max_depth;
        const std::size_t prev = upto.size();
        std::vector<Program> fresh;
        auto emit = [&](Program p) {
            if (!fn(p)) return false;
            if (!last) fresh.push_back(std::move(p));
            return true;
        };
        auto pairs = [&](const std::function<Program(const Program&, const Program&)>& make) {
            for (std::size_t i = 0; i < prev; ++i)
                for (std::size_t j = 0; j < prev; ++j) {
                    if (depth_of[i] != d - 1 && depth_of[j] != d - 1) continue;
                    if (!emit(make(upto[i], upto[j]))) return false;
                }
            return true;
        };
        if (!pairs([](const Program& a, const Program& b) { return p_seq(a, b); })) return;
        if (!pairs([](const Program& a, const Program& b) { return p_choice(a, b); })) return;
        for (const auto& g : guards)
            if (!pairs([&](const Program& a, const Program& b) { return p_ite(g, a, b); })) return;
        if (cfg.loops) {
            for (const auto& g : guards)
                for (std::size_t i = 0; i < prev; ++i)
                    if (depth_of[i] == d - 1 && !emit(p_while(g, upto[i]))) return;
        }
        for (auto& p : fresh) {
            upto.push_back(std::move(p));
            depth_of.push_back(d);
        }
    }
}

}  // namespace

Expr random_expr(Rng& rng, const StateSpace& space, std::size_t depth) {
    const std::size_t nv = space.vars().size();
    auto atom = [&]() -> Expr {
        if (rng.chance(55)) {
            std::size_t v = rng.below(nv);
            return e_var(v, space.vars()[v]);
        }
        return e_const(static_cast<Value>(rng.below(static_cast<std::uint64_t>(space.modulus()))));
    };
    if (depth <= 1 || rng.chance(50)) return atom();
    switch (rng.below(4)) {
        case 0: return e_add(atom(), random_expr(rng, space, depth - 1));
        case 1: return e_sub(atom(), random_expr(rng, space, depth - 1));
        case 2: return e_mul(atom(), random_expr(rng, space, depth - 1));
        default: return e_neg(atom());
    }
}

Guard random_guard(Rng& rng, const StateSpace& space) {
    const auto r = rng.below(100);
    if (r < 8) return g_true();
    if (r < 12) return g_false();
    auto cmp = [&]() {
        static constexpr GuardKind ops[] = {GuardKind::Eq, GuardKind::Ne, GuardKind::Lt, GuardKind::Le};
        std::size_t v = rng.below(space.vars().size());
        return g_cmp(ops[rng.below(4)], e_var(v, space.vars()[v]), random_expr(rng, space, 1));
    };
    if (r < 20) return g_not(cmp());
    if (r < 26) return g_and(cmp(), cmp());
    if (r < 32) return g_or(cmp(), cmp());
    return cmp();
}

Program random_program(Rng& rng, const StateSpace& space, std::size_t max_depth, bool loops) {
    auto leaf = [&]() -> Program {
        const auto r = rng.below(10);
        if (r == 0) return p_skip();
        if (r == 1) return p_diverge();
        std::size_t v = rng.below(space.vars().size());
        return p_assign(v, space.vars()[v], random_expr(rng, space, 2));
    };
    if (max_depth <= 1 || rng.chance(25)) return leaf();
    const auto r = rng.below(loops ? 100 : 80);
    const std::size_t d = max_depth - 1;
    if (r < 30) return p_seq(random_program(rng, space, d, loops), random_program(rng, space, d, loops));
    if (r < 55) return p_choice(random_program(rng, space, d, loops), random_program(rng, space, d, loops));
    if (r < 80) {
        Guard g = random_guard(rng, space);
        return p_ite(g, random_program(rng, space, d, loops), random_program(rng, space, d, loops));
    }
    Guard g = random_guard(rng, space);
    return p_while(g, random_program(rng, space, d, loops));
}

void for_each_program(const GeneratorConfig& cfg, const StateSpace& space, const std::function<bool(const Program&)>& fn) {
    if (cfg.mode == GeneratorConfig::Mode::Exhaustive) {
        exhaustive(cfg, space, fn);
        return;
    }
    Rng rng(cfg.seed);
    for (std::size_t i = 0; i < cfg.count; ++i)
        if (!fn(random_program(rng, space, cfg.max_depth, cfg.loops))) return;
}

std::vector<Program> generate_programs(const GeneratorConfig& cfg, const StateSpace& space) {
    std::vector<Program> out;
    for_each_program(cfg, space, [&](const Program& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

std::vector<Predicate> all_predicates(std::size_t n) {
    if (n > 16) throw StateCapError("enumerating all predicates needs |Sigma| <= 16");
    std::vector<Predicate> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(Predicate::from_mask(n, m));
    return out;
}

// ---- corpora ----

CorpusSpec corpus_by_name(const std::string& name, std::uint64_t seed) {
    CorpusSpec c;
    c.name = name;
    c.seed = seed;
    auto exhaustive_slice = [](std::vector<std::string> vars, Value m, std::size_t depth, bool loops) {
        GeneratorConfig g;
        g.vars = std::move(vars);
        g.modulus = m;
        g.max_depth = depth;
        g.loops = loops;
        g.mode = GeneratorConfig::Mode::Exhaustive;
        return CorpusSlice{g};
    };
    if (name == "small-exhaustive") {
        c.slices.push_back(exhaustive_slice({"x"}, 2, 3, false));
    } else if (name == "small-loops") {
        c.slices.push_back(exhaustive_slice({"x"}, 2, 2, true));
        c.slices.push_back(exhaustive_slice({"x"}, 3, 2, true));
    } else if (name == "tiny") {
        c.slices.push_back(exhaustive_slice({"x"}, 2, 2, true));
    } else if (name == "loops") {
        // 10^4 random loop programs spread over six small spaces.
        const std::vector<std::pair<std::vector<std::string>, Value>> spaces = {
            {{"x"}, 2}, {{"x"}, 3}, {{"x"}, 4}, {{"x", "y"}, 2}, {{"x", "y"}, 3}, {{"x", "y"}, 4}};
        for (std::size_t i = 0; i < spaces.size(); ++i) {
            GeneratorConfig g;
            g.vars = spaces[i].first;
            g.modulus = spaces[i].second;
            g.max_depth = 4;
            g.loops = true;
            g.mode = GeneratorConfig::Mode::Random;
            g.seed = seed * 1000003u + i;
            g.count = 1667;
            c.slices.push_back({g});
        }
        c.random_predicates = 3;
    } else {
        throw InvalidArgument("unknown corpus '" + name + "'");
    }
    return c;
}

std::vector<std::string> corpus_names() { return {"small-exhaustive", "loops", "small-loops", "tiny"}; }

void for_each_case(const CorpusSpec& corpus, const std::function<bool(const CaseView&)>& fn) {
    for (std::size_t si = 0; si < corpus.slices.size(); ++si) {
        const auto& gen = corpus.slices[si].gen;
        const StateSpace space(gen.vars, gen.modulus);
        const std::size_t n = space.size();
        std::vector<Predicate> fixed;
        if (corpus.random_predicates == 0) fixed = all_predicates(n);
        std::size_t index = 0;
        bool go = true;
        for_each_program(gen, space, [&](const Program& p) {
            std::vector<Predicate> local;
            if (corpus.random_predicates != 0) {
                Rng rng(corpus.seed ^ (0x9e3779b97f4a7c15ULL * (si + 1)) ^ (index * 0xbf58476d1ce4e5b9ULL));
                auto add = [&](Predicate q) {
                    if (std::find(local.begin(), local.end(), q) == local.end()) local.push_back(std::move(q));
                };
                add(Predicate::empty(n));
                add(Predicate::full(n));
                for (std::size_t k = 0; k < corpus.random_predicates; ++k) {
                    Predicate q(n);
                    for (StateIndex s = 0; s < n; ++s) q.set(s, rng.chance(50));
                    add(q);
                    add(~q);
                }
            }
            CaseView view{space, p, si, index++, corpus.random_predicates == 0 ? fixed : local};
            go = fn(view);
            return go;
        });
        if (!go) return;
    }
}

}  // namespace ngcl
