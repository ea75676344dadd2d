#include "ngcl/counterexample.hpp"

#include <chrono>
#include <map>

#include "ngcl/errors.hpp"
#include "ngcl/parser.hpp"
#include "ngcl/semantics.hpp"
#include "ngcl/topkat.hpp"
#include "ngcl/transformers.hpp"

namespace ngcl {

namespace {

using TK = TransformerKind;

struct BaseLogic {
    const char* id;
    Logic base;
    Logic contra;  // shape of the contrapositive judgement, on the same triple
};

const BaseLogic kBase[] = {
    {"dwlpLB", Logic::DwlpLB, Logic::AwpUB}, {"dwpLB", Logic::DwpLB, Logic::AwlpUB},
    {"awpLB", Logic::AwpLB, Logic::DwlpUB},  {"awlpLB", Logic::AwlpLB, Logic::DwpUB},
    {"aspLB", Logic::AspLB, Logic::DslpUB},  {"dspLB", Logic::DspLB, Logic::AslpUB},
    {"aslpLB", Logic::AslpLB, Logic::DspUB},
};

std::vector<Claim> build_catalog() {
    std::vector<Claim> out;
    auto add = [&](Claim c) { out.push_back(std::move(c)); };

    Claim c;
    c.id = "dwp-neq-intersection";
    c.kind = Claim::Kind::TransformerNeq;
    c.first = Logic::DwpLB;
    c.description = "dwp(p,c) != awp(p,c) & dwlp(p,c) for some p, c";
    add(c);

    c = {};
    c.id = "awlp-neq-union";
    c.kind = Claim::Kind::TransformerNeq;
    c.first = Logic::AwlpLB;
    c.description = "awlp(p,c) != awp(p,c) | dwlp(p,c) for some p, c";
    add(c);

    c = {};
    c.id = "total-correctness-inexpressible";
    c.kind = Claim::Kind::RelationalTwin;
    c.description = "two programs with the same input/output relation but different dwpLB verdicts";
    add(c);

    c = {};
    c.id = "outcome-conjunction-vs-intersection";
    c.kind = Claim::Kind::EquationVsLogic;
    c.equation = "OUTCOME_CONJUNCTION";
    c.second = Logic::Intersection;
    c.description = "the OUTCOME_CONJUNCTION system disagrees with b <= awp(p,c) & dwlp(p,c)";
    add(c);

    c = {};
    c.id = "galois-pc";
    c.kind = Claim::Kind::LogicPair;
    c.first = Logic::DwlpLB;
    c.second = Logic::AspUB;
    c.expect_witness = false;
    c.description = "b <= dwlp(p,c) and asp(p,b) <= c disagree";
    add(c);

    c = {};
    c.id = "galois-pi";
    c.kind = Claim::Kind::LogicPair;
    c.first = Logic::AwpUB;
    c.second = Logic::DslpLB;
    c.expect_witness = false;
    c.description = "awp(p,c) <= b and c <= dslp(p,b) disagree";
    add(c);

    c = {};
    c.id = "may-termination-equivalence";
    c.kind = Claim::Kind::MayTermination;
    c.description = "awp(p,true) = true while awlp(p,false) != false";
    add(c);

    c = {};
    c.id = "must-termination-dwlp-form";
    c.kind = Claim::Kind::TerminationDwlp;
    c.description = "dwp(p,true) = true disagrees with dwlp(p,false) = false";
    add(c);

    const auto& ids = separation_logic_ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            c = {};
            c.id = "pair:" + ids[i] + "-vs-" + ids[j];
            c.kind = Claim::Kind::LogicPair;
            c.first = *separation_logic(ids[i]);
            c.second = *separation_logic(ids[j]);
            c.description = std::string(name(c.first)) + " and " + std::string(name(c.second)) +
                            " are not equivalent on a common triple";
            add(c);
        }
    return out;
}

std::string verdict_word(bool b) { return b ? "holds" : "fails"; }

// Detail text and, where meaningful, the separating state for a logic pair.
std::optional<std::pair<std::optional<StateIndex>, std::string>> separate(Logic a, Logic b, const TransformerValues& tv,
                                                                          const Predicate& pre, const Predicate& post) {
    const auto va = evaluate(a, tv, pre, post);
    const auto vb = evaluate(b, tv, pre, post);
    if (va.holds == vb.holds) return std::nullopt;
    return std::make_pair(va.holds ? vb.witness : va.witness,
                          std::string(name(a)) + " " + verdict_word(va.holds) + ", " + std::string(name(b)) + " " +
                              verdict_word(vb.holds));
}

Predicate combination(const Claim& c, const Semantics& sem, const Predicate& post) {
    const Predicate awp = oracle(TK::AWP, sem, post);
    const Predicate dwlp = oracle(TK::DWLP, sem, post);
    return c.first == Logic::DwpLB ? (awp & dwlp) : (awp | dwlp);
}

TK neq_kind(const Claim& c) { return c.first == Logic::DwpLB ? TK::DWP : TK::AWLP; }

// Key for grouping programs by input/output relation.
std::vector<std::uint64_t> relation_key(const Relation& r) {
    std::vector<std::uint64_t> key;
    for (StateIndex s = 0; s < r.universe(); ++s)
        for (auto w : r.row(s).words()) key.push_back(w);
    return key;
}

}  // namespace

const std::vector<std::string>& separation_logic_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& b : kBase) v.emplace_back(b.id);
        for (const auto& b : kBase) v.push_back(std::string(b.id) + "-contra");
        return v;
    }();
    return ids;
}

std::optional<Logic> separation_logic(const std::string& id) {
    for (const auto& b : kBase) {
        if (id == b.id) return b.base;
        if (id == std::string(b.id) + "-contra") return b.contra;
    }
    return std::nullopt;
}

const std::vector<Claim>& claim_catalog() {
    static const std::vector<Claim> catalog = build_catalog();
    return catalog;
}

const Claim* find_claim(const std::string& id) {
    for (const auto& c : claim_catalog())
        if (c.id == id) return &c;
    return nullptr;
}

SearchConfig::SearchConfig() {
    gen.vars = {"x"};
    gen.modulus = 2;
    gen.max_depth = 3;
    gen.loops = true;
    gen.mode = GeneratorConfig::Mode::Exhaustive;
}

std::string_view name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::NoneWithinBudget: return "none-within-budget";
        case SearchStatus::SpaceExhausted: return "search-space-exhausted";
    }
    return "?";
}

SearchResult find_counterexample(const Claim& claim, const SearchConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchResult res;
    res.claim = claim.id;
    res.budget = cfg.budget;
    const StateSpace space(cfg.gen.vars, cfg.gen.modulus);
    const std::size_t n = space.size();
    const auto preds = all_predicates(n);
    const CatalogEntry* equation = nullptr;
    if (claim.kind == Claim::Kind::EquationVsLogic) {
        equation = find_equation(claim.equation);
        if (!equation) throw InvariantError("claim refers to unknown equation " + claim.equation);
    }

    struct Seen {
        Program program;
        Semantics sem;
    };
    std::map<std::vector<std::uint64_t>, std::vector<Seen>> by_relation;

    bool out_of_budget = false;
    // Counts one candidate triple; false once the budget is spent.
    auto spend = [&]() {
        if (res.triples >= cfg.budget) {
            out_of_budget = true;
            return false;
        }
        ++res.triples;
        return true;
    };
    auto base_witness = [&](const Program& p) {
        Witness w;
        w.space = describe_space(space);
        w.program = print(p);
        return w;
    };

    for_each_program(cfg.gen, space, [&](const Program& p) {
        ++res.programs;
        const Semantics sem = analyze(p, space);
        switch (claim.kind) {
            case Claim::Kind::LogicPair:
            case Claim::Kind::EquationVsLogic:
                for (const auto& b : preds)
                    for (const auto& c : preds) {
                        if (!spend()) return false;
                        const auto tv = transformer_values(sem, b, c);
                        std::optional<std::pair<std::optional<StateIndex>, std::string>> hit;
                        if (claim.kind == Claim::Kind::LogicPair) {
                            hit = separate(claim.first, claim.second, tv, b, c);
                        } else {
                            const bool eq = check_equation(*equation, b, sem.rel, c);
                            const bool lg = holds(claim.second, tv, b, c);
                            if (eq != lg)
                                hit = std::make_pair(std::optional<StateIndex>{},
                                                     claim.equation + " " + verdict_word(eq) + ", " +
                                                         std::string(name(claim.second)) + " " + verdict_word(lg));
                        }
                        if (hit) {
                            Witness w = base_witness(p);
                            w.pre = b.render(space);
                            w.post = c.render(space);
                            if (hit->first) w.state = space.render(*hit->first);
                            w.detail = hit->second;
                            res.witness = std::move(w);
                            return false;
                        }
                    }
                return true;
            case Claim::Kind::TransformerNeq:
                for (const auto& c : preds) {
                    if (!spend()) return false;
                    const TK k = neq_kind(claim);
                    const Predicate lhs = oracle(k, sem, c);
                    const Predicate rhs = combination(claim, sem, c);
                    if (lhs != rhs) {
                        const Predicate diff = (lhs - rhs) | (rhs - lhs);
                        Witness w = base_witness(p);
                        w.post = c.render(space);
                        w.state = space.render(*diff.first());
                        w.detail = std::string(name(k)) + "(p,c) = " + lhs.render(space) + " but the " +
                                   (k == TK::DWP ? "intersection" : "union") + " is " + rhs.render(space);
                        res.witness = std::move(w);
                        return false;
                    }
                }
                return true;
            case Claim::Kind::MayTermination:
            case Claim::Kind::TerminationDwlp: {
                if (!spend()) return false;
                const Predicate empty = Predicate::empty(n), full = Predicate::full(n);
                bool hit = false;
                std::string detail;
                if (claim.kind == Claim::Kind::MayTermination) {
                    const Predicate awlp_false = oracle(TK::AWLP, sem, empty);
                    hit = oracle(TK::AWP, sem, full).all() && !awlp_false.none();
                    detail = "awp(p,true) = true but awlp(p,false) = " + awlp_false.render(space);
                } else {
                    const bool total = oracle(TK::DWP, sem, full).all();
                    const bool dwlp_form = oracle(TK::DWLP, sem, empty).none();
                    hit = total != dwlp_form;
                    detail = std::string("dwp(p,true) = true ") + verdict_word(total) + ", dwlp(p,false) = false " +
                             verdict_word(dwlp_form);
                }
                if (hit) {
                    Witness w = base_witness(p);
                    w.detail = detail;
                    res.witness = std::move(w);
                    return false;
                }
                return true;
            }
            case Claim::Kind::RelationalTwin: {
                auto& group = by_relation[relation_key(sem.rel)];
                for (const auto& twin : group) {
                    for (const auto& b : preds)
                        for (const auto& c : preds) {
                            if (!spend()) return false;
                            const bool v1 = b.subset_of(oracle(TK::DWP, twin.sem, c));
                            const bool v2 = b.subset_of(oracle(TK::DWP, sem, c));
                            if (v1 != v2) {
                                Witness w = base_witness(twin.program);
                                w.program2 = print(p);
                                w.pre = b.render(space);
                                w.post = c.render(space);
                                w.detail = "same relation; dwpLB " + verdict_word(v1) + " for the first program, " +
                                           verdict_word(v2) + " for the second";
                                res.witness = std::move(w);
                                return false;
                            }
                        }
                }
                group.push_back({p, sem});
                return true;
            }
        }
        return true;
    });

    if (res.witness)
        res.status = SearchStatus::Found;
    else
        res.status = out_of_budget ? SearchStatus::NoneWithinBudget : SearchStatus::SpaceExhausted;
    res.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

SearchResult find_counterexample(const std::string& claim_id, const SearchConfig& cfg) {
    const Claim* c = find_claim(claim_id);
    if (!c) throw InvalidArgument("unknown claim '" + claim_id + "'");
    return find_counterexample(*c, cfg);
}

bool verify_witness(const Claim& claim, const Witness& w) {
    const ProgramFile pf = parse_program_file(w.space + "\n" + w.program);
    const StateSpace& space = pf.space;
    const Semantics sem = analyze(pf.program, space);
    auto pred = [&](const std::optional<std::string>& text) {
        if (!text) throw InvalidArgument("witness lacks a predicate");
        return parse_predicate(*text, space);
    };
    switch (claim.kind) {
        case Claim::Kind::LogicPair: {
            const Predicate b = pred(w.pre), c = pred(w.post);
            const auto tv = transformer_values(sem, b, c);
            return holds(claim.first, tv, b, c) != holds(claim.second, tv, b, c);
        }
        case Claim::Kind::EquationVsLogic: {
            const Predicate b = pred(w.pre), c = pred(w.post);
            const auto tv = transformer_values(sem, b, c);
            return check_equation(*find_equation(claim.equation), b, sem.rel, c) != holds(claim.second, tv, b, c);
        }
        case Claim::Kind::TransformerNeq: {
            const Predicate c = pred(w.post);
            if (!w.state) return false;
            const StateIndex s = space.parse_state(*w.state);
            return oracle(neq_kind(claim), sem, c).test(s) != combination(claim, sem, c).test(s);
        }
        case Claim::Kind::MayTermination: {
            const std::size_t n = space.size();
            return oracle(TK::AWP, sem, Predicate::full(n)).all() && !oracle(TK::AWLP, sem, Predicate::empty(n)).none();
        }
        case Claim::Kind::TerminationDwlp: {
            const std::size_t n = space.size();
            return oracle(TK::DWP, sem, Predicate::full(n)).all() != oracle(TK::DWLP, sem, Predicate::empty(n)).none();
        }
        case Claim::Kind::RelationalTwin: {
            if (!w.program2) return false;
            const Program q = parse_program(*w.program2, space);
            const Semantics sq = analyze(q, space);
            const Predicate b = pred(w.pre), c = pred(w.post);
            return sem.rel == sq.rel &&
                   b.subset_of(oracle(TK::DWP, sem, c)) != b.subset_of(oracle(TK::DWP, sq, c));
        }
    }
    return false;
}

}  // namespace ngcl
