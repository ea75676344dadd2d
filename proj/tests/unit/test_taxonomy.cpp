#include <doctest.h>

#include <set>

#include "ngcl/counterexample.hpp"
#include "ngcl/parser.hpp"
#include "ngcl/semantics.hpp"
#include "ngcl/taxonomy.hpp"
#include "ngcl/theorems.hpp"

using namespace ngcl;

namespace {

Predicate P(const StateSpace& sp, const char* text) { return parse_predicate(text, sp); }

bool holds_on(Logic l, const StateSpace& sp, const char* b, const char* p, const char* c) {
    return holds(l, Triple{P(sp, b), parse_program(p, sp), P(sp, c)}, sp);
}

}  // namespace

TEST_SUITE("taxonomy") {

TEST_CASE("logic ids and aliases") {
    for (auto l : all_logics()) CHECK(parse_logic(name(l)) == l);
    CHECK(parse_logic("lisbon") == Logic::AwpLB);
    CHECK(parse_logic("total-correctness") == Logic::DwpLB);
    CHECK(parse_logic("partial-correctness") == Logic::DwlpLB);
    CHECK(parse_logic("hoare") == Logic::DwlpLB);
    CHECK(parse_logic("incorrectness") == Logic::AspLB);
    CHECK(parse_logic("DWP_LB") == Logic::DwpLB);
    CHECK(parse_logic("union") == Logic::Union);
    CHECK(!parse_logic("nonsense"));
    CHECK(subset_condition(Logic::DwpLB) == "b <= dwp(p,c)");
    CHECK(subset_condition(Logic::AspUB) == "asp(p,b) <= c");
    CHECK(equation_link(Logic::AwpLB) == "LISBON");
    for (auto l : all_logics())
        if (l != Logic::Union && l != Logic::Intersection) CHECK(make_logic(transformer_of(l), bound_of(l)) == l);
}

TEST_CASE("validity of example triples") {
    StateSpace s3({"x"}, 3);
    CHECK(holds_on(Logic::DwlpLB, s3, "x = 0", "if x = 0 { x := 1 } else { x := 2 }", "x = 1"));
    StateSpace s2({"x"}, 2);
    CHECK(!holds_on(Logic::AspLB, s2, "true", "x := 0", "x = 1"));
    CHECK(holds_on(Logic::AwpLB, s3, "true", "{ x := 0 } [] { x := 1 }", "x = 0"));
    CHECK(!holds_on(Logic::DwpLB, s3, "true", "{ x := 0 } [] { x := 1 }", "x = 0"));
    const auto v = evaluate(Logic::AspLB, Triple{P(s2, "true"), parse_program("x := 0", s2), P(s2, "x = 1")}, s2);
    CHECK(v.witness == StateIndex{1});
    // in-between logics sit between total and angelic partial correctness
    CHECK(holds_on(Logic::Union, s3, "true", "{ x := 0 } [] { x := 1 }", "x = 0"));
    CHECK(!holds_on(Logic::Intersection, s3, "true", "{ x := 0 } [] { x := 1 }", "x = 0"));
}

TEST_CASE("assumption classifier") {
    StateSpace s2({"x"}, 2);
    auto all = [&](const char* p) {
        const auto full = Predicate::full(s2.size());
        return classify(parse_program(p, s2), s2, full, full);
    };
    const auto skip = all("skip");
    CHECK(skip.termination.status == Tri::Holds);
    CHECK(skip.reachability.status == Tri::Holds);
    CHECK(skip.determinism.status == Tri::Holds);
    CHECK(skip.reversibility.status == Tri::Holds);
    CHECK(skip.no_branching_divergence.status == Tri::Holds);

    StateSpace s3({"x"}, 3);
    const auto full3 = Predicate::full(3);
    const auto ch = classify(parse_program("{ x := 0 } [] { x := 1 }", s3), s3, full3, full3);
    CHECK(ch.termination.status == Tri::Holds);
    CHECK(ch.determinism.status == Tri::Fails);
    CHECK(ch.reversibility.status == Tri::Fails);
    CHECK(ch.reversibility.witness == StateIndex{0});
    CHECK(ch.reachability.status == Tri::Fails);
    CHECK(ch.reachability.witness == StateIndex{2});
    CHECK(ch.no_branching_divergence.status == Tri::Holds);

    const auto bd = all("x := 0 [] diverge");
    CHECK(bd.no_branching_divergence.status == Tri::Fails);
    CHECK(bd.no_branching_divergence.witness.has_value());

    // scoped: termination only needs to hold on the precondition
    const auto scoped = classify(parse_program("if x = 0 { diverge }", s2), s2, P(s2, "x = 1"), P(s2, "true"));
    CHECK(scoped.termination.status == Tri::Holds);
    CHECK(!semantically_deterministic(analyze(parse_program("x := 0 [] x := 1", s2), s2)));
    CHECK(semantically_deterministic(analyze(parse_program("x := 0 [] x := 0", s2), s2)));
}

TEST_CASE("theorem suite on the tiny corpus") {
    const auto corpus = corpus_by_name("tiny");
    const auto verdicts = check_theorems(theorem_ids(), corpus);
    REQUIRE(verdicts.size() == theorem_ids().size());
    for (const auto& v : verdicts) {
        INFO(v.claim);
        if (v.claim == "MAY_TERMINATION") continue;
        CHECK(v.holds);
        CHECK(!v.witness);
        if (is_conditional(v.claim)) {
            CHECK(v.nonvacuity.has_value());
            CHECK(v.filtered > 0);
        }
    }
}

TEST_CASE("the may-termination equivalence is refuted by skip [] diverge") {
    const auto v = check_theorem("MAY_TERMINATION", corpus_by_name("tiny"));
    CHECK(!v.holds);
    REQUIRE(v.witness);
    CHECK(v.witness->program == "{ skip } [] { diverge }");
    // the corrected reading holds
    CHECK(check_theorem("MAY_MUST_TERMINATION", corpus_by_name("tiny")).holds);
}

TEST_CASE("strict mode filters on all states") {
    const auto corpus = corpus_by_name("tiny");
    const auto scoped = check_theorem("TERMINATION_COLLAPSE", corpus);
    const auto strict = check_theorem("TERMINATION_COLLAPSE", corpus, SurveyOptions{true});
    CHECK(scoped.holds);
    CHECK(strict.holds);
    CHECK(strict.filtered < scoped.filtered);
}

TEST_CASE("theorem runs are deterministic") {
    const auto corpus = corpus_by_name("loops", 3);
    CorpusSpec small = corpus;
    for (auto& s : small.slices) s.gen.count = 40;
    CHECK(check_theorems({"GALOIS_PC", "BRANCHING_COLLAPSE"}, small) ==
          check_theorems({"GALOIS_PC", "BRANCHING_COLLAPSE"}, small));
}

TEST_CASE("negative claims yield verified witnesses") {
    for (const char* id : {"dwp-neq-intersection", "awlp-neq-union", "total-correctness-inexpressible",
                           "outcome-conjunction-vs-intersection", "may-termination-equivalence",
                           "must-termination-dwlp-form", "pair:awlpLB-vs-aslpLB-contra",
                           "pair:awpLB-vs-aslpLB-contra"}) {
        INFO(id);
        const Claim* c = find_claim(id);
        REQUIRE(c);
        const auto r = find_counterexample(*c);
        CHECK(r.status == SearchStatus::Found);
        REQUIRE(r.witness);
        CHECK(verify_witness(*c, *r.witness));
        CHECK(r.triples <= kDefaultBudget);
    }
}

TEST_CASE("hand-made witnesses re-verify") {
    Witness w;
    w.space = "vars x mod 3";
    w.program = "if x = 0 { { x := 1 } [] { diverge } } else { skip }";
    w.post = "x = 2";
    w.state = "<x=0>";
    CHECK(verify_witness(*find_claim("awlp-neq-union"), w));
    w.state = "<x=1>";
    CHECK(!verify_witness(*find_claim("awlp-neq-union"), w));

    Witness t;
    t.space = "vars x mod 2";
    t.program = "skip";
    t.program2 = "skip [] diverge";
    t.pre = "true";
    t.post = "true";
    CHECK(verify_witness(*find_claim("total-correctness-inexpressible"), t));
}

TEST_CASE("Galois connections have no counterexample") {
    for (const char* id : {"galois-pc", "galois-pi"}) {
        const auto r = find_counterexample(id);
        CHECK(r.status == SearchStatus::NoneWithinBudget);
        CHECK(r.triples == kDefaultBudget);
        CHECK(!r.witness);
    }
    SearchConfig small;
    small.gen.max_depth = 2;
    small.budget = 1'000'000;
    CHECK(find_counterexample("galois-pc", small).status == SearchStatus::SpaceExhausted);
}

TEST_CASE("all 91 logic pairs are separated") {
    const auto& ids = separation_logic_ids();
    CHECK(ids.size() == 14);
    std::set<std::string> seen;
    std::size_t pairs = 0;
    for (const auto& c : claim_catalog()) {
        if (c.id.rfind("pair:", 0) != 0) continue;
        ++pairs;
        seen.insert(c.id);
        const auto r = find_counterexample(c);
        INFO(c.id);
        CHECK(r.status == SearchStatus::Found);
        if (r.witness) CHECK(verify_witness(c, *r.witness));
    }
    CHECK(pairs == 91);
    CHECK(seen.size() == 91);
    CHECK(separation_logic("aslpLB-contra") == Logic::DspUB);
    CHECK(separation_logic("dwlpLB-contra") == Logic::AwpUB);
}

TEST_CASE("search budget is respected") {
    SearchConfig cfg;
    cfg.budget = 10;
    const auto r = find_counterexample("galois-pc", cfg);
    CHECK(r.triples == 10);
    CHECK(r.status == SearchStatus::NoneWithinBudget);
}

}
