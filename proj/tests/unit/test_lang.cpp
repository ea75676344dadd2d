#include <doctest.h>

#include <cstdlib>

#include "ngcl/errors.hpp"
#include "ngcl/generator.hpp"
#include "ngcl/parser.hpp"

using namespace ngcl;

TEST_SUITE("lang") {

TEST_CASE("state space enumeration is lexicographic, first variable most significant") {
    StateSpace sp({"x", "y"}, 3);
    CHECK(sp.size() == 9);
    CHECK(sp.encode({1, 2}) == 5);
    CHECK(sp.decode(5) == std::vector<Value>{1, 2});
    CHECK(sp.get(5, 0) == 1);
    CHECK(sp.set(5, 1, 0) == 3);
    CHECK(sp.render(5) == "<x=1,y=2>");
    CHECK(sp.parse_state("<x=1,y=2>") == 5);
    CHECK(sp.parse_state("x=1, y=2") == 5);
    CHECK(sp.parse_state("5") == 5);
    CHECK(sp.normalize(-1) == 2);
    CHECK_THROWS_AS(StateSpace({"x", "x"}, 2), InvalidArgument);
    CHECK_THROWS_AS(StateSpace({"x"}, 0), InvalidArgument);
}

TEST_CASE("state cap") {
    CHECK_THROWS_AS(StateSpace({"a", "b", "c"}, 128), StateCapError);  // 2^21 > 2^20
    ::setenv("NGCL_STATE_CAP", "8", 1);
    CHECK(state_cap() == 8);
    CHECK_THROWS_AS(StateSpace({"x"}, 9), StateCapError);
    CHECK_NOTHROW(StateSpace({"x"}, 8));
    ::setenv("NGCL_STATE_CAP", "99999999", 1);  // never raises past the hard cap
    CHECK(state_cap() == kHardStateCap);
    ::unsetenv("NGCL_STATE_CAP");
}

TEST_CASE("predicate algebra") {
    Predicate a(70);
    for (StateIndex s : {0, 1, 3}) a.set(s);
    CHECK(Predicate::from_mask(8, 0b1011) == Predicate::from_mask(8, 0b1011));
    CHECK(Predicate::from_mask(8, 0b1011).states() == std::vector<StateIndex>{0, 1, 3});
    Predicate b(70);
    b.set(1);
    b.set(69);
    CHECK(a.count() == 3);
    CHECK((a & b).states() == std::vector<StateIndex>{1});
    CHECK((a | b).count() == 4);
    CHECK((a - b).states() == std::vector<StateIndex>{0, 3});
    CHECK((~a).count() == 67);
    CHECK((~Predicate::empty(70)).all());
    CHECK(b.first_not_in(a) == StateIndex{69});
    CHECK(!a.subset_of(b));
    CHECK((a & b).subset_of(b));
    CHECK(a.intersects(b));
    CHECK(Predicate::empty(70).first() == std::nullopt);
}

TEST_CASE("guard predicates") {
    StateSpace s3({"x"}, 3);
    CHECK(parse_predicate("true", s3).all());
    CHECK(parse_predicate("x = 0", s3).states() == std::vector<StateIndex>{0});
    StateSpace s22({"x", "y"}, 2);
    auto lt = parse_predicate("x < y", s22);
    CHECK(lt.states() == std::vector<StateIndex>{s22.encode({0, 1})});
    CHECK(parse_predicate("{<x=0,y=1>, <x=1,y=1>}", s22).count() == 2);
    CHECK(parse_predicate("{}", s22).none());
    CHECK(parse_predicate("!(x = 0) && (y >= 1 || false)", s22).states() == std::vector<StateIndex>{3});
}

TEST_CASE("expressions wrap modulo m") {
    StateSpace sp({"x"}, 4);
    auto e = parse_expr("x - 1", sp);
    CHECK(eval(e, sp, 0) == 3);
    CHECK(eval(parse_expr("-x * 3 + 2", sp), sp, 1) == 3);  // (-1*3+2) mod 4
    CHECK(eval(parse_expr("x * x", sp), sp, 3) == 1);
}

TEST_CASE("parser builds the expected trees") {
    StateSpace sp({"x"}, 3);
    CHECK(parse_program("skip", sp)->kind == ProgramKind::Skip);
    auto c = parse_program("{ x := 0 } [] { x := 1 }", sp);
    REQUIRE(c->kind == ProgramKind::Choice);
    CHECK(equal(c, p_choice(p_assign(0, "x", e_const(0)), p_assign(0, "x", e_const(1)))));
    auto w = parse_program("while x != 0 { x := x - 1 }", sp);
    CHECK(equal(w, p_while(g_cmp(GuardKind::Ne, e_var(0, "x"), e_const(0)),
                           p_assign(0, "x", e_sub(e_var(0, "x"), e_const(1))))));
    auto ite = parse_program("if x = 0 { diverge }", sp);
    CHECK(ite->kind == ProgramKind::Ite);
    CHECK(ite->b->kind == ProgramKind::Skip);
    auto seq = parse_program("x := 1; skip; x := 2;", sp);
    CHECK(seq->kind == ProgramKind::Seq);
    CHECK(depth(seq) == 3);
}

TEST_CASE("parse errors carry line and column") {
    StateSpace sp({"x"}, 3);
    try {
        parse_program("skip;\n  x := ", sp);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).rfind("2:", 0) == 0);
    }
    CHECK_THROWS_AS(parse_program("y := 0", sp), UnknownVariableError);
    CHECK_THROWS_AS(parse_program("x := 0 [] ", sp), ParseError);
    CHECK_THROWS_AS(parse_program("x / 2", sp), ParseError);
}

TEST_CASE("program files") {
    auto pf = parse_program_file("# demo\nvars x, y mod 4\nx := y + 1 # inc\n");
    CHECK(pf.space.vars() == std::vector<std::string>{"x", "y"});
    CHECK(pf.space.modulus() == 4);
    auto inferred = parse_program_file("y := 0; x := y", FileOptions{std::nullopt, 2});
    CHECK(inferred.space.vars() == std::vector<std::string>{"y", "x"});
    auto overridden = parse_program_file("vars x mod 4\nskip", FileOptions{std::nullopt, 3});
    CHECK(overridden.space.modulus() == 3);
    CHECK_THROWS_AS(parse_program_file("x := 0"), InvalidArgument);
}

TEST_CASE("print then parse is the identity on generated programs") {
    GeneratorConfig cfg;
    cfg.vars = {"x", "y"};
    cfg.modulus = 3;
    cfg.max_depth = 5;
    cfg.loops = true;
    cfg.mode = GeneratorConfig::Mode::Random;
    cfg.count = 500;
    StateSpace sp(cfg.vars, cfg.modulus);
    for (const auto& p : generate_programs(cfg, sp)) {
        const auto text = print(p);
        auto q = parse_program(text, sp);
        INFO(text);
        CHECK(equal(p, q));
        CHECK(print(q) == text);
    }
}

TEST_CASE("exhaustive enumeration") {
    StateSpace sp({"x"}, 2);
    GeneratorConfig cfg;
    cfg.max_depth = 1;
    auto base = generate_programs(cfg, sp);
    std::vector<std::string> texts;
    for (const auto& p : base) texts.push_back(print(p));
    CHECK(texts == std::vector<std::string>{"skip", "diverge", "x := 0", "x := 1", "x := x"});

    // golden counts
    cfg.max_depth = 2;
    CHECK(generate_programs(cfg, sp).size() == 155);
    cfg.loops = true;
    CHECK(generate_programs(cfg, sp).size() == 175);
    cfg.loops = false;
    cfg.max_depth = 3;
    std::size_t n = 0;
    for_each_program(cfg, sp, [&](const Program&) { return ++n, true; });
    CHECK(n == 144155);
}

TEST_CASE("random generation is reproducible") {
    StateSpace sp({"x", "y"}, 4);
    GeneratorConfig cfg;
    cfg.vars = {"x", "y"};
    cfg.modulus = 4;
    cfg.mode = GeneratorConfig::Mode::Random;
    cfg.seed = 7;
    cfg.max_depth = 4;
    cfg.loops = true;
    cfg.count = 200;
    auto a = generate_programs(cfg, sp), b = generate_programs(cfg, sp);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(equal(a[i], b[i]));
    cfg.seed = 8;
    auto c = generate_programs(cfg, sp);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) differs |= !equal(a[i], c[i]);
    CHECK(differs);
}

}
