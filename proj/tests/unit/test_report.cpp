#include <doctest.h>

#include "ngcl/errors.hpp"
#include "ngcl/report.hpp"

using namespace ngcl;

TEST_SUITE("report") {

TEST_CASE("JSON round trip") {
    Report r;
    r.command = {"survey", "--suite", "all"};
    r.space = "vars x mod 2";
    for (const auto& v : check_theorems({"ORDERING", "MAY_TERMINATION", "BRANCHING_COLLAPSE"}, corpus_by_name("tiny")))
        r.items.push_back(item_from(v, true));
    const Claim* c = find_claim("dwp-neq-intersection");
    r.items.push_back(item_from(find_counterexample(*c), *c, false));

    const auto text = to_json_text(r);
    const auto back = report_from_json_text(text);
    CHECK(back == r);
    CHECK(to_json_text(back) == text);
    CHECK(text.find("\"schema_version\": 1") != std::string::npos);
}

TEST_CASE("timings are opt-in") {
    const auto v = check_theorem("ORDERING", corpus_by_name("tiny"));
    CHECK(!item_from(v, false).duration_ms);
    CHECK(item_from(v, true).duration_ms);
    Report a, b;
    a.items.push_back(item_from(v, false));
    b.items.push_back(item_from(check_theorem("ORDERING", corpus_by_name("tiny")), false));
    CHECK(to_json_text(a) == to_json_text(b));
}

TEST_CASE("text rendering") {
    Report r;
    r.items.push_back(item_from(check_theorem("MAY_TERMINATION", corpus_by_name("tiny")), false));
    const auto text = to_text(r);
    CHECK(text.find("MAY_TERMINATION  FAIL") == 0);
    CHECK(text.find("program: { skip } [] { diverge }") != std::string::npos);
}

TEST_CASE("malformed reports are rejected") {
    CHECK_THROWS_AS(report_from_json_text("{"), InvalidArgument);
    CHECK_THROWS_AS(report_from_json_text("{\"tool\": 1}"), InvalidArgument);
}

}
