#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ngcl/generator.hpp"
#include "ngcl/taxonomy.hpp"
#include "ngcl/theorems.hpp"

namespace ngcl {

inline constexpr std::size_t kDefaultBudget = 100'000;

// A negative claim: "some triple separates these two judgements".
struct Claim {
    enum class Kind {
        LogicPair,         // two logics disagree on one triple
        TransformerNeq,    // T(p,c) differs from a combination of others
        RelationalTwin,    // two programs, same relation, different dwpLB verdict
        EquationVsLogic,   // a catalog equation disagrees with a logic
        MayTermination,    // awp(p,true)=true yet awlp(p,false)!=false
        TerminationDwlp,   // dwp(p,true)=true disagrees with dwlp(p,false)=false
    };
    std::string id;
    Kind kind;
    std::string description;
    Logic first = Logic::AwpLB, second = Logic::AwpLB;  // LogicPair / EquationVsLogic (second)
    std::string equation;                               // EquationVsLogic
    // Expected outcome: false for true equivalences (Galois connections).
    bool expect_witness = true;
};

// The seven base logics and their contrapositive shapes ("<base>-contra").
const std::vector<std::string>& separation_logic_ids();
std::optional<Logic> separation_logic(const std::string& id);

const std::vector<Claim>& claim_catalog();
const Claim* find_claim(const std::string& id);

struct SearchConfig {
    std::size_t budget = kDefaultBudget;  // candidate triples
    GeneratorConfig gen;                  // defaults: {x} mod 2, depth 3, loops
    SearchConfig();
};

enum class SearchStatus { Found, NoneWithinBudget, SpaceExhausted };
std::string_view name(SearchStatus s);

struct SearchResult {
    std::string claim;
    SearchStatus status = SearchStatus::NoneWithinBudget;
    std::optional<Witness> witness;
    std::size_t programs = 0;
    std::size_t triples = 0;
    std::size_t budget = 0;
    double duration_ms = 0;
    bool operator==(const SearchResult& o) const {
        return claim == o.claim && status == o.status && witness == o.witness && programs == o.programs &&
               triples == o.triples && budget == o.budget;
    }
};

SearchResult find_counterexample(const Claim& claim, const SearchConfig& cfg = {});
SearchResult find_counterexample(const std::string& claim_id, const SearchConfig& cfg = {});

// Re-parses the witness and recomputes the transformers directly; true if it
// really separates the claim.
bool verify_witness(const Claim& claim, const Witness& w);

}  // namespace ngcl
