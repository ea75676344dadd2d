#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ngcl/generator.hpp"

namespace ngcl {

struct Witness {
    std::string space;                    // "vars x mod 2"
    std::string program;
    std::optional<std::string> program2;  // second program, for two-program claims
    std::optional<std::string> pre;
    std::optional<std::string> post;
    std::optional<std::string> state;
    std::string detail;
    bool operator==(const Witness&) const = default;
};

struct Verdict {
    std::string claim;
    bool holds = true;
    std::optional<Witness> witness;
    // Conditional theorems: a violating case outside the assumption filter,
    // showing the assumption is not vacuous.
    std::optional<Witness> nonvacuity;
    std::string corpus;
    std::uint64_t seed = 0;
    std::size_t programs = 0;
    std::size_t triples = 0;
    std::size_t filtered = 0;      // cases passing the assumption filter
    double duration_ms = 0;        // not part of the deterministic report
    bool operator==(const Verdict& o) const {
        return claim == o.claim && holds == o.holds && witness == o.witness && nonvacuity == o.nonvacuity &&
               corpus == o.corpus && seed == o.seed && programs == o.programs && triples == o.triples &&
               filtered == o.filtered;
    }
};

// Stable theorem identifiers, in survey order.
const std::vector<std::string>& theorem_ids();
bool is_theorem(const std::string& id);
bool is_conditional(const std::string& id);

struct SurveyOptions {
    // Conditional theorems filter on assumptions restricted to the triple's
    // b (termination, branching) or c (reachability, reversibility); strict
    // mode requires them on all of Σ instead.
    bool strict = false;
};

// Runs the listed theorems over one pass of the corpus.
std::vector<Verdict> check_theorems(const std::vector<std::string>& ids, const CorpusSpec& corpus,
                                    const SurveyOptions& opts = {});
Verdict check_theorem(const std::string& id, const CorpusSpec& corpus, const SurveyOptions& opts = {});

std::string describe_space(const StateSpace& space);

}  // namespace ngcl
