#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ngcl/ast.hpp"
#include "ngcl/predicate.hpp"
#include "ngcl/state_space.hpp"

namespace ngcl {

// Seeded generator with a portable bounded draw (std distributions are
// implementation-defined, which would break report reproducibility).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    // Uniform-ish in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }
    bool chance(unsigned percent) { return below(100) < percent; }

private:
    std::mt19937_64 eng_;
};

struct GeneratorConfig {
    enum class Mode { Exhaustive, Random };
    std::vector<std::string> vars{"x"};
    Value modulus = 2;
    std::size_t max_depth = 2;
    bool loops = false;
    Mode mode = Mode::Exhaustive;
    std::uint64_t seed = 7;
    std::size_t count = 1000;     // random mode only
    std::size_t expr_depth = 1;   // 1: constants and variables; 2: one operator on top
};

// Exhaustive pools used for assignments and guards.
std::vector<Expr> expression_pool(const StateSpace& space, std::size_t expr_depth);
std::vector<Guard> guard_pool(const StateSpace& space);

// Exhaustive mode: all programs up to max_depth, by depth then a fixed AST
// order. Random mode: `count` programs, reproducible from the seed.
// The callback returns false to stop early.
void for_each_program(const GeneratorConfig& cfg, const StateSpace& space,
                      const std::function<bool(const Program&)>& fn);
std::vector<Program> generate_programs(const GeneratorConfig& cfg, const StateSpace& space);

Program random_program(Rng& rng, const StateSpace& space, std::size_t max_depth, bool loops);
Guard random_guard(Rng& rng, const StateSpace& space);
Expr random_expr(Rng& rng, const StateSpace& space, std::size_t depth);

// Every predicate of a state space, by mask (needs |Σ| <= 16).
std::vector<Predicate> all_predicates(std::size_t n);

// ---- corpora ----

struct CorpusSlice {
    GeneratorConfig gen;
};

struct CorpusSpec {
    std::string name;
    std::vector<CorpusSlice> slices;
    // 0: every predicate; otherwise this many random predicates per program,
    // plus their complements, the empty set and the full set.
    std::size_t random_predicates = 0;
    std::uint64_t seed = 7;
};

// Named corpora: "small-exhaustive", "loops", "small-loops", "tiny".
CorpusSpec corpus_by_name(const std::string& name, std::uint64_t seed = 7);
std::vector<std::string> corpus_names();

struct CaseView {
    const StateSpace& space;
    const Program& program;
    std::size_t slice;
    std::size_t index;  // program index within the slice
    const std::vector<Predicate>& predicates;
};

void for_each_case(const CorpusSpec& corpus, const std::function<bool(const CaseView&)>& fn);

}  // namespace ngcl
