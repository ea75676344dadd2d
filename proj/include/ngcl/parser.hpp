#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ngcl/ast.hpp"
#include "ngcl/predicate.hpp"
#include "ngcl/state_space.hpp"

namespace ngcl {

Program parse_program(const std::string& text, const StateSpace& space);
Guard parse_guard(const std::string& text, const StateSpace& space);
Expr parse_expr(const std::string& text, const StateSpace& space);

// Predicate syntax: a guard ("x = 1 || y < 2"), or an explicit state set
// ("{<x=0>, <x=1>}", "{}").
Predicate parse_predicate(const std::string& text, const StateSpace& space);

struct ProgramFile {
    StateSpace space;
    Program program;
};

struct FileOptions {
    std::optional<std::vector<std::string>> vars;   // overrides header
    std::optional<Value> modulus;                   // overrides header
};

// A program file may start with a header "vars x, y mod 4". Without header,
// variables are taken from opts or inferred in order of first occurrence;
// the modulus must then come from opts. '#' starts a comment.
ProgramFile parse_program_file(const std::string& text, const FileOptions& opts = {});

}  // namespace ngcl
