#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ngcl/counterexample.hpp"
#include "ngcl/theorems.hpp"

namespace ngcl {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

struct ReportItem {
    std::string kind;    // theorem | counterexample | check | transform | equation | classify
    std::string claim;   // theorem id, claim id, logic, transformer, equation
    bool holds = true;
    std::optional<std::string> status;  // counterexample search outcome
    std::optional<std::string> result;  // rendered value (transform, classify)
    std::optional<Witness> witness;
    std::optional<Witness> nonvacuity;
    std::optional<std::string> corpus;
    std::optional<std::uint64_t> seed;
    std::map<std::string, std::uint64_t> stats;
    std::optional<double> duration_ms;  // only with timings enabled
    bool operator==(const ReportItem&) const = default;
};

struct Report {
    int schema_version = kSchemaVersion;
    std::string tool = "ngcl";
    std::string version = kVersion;
    std::vector<std::string> command;
    std::optional<std::string> space;
    std::vector<ReportItem> items;
    bool operator==(const Report&) const = default;
};

ReportItem item_from(const Verdict& v, bool timings);
ReportItem item_from(const SearchResult& r, const Claim& claim, bool timings);

std::string to_json_text(const Report& r);
Report report_from_json_text(const std::string& text);
std::string to_text(const Report& r);
std::string render_witness(const Witness& w);

}  // namespace ngcl
