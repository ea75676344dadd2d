#include "ngcl/report.hpp"

#include <json.hpp>

#include "ngcl/errors.hpp"

namespace ngcl {

using nlohmann::json;

namespace {

template <class T>
void put(json& j, const char* key, const std::optional<T>& v) {
    if (v) j[key] = *v;
}

template <class T>
void get(const json& j, const char* key, std::optional<T>& v) {
    if (j.contains(key)) v = j.at(key).get<T>();
}

}  // namespace

void to_json(json& j, const Witness& w) {
    j = json{{"space", w.space}, {"program", w.program}, {"detail", w.detail}};
    put(j, "program2", w.program2);
    put(j, "pre", w.pre);
    put(j, "post", w.post);
    put(j, "state", w.state);
}

void from_json(const json& j, Witness& w) {
    j.at("space").get_to(w.space);
    j.at("program").get_to(w.program);
    j.at("detail").get_to(w.detail);
    get(j, "program2", w.program2);
    get(j, "pre", w.pre);
    get(j, "post", w.post);
    get(j, "state", w.state);
}

void to_json(json& j, const ReportItem& it) {
    j = json{{"kind", it.kind}, {"claim", it.claim}, {"holds", it.holds}};
    put(j, "status", it.status);
    put(j, "result", it.result);
    put(j, "witness", it.witness);
    put(j, "nonvacuity", it.nonvacuity);
    put(j, "corpus", it.corpus);
    put(j, "seed", it.seed);
    if (!it.stats.empty()) j["stats"] = it.stats;
    put(j, "duration_ms", it.duration_ms);
}

void from_json(const json& j, ReportItem& it) {
    j.at("kind").get_to(it.kind);
    j.at("claim").get_to(it.claim);
    j.at("holds").get_to(it.holds);
    get(j, "status", it.status);
    get(j, "result", it.result);
    get(j, "witness", it.witness);
    get(j, "nonvacuity", it.nonvacuity);
    get(j, "corpus", it.corpus);
    get(j, "seed", it.seed);
    if (j.contains("stats")) j.at("stats").get_to(it.stats);
    get(j, "duration_ms", it.duration_ms);
}

void to_json(json& j, const Report& r) {
    j = json{{"schema_version", r.schema_version}, {"tool", r.tool}, {"version", r.version},
             {"command", r.command},               {"items", r.items}};
    put(j, "space", r.space);
}

void from_json(const json& j, Report& r) {
    j.at("schema_version").get_to(r.schema_version);
    j.at("tool").get_to(r.tool);
    j.at("version").get_to(r.version);
    j.at("command").get_to(r.command);
    j.at("items").get_to(r.items);
    get(j, "space", r.space);
}

ReportItem item_from(const Verdict& v, bool timings) {
    ReportItem it;
    it.kind = "theorem";
    it.claim = v.claim;
    it.holds = v.holds;
    it.witness = v.witness;
    it.nonvacuity = v.nonvacuity;
    it.corpus = v.corpus;
    it.seed = v.seed;
    it.stats = {{"programs", v.programs}, {"triples", v.triples}};
    if (is_conditional(v.claim)) it.stats["filtered"] = v.filtered;
    if (timings) it.duration_ms = v.duration_ms;
    return it;
}

ReportItem item_from(const SearchResult& r, const Claim& claim, bool timings) {
    ReportItem it;
    it.kind = "counterexample";
    it.claim = r.claim;
    // For a negative claim, "holds" means a separating witness exists.
    it.holds = r.status == SearchStatus::Found;
    it.status = std::string(name(r.status));
    it.result = claim.description;
    it.witness = r.witness;
    it.stats = {{"programs", r.programs}, {"triples", r.triples}, {"budget", r.budget}};
    if (timings) it.duration_ms = r.duration_ms;
    return it;
}

std::string to_json_text(const Report& r) { return json(r).dump(2) + "\n"; }

Report report_from_json_text(const std::string& text) {
    try {
        return json::parse(text).get<Report>();
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed report: ") + e.what());
    }
}

std::string render_witness(const Witness& w) {
    std::string out = "    space:   " + w.space + "\n    program: " + w.program + "\n";
    if (w.program2) out += "    program: " + *w.program2 + "\n";
    if (w.pre) out += "    pre:     " + *w.pre + "\n";
    if (w.post) out += "    post:    " + *w.post + "\n";
    if (w.state) out += "    state:   " + *w.state + "\n";
    out += "    why:     " + w.detail + "\n";
    return out;
}

std::string to_text(const Report& r) {
    std::string out;
    for (const auto& it : r.items) {
        std::string mark;
        if (it.kind == "counterexample")
            mark = *it.status;
        else
            mark = it.holds ? "PASS" : "FAIL";
        out += it.claim + "  " + mark;
        std::string stats;
        for (const auto& [k, v] : it.stats) stats += (stats.empty() ? "" : ", ") + k + "=" + std::to_string(v);
        if (!stats.empty()) out += "  (" + stats + ")";
        if (it.duration_ms) out += "  " + std::to_string(static_cast<long long>(*it.duration_ms)) + " ms";
        out += "\n";
        if (it.result) out += "    " + *it.result + "\n";
        if (it.witness) {
            out += it.kind == "counterexample" ? "  witness:\n" : "  counterexample:\n";
            out += render_witness(*it.witness);
        }
        if (it.nonvacuity) out += "  outside the assumption:\n" + render_witness(*it.nonvacuity);
    }
    return out;
}

}  // namespace ngcl
