#include "ngcl/ngcl.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "ngcl/counterexample.hpp"
#include "ngcl/errors.hpp"
#include "ngcl/parser.hpp"
#include "ngcl/report.hpp"
#include "ngcl/semantics.hpp"
#include "ngcl/taxonomy.hpp"
#include "ngcl/theorems.hpp"
#include "ngcl/topkat.hpp"
#include "ngcl/transformers.hpp"

struct ngcl_program {
    ngcl::ProgramFile file;
};

struct ngcl_predicate {
    ngcl::Predicate pred;
};

struct ngcl_report {
    ngcl::Report report;
};

namespace {

thread_local std::string last_error;

ngcl_status fail(ngcl_status s, const std::string& msg) {
    last_error = msg;
    return s;
}

// Runs fn, mapping exceptions to status codes.
template <class F>
ngcl_status guarded(F&& fn) {
    try {
        last_error.clear();
        fn();
        return NGCL_OK;
    } catch (const ngcl::ParseError& e) {
        return fail(NGCL_ERR_PARSE, e.what());
    } catch (const ngcl::UnknownVariableError& e) {
        return fail(NGCL_ERR_UNKNOWN_VARIABLE, e.what());
    } catch (const ngcl::StateCapError& e) {
        return fail(NGCL_ERR_STATE_CAP, e.what());
    } catch (const ngcl::ResourceError& e) {
        return fail(NGCL_ERR_RESOURCE, e.what());
    } catch (const ngcl::InvalidArgument& e) {
        return fail(NGCL_ERR_INVALID_ARGUMENT, e.what());
    } catch (const ngcl::EngineMismatch& e) {
        return fail(NGCL_ERR_ENGINE_MISMATCH, e.what());
    } catch (const std::bad_alloc&) {
        return fail(NGCL_ERR_RESOURCE, "out of memory");
    } catch (const std::exception& e) {
        return fail(NGCL_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(NGCL_ERR_INTERNAL, "unknown error");
    }
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void need(const void* p, const char* what) {
    if (!p) throw ngcl::InvalidArgument(std::string(what) + " is null");
}

const ngcl::Predicate& pred_in(const ngcl_program* p, const ngcl_predicate* q, const char* what) {
    need(q, what);
    if (q->pred.universe() != p->file.space.size())
        throw ngcl::InvalidArgument(std::string(what) + " belongs to a different state space");
    return q->pred;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

std::string join_lines(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += s + "\n";
    return out;
}

}  // namespace

extern "C" {

const char* ngcl_version(void) { return NGCL_VERSION; }

const char* ngcl_status_name(ngcl_status s) {
    switch (s) {
        case NGCL_OK: return "ok";
        case NGCL_ERR_PARSE: return "parse error";
        case NGCL_ERR_UNKNOWN_VARIABLE: return "unknown variable";
        case NGCL_ERR_STATE_CAP: return "state space too large";
        case NGCL_ERR_RESOURCE: return "resource limit";
        case NGCL_ERR_INVALID_ARGUMENT: return "invalid argument";
        case NGCL_ERR_ENGINE_MISMATCH: return "engine mismatch";
        case NGCL_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* ngcl_last_error(void) { return last_error.c_str(); }

void ngcl_string_free(char* s) { std::free(s); }

ngcl_status ngcl_program_parse(const char* text, const char* vars, int64_t modulus, ngcl_program** out) {
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        ngcl::FileOptions opts;
        if (vars && *vars) opts.vars = split_csv(vars);
        if (modulus > 0) opts.modulus = modulus;
        *out = new ngcl_program{ngcl::parse_program_file(text, opts)};
    });
}

void ngcl_program_free(ngcl_program* p) { delete p; }

ngcl_status ngcl_program_print(const ngcl_program* p, char** out) {
    return guarded([&] {
        need(p, "program");
        *out = dup(ngcl::print(p->file.program));
    });
}

ngcl_status ngcl_program_space(const ngcl_program* p, char** out) {
    return guarded([&] {
        need(p, "program");
        *out = dup(ngcl::describe_space(p->file.space));
    });
}

size_t ngcl_program_state_count(const ngcl_program* p) { return p ? p->file.space.size() : 0; }

ngcl_status ngcl_program_render_state(const ngcl_program* p, uint32_t state, char** out) {
    return guarded([&] {
        need(p, "program");
        if (state >= p->file.space.size()) throw ngcl::InvalidArgument("state index out of range");
        *out = dup(p->file.space.render(state));
    });
}

ngcl_status ngcl_program_relation(const ngcl_program* p, char** out) {
    return guarded([&] {
        need(p, "program");
        *out = dup(ngcl::denote_relation(p->file.program, p->file.space).render(p->file.space));
    });
}

ngcl_status ngcl_program_dot(const ngcl_program* p, char** out) {
    return guarded([&] {
        need(p, "program");
        *out = dup(ngcl::TransitionGraph(p->file.program, p->file.space).to_dot());
    });
}

ngcl_status ngcl_predicate_parse(const ngcl_program* space_of, const char* text, ngcl_predicate** out) {
    return guarded([&] {
        need(space_of, "program");
        need(text, "text");
        *out = new ngcl_predicate{ngcl::parse_predicate(text, space_of->file.space)};
    });
}

void ngcl_predicate_free(ngcl_predicate* q) { delete q; }

ngcl_status ngcl_predicate_render(const ngcl_program* space_of, const ngcl_predicate* q, char** out) {
    return guarded([&] {
        need(space_of, "program");
        *out = dup(pred_in(space_of, q, "predicate").render(space_of->file.space));
    });
}

size_t ngcl_predicate_count(const ngcl_predicate* q) { return q ? q->pred.count() : 0; }

int ngcl_predicate_contains(const ngcl_predicate* q, uint32_t state) {
    return q && state < q->pred.universe() && q->pred.test(state) ? 1 : 0;
}

int ngcl_predicate_equal(const ngcl_predicate* a, const ngcl_predicate* b) {
    return a && b && a->pred == b->pred ? 1 : 0;
}

ngcl_status ngcl_transform(const ngcl_program* p, const char* kind, const ngcl_predicate* in, ngcl_engine engine,
                           ngcl_predicate** out) {
    return guarded([&] {
        need(p, "program");
        need(kind, "kind");
        auto k = ngcl::parse_transformer(kind);
        if (!k) throw ngcl::InvalidArgument(std::string("unknown transformer '") + kind + "'");
        ngcl::Engine e = ngcl::Engine::Oracle;
        if (engine == NGCL_ENGINE_INDUCTIVE) e = ngcl::Engine::Inductive;
        else if (engine == NGCL_ENGINE_BOTH) e = ngcl::Engine::Both;
        else if (engine != NGCL_ENGINE_ORACLE) throw ngcl::InvalidArgument("unknown engine");
        *out = new ngcl_predicate{ngcl::transform(*k, p->file.program, p->file.space, pred_in(p, in, "predicate"), e)};
    });
}

ngcl_status ngcl_check(const ngcl_program* p, const char* logic, const ngcl_predicate* pre,
                       const ngcl_predicate* post, int* holds, int64_t* witness) {
    return guarded([&] {
        need(p, "program");
        need(logic, "logic");
        auto l = ngcl::parse_logic(logic);
        if (!l) throw ngcl::InvalidArgument(std::string("unknown logic '") + logic + "'");
        const ngcl::Triple t{pred_in(p, pre, "precondition"), p->file.program, pred_in(p, post, "postcondition")};
        const auto v = ngcl::evaluate(*l, t, p->file.space);
        if (holds) *holds = v.holds ? 1 : 0;
        if (witness) *witness = v.witness ? static_cast<int64_t>(*v.witness) : -1;
    });
}

ngcl_status ngcl_logic_info(const char* logic, char** out) {
    return guarded([&] {
        need(logic, "logic");
        auto l = ngcl::parse_logic(logic);
        if (!l) throw ngcl::InvalidArgument(std::string("unknown logic '") + logic + "'");
        nlohmann::json j{{"id", ngcl::name(*l)},
                         {"colloquial", ngcl::colloquial_name(*l)},
                         {"condition", ngcl::subset_condition(*l)}};
        if (auto eq = ngcl::equation_link(*l)) j["equation"] = *eq;
        *out = dup(j.dump());
    });
}

ngcl_status ngcl_classify(const ngcl_program* p, const ngcl_predicate* pre, const ngcl_predicate* post, char** out) {
    return guarded([&] {
        need(p, "program");
        const auto& space = p->file.space;
        const auto a = ngcl::classify(p->file.program, space, pred_in(p, pre, "precondition"),
                                      pred_in(p, post, "postcondition"));
        nlohmann::json j = nlohmann::json::object();
        auto flag = [&](const char* key, const ngcl::Flag& f) {
            nlohmann::json o{{"status", ngcl::name(f.status)}};
            if (f.witness) o["witness"] = space.render(*f.witness);
            if (!f.note.empty()) o["note"] = f.note;
            j[key] = o;
        };
        flag("termination", a.termination);
        flag("reachability", a.reachability);
        flag("determinism", a.determinism);
        flag("reversibility", a.reversibility);
        flag("no_branching_divergence", a.no_branching_divergence);
        *out = dup(j.dump());
    });
}

ngcl_status ngcl_equation_check(const ngcl_program* p, const char* id, const ngcl_predicate* pre,
                                const ngcl_predicate* post, int* holds) {
    return guarded([&] {
        need(p, "program");
        need(id, "equation id");
        const auto* e = ngcl::find_equation(id);
        if (!e) throw ngcl::InvalidArgument(std::string("unknown equation '") + id + "'");
        const auto rel = ngcl::denote_relation(p->file.program, p->file.space);
        const bool h = ngcl::check_equation(*e, pred_in(p, pre, "precondition"), rel, pred_in(p, post, "postcondition"));
        if (holds) *holds = h ? 1 : 0;
    });
}

ngcl_status ngcl_equation_catalog(char** out) {
    return guarded([&] {
        nlohmann::json eqs = nlohmann::json::array(), links = nlohmann::json::array();
        for (const auto& e : ngcl::equation_catalog()) eqs.push_back({{"id", e.id}, {"text", ngcl::print(e)}});
        for (const auto& l : ngcl::transformation_links())
            links.push_back({{"from", l.from}, {"via", l.via}, {"to", l.to}});
        *out = dup(nlohmann::json{{"equations", eqs}, {"links", links}}.dump());
    });
}

ngcl_status ngcl_survey(const char* ids, const char* corpus, uint64_t seed, int strict, int timings,
                        ngcl_report** out) {
    return guarded([&] {
        need(ids, "ids");
        need(corpus, "corpus");
        std::vector<std::string> list;
        if (std::string(ids) == "all")
            list = ngcl::theorem_ids();
        else
            list = split_csv(ids);
        if (list.empty()) throw ngcl::InvalidArgument("no theorem ids given");
        for (const auto& id : list)
            if (!ngcl::is_theorem(id)) throw ngcl::InvalidArgument("unknown theorem '" + id + "'");
        const auto spec = ngcl::corpus_by_name(corpus, seed);
        const auto verdicts = ngcl::check_theorems(list, spec, ngcl::SurveyOptions{strict != 0});
        auto r = std::make_unique<ngcl_report>();
        for (const auto& v : verdicts) r->report.items.push_back(ngcl::item_from(v, timings != 0));
        *out = r.release();
    });
}

ngcl_status ngcl_counterexample(const char* claim, size_t budget, int timings, ngcl_report** out) {
    return guarded([&] {
        need(claim, "claim");
        const auto* c = ngcl::find_claim(claim);
        if (!c) throw ngcl::InvalidArgument(std::string("unknown claim '") + claim + "'");
        ngcl::SearchConfig cfg;
        if (budget > 0) cfg.budget = budget;
        const auto res = ngcl::find_counterexample(*c, cfg);
        if (res.witness && !ngcl::verify_witness(*c, *res.witness))
            throw ngcl::InvariantError("witness for " + res.claim + " failed re-verification");
        auto r = std::make_unique<ngcl_report>();
        r->report.space = ngcl::describe_space(ngcl::StateSpace(cfg.gen.vars, cfg.gen.modulus));
        r->report.items.push_back(ngcl::item_from(res, *c, timings != 0));
        *out = r.release();
    });
}

ngcl_status ngcl_theorem_ids(char** out) {
    return guarded([&] { *out = dup(join_lines(ngcl::theorem_ids())); });
}

ngcl_status ngcl_claim_ids(char** out) {
    return guarded([&] {
        std::vector<std::string> ids;
        for (const auto& c : ngcl::claim_catalog()) ids.push_back(c.id);
        *out = dup(join_lines(ids));
    });
}

ngcl_status ngcl_corpus_names(char** out) {
    return guarded([&] { *out = dup(join_lines(ngcl::corpus_names())); });
}

ngcl_status ngcl_report_set_command(ngcl_report* r, int argc, const char* const* argv) {
    return guarded([&] {
        need(r, "report");
        r->report.command.clear();
        for (int i = 0; i < argc; ++i) r->report.command.emplace_back(argv[i]);
    });
}

ngcl_status ngcl_report_json(const ngcl_report* r, char** out) {
    return guarded([&] {
        need(r, "report");
        *out = dup(ngcl::to_json_text(r->report));
    });
}

ngcl_status ngcl_report_text(const ngcl_report* r, char** out) {
    return guarded([&] {
        need(r, "report");
        *out = dup(ngcl::to_text(r->report));
    });
}

ngcl_status ngcl_report_parse_json(const char* text, ngcl_report** out) {
    return guarded([&] {
        need(text, "text");
        *out = new ngcl_report{ngcl::report_from_json_text(text)};
    });
}

size_t ngcl_report_item_count(const ngcl_report* r) { return r ? r->report.items.size() : 0; }

int ngcl_report_all_hold(const ngcl_report* r) {
    if (!r) return 0;
    for (const auto& it : r->report.items)
        if (!it.holds) return 0;
    return 1;
}

int ngcl_report_equal(const ngcl_report* a, const ngcl_report* b) { return a && b && a->report == b->report ? 1 : 0; }

void ngcl_report_free(ngcl_report* r) { delete r; }

}  // extern "C"
