// Command-line front end; talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ngcl/ngcl.h"

namespace {

enum Exit { kOk = 0, kClaimFalse = 1, kUsage = 2, kInternal = 3 };

struct Failure {
    ngcl_status status;
    std::string message;
};

int exit_code(ngcl_status s) {
    return s == NGCL_ERR_ENGINE_MISMATCH || s == NGCL_ERR_INTERNAL ? kInternal : kUsage;
}

void check(ngcl_status s) {
    if (s != NGCL_OK) throw Failure{s, ngcl_last_error()};
}

std::string take(char* s) {
    std::string out = s ? s : "";
    ngcl_string_free(s);
    return out;
}

using ProgramPtr = std::unique_ptr<ngcl_program, decltype(&ngcl_program_free)>;
using PredicatePtr = std::unique_ptr<ngcl_predicate, decltype(&ngcl_predicate_free)>;
using ReportPtr = std::unique_ptr<ngcl_report, decltype(&ngcl_report_free)>;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{NGCL_ERR_INVALID_ARGUMENT, "cannot read '" + path + "'"};
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct SpaceOptions {
    std::string vars;
    std::int64_t modulus = 0;
};

ProgramPtr load(const std::string& path, const SpaceOptions& so) {
    ngcl_program* p = nullptr;
    check(ngcl_program_parse(read_file(path).c_str(), so.vars.empty() ? nullptr : so.vars.c_str(), so.modulus, &p));
    return ProgramPtr(p, ngcl_program_free);
}

PredicatePtr predicate(const ngcl_program* p, const std::string& text) {
    ngcl_predicate* q = nullptr;
    check(ngcl_predicate_parse(p, text.c_str(), &q));
    return PredicatePtr(q, ngcl_predicate_free);
}

std::string render(const ngcl_program* p, const ngcl_predicate* q) {
    char* s = nullptr;
    check(ngcl_predicate_render(p, q, &s));
    return take(s);
}

std::string state_text(const ngcl_program* p, std::int64_t state) {
    char* s = nullptr;
    check(ngcl_program_render_state(p, static_cast<std::uint32_t>(state), &s));
    return take(s);
}

std::string space_text(const ngcl_program* p) {
    char* s = nullptr;
    check(ngcl_program_space(p, &s));
    return take(s);
}

std::string program_text(const ngcl_program* p) {
    char* s = nullptr;
    check(ngcl_program_print(p, &s));
    return take(s);
}

// Same envelope as library reports, for the single-triple commands.
nlohmann::json envelope(const std::vector<std::string>& argv, const ngcl_program* p, nlohmann::json item) {
    return {{"schema_version", 1}, {"tool", "ngcl"},         {"version", ngcl_version()},
            {"command", argv},     {"space", space_text(p)}, {"items", nlohmann::json::array({std::move(item)})}};
}

int emit_report(ngcl_report* r, const std::vector<std::string>& argv, const std::string& format,
                const std::string& output) {
    std::vector<const char*> args;
    for (const auto& a : argv) args.push_back(a.c_str());
    check(ngcl_report_set_command(r, static_cast<int>(args.size()), args.data()));
    char* s = nullptr;
    check(format == "json" ? ngcl_report_json(r, &s) : ngcl_report_text(r, &s));
    const std::string text = take(s);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw Failure{NGCL_ERR_INVALID_ARGUMENT, "cannot write '" + output + "'"};
        out << text;
    }
    return ngcl_report_all_hold(r) ? kOk : kClaimFalse;
}

std::string list(ngcl_status (*fn)(char**)) {
    char* s = nullptr;
    check(fn(&s));
    return take(s);
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);

    CLI::App app{"ngcl: predicate transformers, Hoare-like logics and TopKAT equations for nGCL"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("ngcl ") + ngcl_version());

    SpaceOptions so;
    auto space_flags = [&](CLI::App* sub) {
        sub->add_option("--vars", so.vars, "variables, comma separated (overrides the file header)");
        sub->add_option("--modulus", so.modulus, "modulus m (overrides the file header)")->check(CLI::PositiveNumber);
    };
    std::string file, format = "text", output;
    auto format_flag = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* transform = app.add_subcommand("transform", "apply a predicate transformer to a program");
    std::string kind, engine = "oracle", pred_text;
    transform->add_option("--kind", kind, "awp|dwp|awlp|dwlp|asp|dsp|aslp|dslp")->required();
    transform->add_option("--engine", engine, "oracle|inductive|both")->check(CLI::IsMember({"oracle", "inductive", "both"}));
    transform->add_option("--pred", pred_text, "guard or explicit state set")->required();
    transform->add_option("file", file, "program file ('-' for stdin)")->required();
    space_flags(transform);
    format_flag(transform);

    auto* chk = app.add_subcommand("check", "check a triple against one of the logics");
    std::string logic, pre_text, post_text;
    bool list_logics = false;
    chk->add_option("--logic", logic, "logic id or alias, e.g. dwpLB, lisbon, incorrectness");
    chk->add_option("--pre", pre_text, "precondition b");
    chk->add_option("--post", post_text, "postcondition c");
    chk->add_flag("--list", list_logics, "list the logics");
    chk->add_option("file", file, "program file ('-' for stdin)");
    space_flags(chk);
    format_flag(chk);

    auto* survey = app.add_subcommand("survey", "check theorems over a program corpus");
    std::string suite = "all", corpus = "small-exhaustive";
    std::uint64_t seed = 7;
    bool strict = false, timings = false, list_suite = false;
    survey->add_option("--suite", suite, "'all' or comma separated theorem ids");
    survey->add_option("--corpus", corpus, "small-exhaustive|loops|small-loops|tiny");
    survey->add_option("--seed", seed, "seed for random corpora");
    survey->add_flag("--strict", strict, "require assumptions on all states, not just on b or c");
    survey->add_flag("--timings", timings, "include wall-clock time per item");
    survey->add_flag("--list", list_suite, "list theorem ids and corpora");
    survey->add_option("--output,-o", output, "write the report to a file");
    format_flag(survey);

    auto* cex = app.add_subcommand("counterexample", "search for a witness separating a negative claim");
    std::string claim;
    std::size_t budget = 0;
    bool list_claims = false;
    cex->add_option("--claim", claim, "claim id, e.g. dwp-neq-intersection, pair:awpLB-vs-aslpLB-contra");
    cex->add_option("--budget", budget, "candidate triples to try (default 100000)");
    cex->add_flag("--timings", timings, "include wall-clock time");
    cex->add_flag("--list", list_claims, "list claim ids");
    cex->add_option("--output,-o", output, "write the report to a file");
    format_flag(cex);

    auto* eq = app.add_subcommand("equation", "evaluate a TopKAT catalog equation");
    std::string eq_id;
    bool list_eqs = false;
    eq->add_option("--id", eq_id, "equation id, e.g. LISBON");
    eq->add_option("--pre", pre_text, "test b");
    eq->add_option("--post", post_text, "test c");
    eq->add_flag("--list", list_eqs, "list the catalog and its t1-t3 links");
    eq->add_option("file", file, "program file ('-' for stdin)");
    space_flags(eq);
    format_flag(eq);

    auto* graph = app.add_subcommand("graph", "print the small-step configuration graph as DOT");
    graph->add_option("file", file, "program file ('-' for stdin)")->required();
    space_flags(graph);

    auto* cls = app.add_subcommand("classify", "evaluate the collapse assumptions for a triple");
    cls->add_option("--pre", pre_text, "precondition b (scope of termination/branching)")->default_val("true");
    cls->add_option("--post", post_text, "postcondition c (scope of reachability/reversibility)")->default_val("true");
    cls->add_option("file", file, "program file ('-' for stdin)")->required();
    space_flags(cls);
    format_flag(cls);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*transform) {
            auto p = load(file, so);
            auto in = predicate(p.get(), pred_text);
            const ngcl_engine e = engine == "both"        ? NGCL_ENGINE_BOTH
                                  : engine == "inductive" ? NGCL_ENGINE_INDUCTIVE
                                                          : NGCL_ENGINE_ORACLE;
            ngcl_predicate* raw = nullptr;
            check(ngcl_transform(p.get(), kind.c_str(), in.get(), e, &raw));
            PredicatePtr out(raw, ngcl_predicate_free);
            const std::string result = render(p.get(), out.get());
            if (format == "json")
                std::cout << envelope(args, p.get(),
                                      {{"kind", "transform"}, {"claim", kind}, {"holds", true}, {"result", result}})
                                 .dump(2)
                          << "\n";
            else
                std::cout << result << "\n";
            return kOk;
        }

        if (*chk) {
            if (list_logics) {
                for (const char* l : {"awpLB", "awpUB", "dwpLB", "dwpUB", "awlpLB", "awlpUB", "dwlpLB", "dwlpUB", "aspLB",
                                      "aspUB", "dspLB", "dspUB", "aslpLB", "aslpUB", "dslpLB", "dslpUB", "union",
                                      "intersection"}) {
                    char* s = nullptr;
                    check(ngcl_logic_info(l, &s));
                    const auto j = nlohmann::json::parse(take(s));
                    std::cout << j["id"].get<std::string>() << "  " << j["condition"].get<std::string>();
                    if (!j["colloquial"].get<std::string>().empty())
                        std::cout << "  (" << j["colloquial"].get<std::string>() << ")";
                    if (j.contains("equation")) std::cout << "  [" << j["equation"].get<std::string>() << "]";
                    std::cout << "\n";
                }
                return kOk;
            }
            if (logic.empty() || pre_text.empty() || post_text.empty() || file.empty())
                throw Failure{NGCL_ERR_INVALID_ARGUMENT, "check needs --logic, --pre, --post and a program file"};
            auto p = load(file, so);
            auto b = predicate(p.get(), pre_text);
            auto c = predicate(p.get(), post_text);
            int holds = 0;
            std::int64_t witness = -1;
            check(ngcl_check(p.get(), logic.c_str(), b.get(), c.get(), &holds, &witness));
            char* info = nullptr;
            check(ngcl_logic_info(logic.c_str(), &info));
            const auto j = nlohmann::json::parse(take(info));
            const std::string id = j["id"];
            if (format == "json") {
                nlohmann::json item{{"kind", "check"}, {"claim", id}, {"holds", holds != 0}, {"result", j["condition"]}};
                if (witness >= 0)
                    item["witness"] = {{"space", space_text(p.get())},
                                       {"program", program_text(p.get())},
                                       {"pre", render(p.get(), b.get())},
                                       {"post", render(p.get(), c.get())},
                                       {"state", state_text(p.get(), witness)},
                                       {"detail", "violates " + j["condition"].get<std::string>()}};
                std::cout << envelope(args, p.get(), item).dump(2) << "\n";
            } else {
                std::cout << id << ": " << (holds ? "valid" : "invalid");
                if (witness >= 0) std::cout << ", witness " << state_text(p.get(), witness);
                std::cout << "  (" << j["condition"].get<std::string>() << ")\n";
            }
            return holds ? kOk : kClaimFalse;
        }

        if (*survey) {
            if (list_suite) {
                std::cout << "theorems:\n" << list(ngcl_theorem_ids) << "corpora:\n" << list(ngcl_corpus_names);
                return kOk;
            }
            ngcl_report* raw = nullptr;
            check(ngcl_survey(suite.c_str(), corpus.c_str(), seed, strict, timings, &raw));
            ReportPtr r(raw, ngcl_report_free);
            return emit_report(r.get(), args, format, output);
        }

        if (*cex) {
            if (list_claims) {
                std::cout << list(ngcl_claim_ids);
                return kOk;
            }
            if (claim.empty()) throw Failure{NGCL_ERR_INVALID_ARGUMENT, "counterexample needs --claim (or --list)"};
            ngcl_report* raw = nullptr;
            check(ngcl_counterexample(claim.c_str(), budget, timings, &raw));
            ReportPtr r(raw, ngcl_report_free);
            return emit_report(r.get(), args, format, output);
        }

        if (*eq) {
            if (list_eqs) {
                const auto j = nlohmann::json::parse(list(ngcl_equation_catalog));
                if (format == "json") {
                    std::cout << j.dump(2) << "\n";
                    return kOk;
                }
                for (const auto& e : j["equations"])
                    std::cout << e["id"].get<std::string>() << ": " << e["text"].get<std::string>() << "\n";
                std::cout << "links:\n";
                for (const auto& l : j["links"])
                    std::cout << "  " << l["from"].get<std::string>() << " --" << l["via"].get<std::string>() << "--> "
                              << l["to"].get<std::string>() << "\n";
                return kOk;
            }
            if (eq_id.empty() || pre_text.empty() || post_text.empty() || file.empty())
                throw Failure{NGCL_ERR_INVALID_ARGUMENT, "equation needs --id, --pre, --post and a program file"};
            auto p = load(file, so);
            auto b = predicate(p.get(), pre_text);
            auto c = predicate(p.get(), post_text);
            int holds = 0;
            check(ngcl_equation_check(p.get(), eq_id.c_str(), b.get(), c.get(), &holds));
            if (format == "json")
                std::cout << envelope(args, p.get(), {{"kind", "equation"}, {"claim", eq_id}, {"holds", holds != 0}})
                                 .dump(2)
                          << "\n";
            else
                std::cout << eq_id << ": " << (holds ? "holds" : "fails") << "\n";
            return holds ? kOk : kClaimFalse;
        }

        if (*graph) {
            auto p = load(file, so);
            char* s = nullptr;
            check(ngcl_program_dot(p.get(), &s));
            std::cout << take(s);
            return kOk;
        }

        if (*cls) {
            auto p = load(file, so);
            auto b = predicate(p.get(), pre_text);
            auto c = predicate(p.get(), post_text);
            char* s = nullptr;
            check(ngcl_classify(p.get(), b.get(), c.get(), &s));
            const auto j = nlohmann::json::parse(take(s));
            if (format == "json") {
                std::cout << envelope(args, p.get(), {{"kind", "classify"}, {"claim", "assumptions"}, {"holds", true},
                                                      {"result", j.dump()}})
                                 .dump(2)
                          << "\n";
                return kOk;
            }
            for (const auto& [key, flag] : j.items()) {
                std::cout << key << ": " << flag["status"].get<std::string>();
                if (flag.contains("witness")) std::cout << ", witness " << flag["witness"].get<std::string>();
                if (flag.contains("note")) std::cout << " (" << flag["note"].get<std::string>() << ")";
                std::cout << "\n";
            }
            return kOk;
        }
    } catch (const Failure& f) {
        std::cerr << "ngcl: " << ngcl_status_name(f.status) << ": " << f.message << "\n";
        return exit_code(f.status);
    } catch (const std::exception& e) {
        std::cerr << "ngcl: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
