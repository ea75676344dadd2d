#ifndef NGCL_H
#define NGCL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define NGCL_VERSION "0.1.0"

#if defined(_WIN32)
#define NGCL_API __declspec(dllexport)
#else
#define NGCL_API __attribute__((visibility("default")))
#endif

typedef enum ngcl_status {
    NGCL_OK = 0,
    NGCL_ERR_PARSE = 1,
    NGCL_ERR_UNKNOWN_VARIABLE = 2,
    NGCL_ERR_STATE_CAP = 3,
    NGCL_ERR_RESOURCE = 4,
    NGCL_ERR_INVALID_ARGUMENT = 5,
    NGCL_ERR_ENGINE_MISMATCH = 6,
    NGCL_ERR_INTERNAL = 7
} ngcl_status;

typedef enum ngcl_engine { NGCL_ENGINE_ORACLE = 0, NGCL_ENGINE_INDUCTIVE = 1, NGCL_ENGINE_BOTH = 2 } ngcl_engine;

typedef struct ngcl_program ngcl_program;      /* program plus its state space */
typedef struct ngcl_predicate ngcl_predicate;  /* state set over a program's space */
typedef struct ngcl_report ngcl_report;        /* survey / counterexample results */

NGCL_API const char* ngcl_version(void);
NGCL_API const char* ngcl_status_name(ngcl_status s);
/* Message of the last failing call on this thread ("" if none). */
NGCL_API const char* ngcl_last_error(void);
/* Strings returned through char** out-parameters are owned by the caller. */
NGCL_API void ngcl_string_free(char* s);

/* ---- programs ---- */

/* Parses a program file. vars (comma separated) and modulus (> 0) override
   the header; pass NULL / 0 to use it. */
NGCL_API ngcl_status ngcl_program_parse(const char* text, const char* vars, int64_t modulus, ngcl_program** out);
NGCL_API void ngcl_program_free(ngcl_program* p);
NGCL_API ngcl_status ngcl_program_print(const ngcl_program* p, char** out);
NGCL_API ngcl_status ngcl_program_space(const ngcl_program* p, char** out); /* "vars x mod 3" */
NGCL_API size_t ngcl_program_state_count(const ngcl_program* p);
NGCL_API ngcl_status ngcl_program_render_state(const ngcl_program* p, uint32_t state, char** out);
NGCL_API ngcl_status ngcl_program_relation(const ngcl_program* p, char** out);
/* Small-step configuration graph in Graphviz syntax. */
NGCL_API ngcl_status ngcl_program_dot(const ngcl_program* p, char** out);

/* ---- predicates ---- */

/* A guard ("x = 1 || y < 2") or an explicit set ("{<x=0>, <x=1>}"). */
NGCL_API ngcl_status ngcl_predicate_parse(const ngcl_program* space_of, const char* text, ngcl_predicate** out);
NGCL_API void ngcl_predicate_free(ngcl_predicate* q);
NGCL_API ngcl_status ngcl_predicate_render(const ngcl_program* space_of, const ngcl_predicate* q, char** out);
NGCL_API size_t ngcl_predicate_count(const ngcl_predicate* q);
NGCL_API int ngcl_predicate_contains(const ngcl_predicate* q, uint32_t state);
NGCL_API int ngcl_predicate_equal(const ngcl_predicate* a, const ngcl_predicate* b);

/* ---- transformers and logics ---- */

/* kind: awp dwp awlp dwlp asp dsp aslp dslp. */
NGCL_API ngcl_status ngcl_transform(const ngcl_program* p, const char* kind, const ngcl_predicate* in,
                                    ngcl_engine engine, ngcl_predicate** out);
/* logic: an id ("dwpLB"), or an alias ("total-correctness"). *witness is a
   violating state, or -1. */
NGCL_API ngcl_status ngcl_check(const ngcl_program* p, const char* logic, const ngcl_predicate* pre,
                                const ngcl_predicate* post, int* holds, int64_t* witness);
/* JSON object {id, colloquial, condition, equation?}. */
NGCL_API ngcl_status ngcl_logic_info(const char* logic, char** out);
/* JSON object with the five assumption flags for (pre, post). */
NGCL_API ngcl_status ngcl_classify(const ngcl_program* p, const ngcl_predicate* pre, const ngcl_predicate* post,
                                   char** out);

/* ---- TopKAT ---- */

NGCL_API ngcl_status ngcl_equation_check(const ngcl_program* p, const char* id, const ngcl_predicate* pre,
                                         const ngcl_predicate* post, int* holds);
/* JSON object {equations: [{id, text}], links: [{from, via, to}]}. */
NGCL_API ngcl_status ngcl_equation_catalog(char** out);

/* ---- surveys and counterexamples ---- */

/* ids: comma separated theorem ids or "all". */
NGCL_API ngcl_status ngcl_survey(const char* ids, const char* corpus, uint64_t seed, int strict, int timings,
                                 ngcl_report** out);
/* budget 0 uses the default. */
NGCL_API ngcl_status ngcl_counterexample(const char* claim, size_t budget, int timings, ngcl_report** out);
/* Newline separated lists. */
NGCL_API ngcl_status ngcl_theorem_ids(char** out);
NGCL_API ngcl_status ngcl_claim_ids(char** out);
NGCL_API ngcl_status ngcl_corpus_names(char** out);

NGCL_API ngcl_status ngcl_report_set_command(ngcl_report* r, int argc, const char* const* argv);
NGCL_API ngcl_status ngcl_report_json(const ngcl_report* r, char** out);
NGCL_API ngcl_status ngcl_report_text(const ngcl_report* r, char** out);
NGCL_API ngcl_status ngcl_report_parse_json(const char* text, ngcl_report** out);
NGCL_API size_t ngcl_report_item_count(const ngcl_report* r);
/* 1 if every item holds (for counterexamples: a witness was found). */
NGCL_API int ngcl_report_all_hold(const ngcl_report* r);
NGCL_API int ngcl_report_equal(const ngcl_report* a, const ngcl_report* b);
NGCL_API void ngcl_report_free(ngcl_report* r);

#ifdef __cplusplus
}
#endif

#endif
