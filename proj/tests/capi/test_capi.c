#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "ngcl/ngcl.h"

static int failures = 0;

#define EXPECT(cond)                                                    \
    do {                                                                \
        if (!(cond)) {                                                  \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                 \
        }                                                               \
    } while (0)

static char* slurp(const char* dir, const char* name) {
    char path[1024];
    snprintf(path, sizeof path, "%s/%s", dir, name);
    FILE* f = fopen(path, "rb");
    if (!f) {
        fprintf(stderr, "cannot open %s\n", path);
        exit(2);
    }
    fseek(f, 0, SEEK_END);
    long n = ftell(f);
    fseek(f, 0, SEEK_SET);
    char* buf = malloc((size_t)n + 1);
    size_t got = fread(buf, 1, (size_t)n, f);
    buf[got] = '\0';
    fclose(f);
    return buf;
}

static ngcl_predicate* pred(const ngcl_program* p, const char* text) {
    ngcl_predicate* q = NULL;
    EXPECT(ngcl_predicate_parse(p, text, &q) == NGCL_OK);
    return q;
}

static void test_program(const char* dir) {
    char* text = slurp(dir, "choice01.ngcl");
    ngcl_program* p = NULL;
    EXPECT(ngcl_program_parse(text, NULL, 0, &p) == NGCL_OK);
    free(text);
    EXPECT(ngcl_program_state_count(p) == 3);

    char* s = NULL;
    EXPECT(ngcl_program_space(p, &s) == NGCL_OK);
    EXPECT(strcmp(s, "vars x mod 3") == 0);
    ngcl_string_free(s);
    EXPECT(ngcl_program_print(p, &s) == NGCL_OK);
    EXPECT(strcmp(s, "{ x := 0 } [] { x := 1 }") == 0);
    ngcl_string_free(s);
    EXPECT(ngcl_program_render_state(p, 2, &s) == NGCL_OK);
    EXPECT(strcmp(s, "<x=2>") == 0);
    ngcl_string_free(s);
    EXPECT(ngcl_program_render_state(p, 9, &s) == NGCL_ERR_INVALID_ARGUMENT);
    EXPECT(ngcl_program_dot(p, &s) == NGCL_OK);
    EXPECT(strncmp(s, "digraph", 7) == 0);
    ngcl_string_free(s);

    ngcl_predicate* c = pred(p, "x = 0");
    ngcl_predicate* out = NULL;
    EXPECT(ngcl_transform(p, "awp", c, NGCL_ENGINE_BOTH, &out) == NGCL_OK);
    EXPECT(ngcl_predicate_count(out) == 3);
    ngcl_predicate_free(out);
    EXPECT(ngcl_transform(p, "dwp", c, NGCL_ENGINE_BOTH, &out) == NGCL_OK);
    EXPECT(ngcl_predicate_count(out) == 0);
    ngcl_predicate_free(out);
    EXPECT(ngcl_transform(p, "asp", c, NGCL_ENGINE_ORACLE, &out) == NGCL_OK);
    EXPECT(ngcl_predicate_contains(out, 0) && ngcl_predicate_contains(out, 1) && !ngcl_predicate_contains(out, 2));
    EXPECT(ngcl_predicate_render(p, out, &s) == NGCL_OK);
    EXPECT(strcmp(s, "{<x=0>, <x=1>}") == 0);
    ngcl_string_free(s);
    ngcl_predicate* again = pred(p, "{<x=0>, <x=1>}");
    EXPECT(ngcl_predicate_equal(out, again));
    ngcl_predicate_free(again);
    ngcl_predicate_free(out);
    EXPECT(ngcl_transform(p, "wp", c, NGCL_ENGINE_ORACLE, &out) == NGCL_ERR_INVALID_ARGUMENT);
    EXPECT(strstr(ngcl_last_error(), "wp") != NULL);

    ngcl_predicate* all = pred(p, "true");
    int holds = -1;
    int64_t w = 0;
    EXPECT(ngcl_check(p, "lisbon", all, c, &holds, &w) == NGCL_OK);
    EXPECT(holds == 1 && w == -1);
    EXPECT(ngcl_check(p, "total-correctness", all, c, &holds, &w) == NGCL_OK);
    EXPECT(holds == 0 && w == 0);
    EXPECT(ngcl_check(p, "no-such-logic", all, c, &holds, &w) == NGCL_ERR_INVALID_ARGUMENT);

    EXPECT(ngcl_classify(p, all, all, &s) == NGCL_OK);
    EXPECT(strstr(s, "\"determinism\"") != NULL);
    ngcl_string_free(s);
    EXPECT(ngcl_equation_check(p, "LISBON", all, c, &holds) == NGCL_OK);
    EXPECT(holds == 1);

    ngcl_predicate_free(all);
    ngcl_predicate_free(c);
    ngcl_program_free(p);
}

static void test_errors(void) {
    ngcl_program* p = NULL;
    EXPECT(ngcl_program_parse("vars x mod 2\nx := ", NULL, 0, &p) == NGCL_ERR_PARSE);
    EXPECT(p == NULL);
    EXPECT(strstr(ngcl_last_error(), "2:") != NULL);
    EXPECT(ngcl_program_parse("vars x mod 2\ny := 0", NULL, 0, &p) == NGCL_ERR_UNKNOWN_VARIABLE);
    EXPECT(ngcl_program_parse("x := 0", "x,y,z,w,v", 100, &p) == NGCL_ERR_STATE_CAP);
    EXPECT(ngcl_program_parse("x := 0", "x", 2, &p) == NGCL_OK);
    EXPECT(ngcl_program_state_count(p) == 2);
    ngcl_program_free(p);
    EXPECT(strcmp(ngcl_status_name(NGCL_ERR_ENGINE_MISMATCH), "engine mismatch") == 0);
    EXPECT(strcmp(ngcl_version(), NGCL_VERSION) == 0);
}

static void test_reports(void) {
    ngcl_report* r = NULL;
    EXPECT(ngcl_survey("ORDERING,MAY_TERMINATION", "tiny", 7, 0, 0, &r) == NGCL_OK);
    EXPECT(ngcl_report_item_count(r) == 2);
    EXPECT(!ngcl_report_all_hold(r));
    const char* argv[] = {"survey", "--corpus", "tiny"};
    EXPECT(ngcl_report_set_command(r, 3, argv) == NGCL_OK);

    char* json = NULL;
    EXPECT(ngcl_report_json(r, &json) == NGCL_OK);
    EXPECT(strstr(json, "\"duration_ms\"") == NULL);
    ngcl_report* back = NULL;
    EXPECT(ngcl_report_parse_json(json, &back) == NGCL_OK);
    EXPECT(ngcl_report_equal(r, back));
    char* json2 = NULL;
    EXPECT(ngcl_report_json(back, &json2) == NGCL_OK);
    EXPECT(strcmp(json, json2) == 0);
    ngcl_string_free(json);
    ngcl_string_free(json2);
    ngcl_report_free(back);
    ngcl_report_free(r);

    EXPECT(ngcl_report_parse_json("not json", &back) == NGCL_ERR_INVALID_ARGUMENT);
    EXPECT(ngcl_survey("NO_SUCH_THEOREM", "tiny", 7, 0, 0, &r) == NGCL_ERR_INVALID_ARGUMENT);

    EXPECT(ngcl_counterexample("dwp-neq-intersection", 0, 1, &r) == NGCL_OK);
    EXPECT(ngcl_report_all_hold(r));
    EXPECT(ngcl_report_text(r, &json) == NGCL_OK);
    EXPECT(strstr(json, "found") != NULL);
    ngcl_string_free(json);
    EXPECT(ngcl_report_json(r, &json) == NGCL_OK);
    EXPECT(strstr(json, "\"duration_ms\"") != NULL);
    ngcl_string_free(json);
    ngcl_report_free(r);

    char* list = NULL;
    EXPECT(ngcl_theorem_ids(&list) == NGCL_OK);
    EXPECT(strstr(list, "GALOIS_PC\n") != NULL);
    ngcl_string_free(list);
    EXPECT(ngcl_claim_ids(&list) == NGCL_OK);
    EXPECT(strstr(list, "pair:awlpLB-vs-aslpLB-contra") != NULL);
    ngcl_string_free(list);
    EXPECT(ngcl_corpus_names(&list) == NGCL_OK);
    EXPECT(strstr(list, "small-exhaustive") != NULL);
    ngcl_string_free(list);
    EXPECT(ngcl_equation_catalog(&list) == NGCL_OK);
    EXPECT(strstr(list, "\"links\"") != NULL);
    ngcl_string_free(list);
    EXPECT(ngcl_logic_info("hoare", &list) == NGCL_OK);
    EXPECT(strstr(list, "dwlpLB") != NULL);
    ngcl_string_free(list);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        fprintf(stderr, "usage: %s DATA_DIR\n", argv[0]);
        return 2;
    }
    test_program(argv[1]);
    test_errors();
    test_reports();
    if (failures) {
        fprintf(stderr, "%d failure(s)\n", failures);
        return 1;
    }
    printf("C API: all checks passed\n");
    return 0;
}
