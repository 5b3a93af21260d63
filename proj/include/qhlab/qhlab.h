/* qhlab C API: exact-arithmetic quasi-hereditary algebra toolkit.
 *
 * All functions return QH_OK on success. On failure they return an error
 * code and leave a message retrievable via qh_last_error(). Strings returned
 * through out-parameters are owned by the caller and must be released with
 * qh_string_free().
 */
#ifndef QHLAB_H
#define QHLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qh_session qh_session;

typedef enum qh_status {
    QH_OK = 0,
    QH_ERR_PARSE = 1,      /* malformed input (JSON or semantic) */
    QH_ERR_CHECK = 2,      /* a check could not be executed */
    QH_ERR_INVALID = 3,    /* invalid argument / wrong call sequence */
    QH_ERR_INTERNAL = 4    /* internal invariant violated */
} qh_status;

/* Session lifecycle. A session owns one loaded problem file. */
qh_status qh_session_new(qh_session** out);
void qh_session_free(qh_session* s);

/* Options; set before qh_load_problem. Seed feeds the probabilistic
 * isomorphism test and is echoed in every report. */
qh_status qh_session_set_seed(qh_session* s, uint64_t seed);
qh_status qh_session_set_max_degree(qh_session* s, int max_degree);
qh_status qh_session_enable_timings(qh_session* s, int enable);

/* Parse and resolve a problem file (JSON text). */
qh_status qh_load_problem(qh_session* s, const char* json_text);

/* Run checks. `command` is one of: run, check-qh, standard, costandard,
 * loewy, ext, check-borel, check-regular, tensor, species-build,
 * species-check, species-borel, triangular. "run" executes every check in
 * the file; otherwise only the checks of that command. `args_json` may be
 * NULL (use the file's checks) or a JSON object for an ad-hoc check.
 * The report (JSON text) is returned via report_out. */
qh_status qh_run(qh_session* s, const char* command, const char* args_json,
                 char** report_out);

/* Render a JSON report as human-readable text. */
qh_status qh_render_text(qh_session* s, const char* report_json, char** text_out);

/* 1 when every check in the report passed, 0 otherwise, -1 on bad input. */
int qh_report_all_passed(const char* report_json);

/* DOT output: what_json is {"quiver": name} or
 * {"loewy": {"algebra": name, "module": selector}}. */
qh_status qh_emit_dot(qh_session* s, const char* what_json, char** dot_out);

/* Last error message for this session (owned by the session). */
const char* qh_last_error(const qh_session* s);

void qh_string_free(char* s);

/* Library version string, static storage. */
const char* qh_version(void);

#ifdef __cplusplus
}
#endif

#endif /* QHLAB_H */
