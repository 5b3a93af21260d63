#include "qhlab/qhlab.h"

#include "problem.hpp"

#include <cstring>
#include <string>

using namespace qhlab;

struct qh_session {
    RunOptions options;
    std::optional<Problem> problem;
    std::string last_error;
};

namespace {

char* copy_string(const std::string& s) {
    char* out = (char*)malloc(s.size() + 1);
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qh_status status_of(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse:
        case ErrorKind::Semantic:
            return QH_ERR_PARSE;
        case ErrorKind::Internal:
            return QH_ERR_INTERNAL;
        default:
            return QH_ERR_CHECK;
    }
}

template <typename F>
qh_status guarded(qh_session* s, F&& f) {
    if (!s) return QH_ERR_INVALID;
    try {
        s->last_error.clear();
        return f();
    } catch (const Error& e) {
        s->last_error = std::string(Error::kind_name(e.kind())) + ": " + e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        s->last_error = e.what();
        return QH_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

qh_status qh_session_new(qh_session** out) {
    if (!out) return QH_ERR_INVALID;
    *out = new (std::nothrow) qh_session();
    return *out ? QH_OK : QH_ERR_INTERNAL;
}

void qh_session_free(qh_session* s) { delete s; }

qh_status qh_session_set_seed(qh_session* s, uint64_t seed) {
    if (!s) return QH_ERR_INVALID;
    s->options.seed = seed;
    if (s->problem) s->problem->options.seed = seed;
    return QH_OK;
}

qh_status qh_session_set_max_degree(qh_session* s, int max_degree) {
    if (!s) return QH_ERR_INVALID;
    s->options.max_degree = max_degree;
    if (s->problem) s->problem->options.max_degree = max_degree;
    return QH_OK;
}

qh_status qh_session_enable_timings(qh_session* s, int enable) {
    if (!s) return QH_ERR_INVALID;
    s->options.timings = enable != 0;
    if (s->problem) s->problem->options.timings = enable != 0;
    return QH_OK;
}

qh_status qh_load_problem(qh_session* s, const char* json_text) {
    if (!json_text) return QH_ERR_INVALID;
    return guarded(s, [&]() {
        s->problem = load_problem(json_text, s->options);
        return QH_OK;
    });
}

qh_status qh_run(qh_session* s, const char* command, const char* args_json,
                 char** report_out) {
    if (!command || !report_out) return QH_ERR_INVALID;
    return guarded(s, [&]() {
        if (!s->problem) {
            s->last_error = "no problem loaded";
            return QH_ERR_INVALID;
        }
        Json args;
        if (args_json && *args_json) args = Json::parse(args_json);
        Json report = run_command(*s->problem, command, args);
        *report_out = copy_string(report.dump(2) + "\n");
        return QH_OK;
    });
}

qh_status qh_render_text(qh_session* s, const char* report_json, char** text_out) {
    if (!report_json || !text_out) return QH_ERR_INVALID;
    return guarded(s, [&]() {
        Json report = Json::parse(report_json);
        *text_out = copy_string(render_text(report));
        return QH_OK;
    });
}

int qh_report_all_passed(const char* report_json) {
    if (!report_json) return -1;
    try {
        Json report = Json::parse(report_json);
        return report_all_passed(report) ? 1 : 0;
    } catch (...) {
        return -1;
    }
}

qh_status qh_emit_dot(qh_session* s, const char* what_json, char** dot_out) {
    if (!what_json || !dot_out) return QH_ERR_INVALID;
    return guarded(s, [&]() {
        if (!s->problem) {
            s->last_error = "no problem loaded";
            return QH_ERR_INVALID;
        }
        Json what = Json::parse(what_json);
        *dot_out = copy_string(emit_dot(*s->problem, what));
        return QH_OK;
    });
}

const char* qh_last_error(const qh_session* s) {
    return s ? s->last_error.c_str() : "null session";
}

void qh_string_free(char* s) { free(s); }

const char* qh_version(void) { return "qhlab 1.0.0"; }

}  // extern "C"
