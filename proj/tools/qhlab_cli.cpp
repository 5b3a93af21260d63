// qhlab command line front end. Talks to the core exclusively through the
// shared-library C API.
//
//   qhlab <command> <file.json> [--seed N] [--max-degree N]
//         [--format text|json|dot] [--timings] [--dot-what JSON]
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 input error.

#include <qhlab/qhlab.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

const char* kCommands[] = {"run",          "check-qh",      "standard",      "costandard",
                           "loewy",        "ext",           "check-borel",   "check-regular",
                           "tensor",       "species-build", "species-check", "species-borel",
                           "triangular"};

void usage() {
    std::cerr << "usage: qhlab <command> <file.json> [--seed N] [--max-degree N]\n"
                 "             [--format text|json|dot] [--timings] [--dot-what JSON]\n"
                 "commands:";
    for (const char* c : kCommands) std::cerr << " " << c;
    std::cerr << "\n";
}

struct Cleanup {
    qh_session* s = nullptr;
    ~Cleanup() { qh_session_free(s); }
};

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        usage();
        return 2;
    }
    std::string command = argv[1];
    bool known = false;
    for (const char* c : kCommands) known |= command == c;
    if (!known) {
        std::cerr << "unknown command: " << command << "\n";
        usage();
        return 2;
    }
    std::string file = argv[2];
    uint64_t seed = 0;
    int max_degree = 0;
    std::string format = "text";
    std::string dot_what;
    bool timings = false;
    for (int i = 3; i < argc; ++i) {
        std::string a = argv[i];
        auto next = [&]() -> std::string {
            if (i + 1 >= argc) {
                usage();
                exit(2);
            }
            return argv[++i];
        };
        if (a == "--seed") seed = std::stoull(next());
        else if (a == "--max-degree") max_degree = std::stoi(next());
        else if (a == "--format") format = next();
        else if (a == "--dot-what") dot_what = next();
        else if (a == "--timings") timings = true;
        else {
            std::cerr << "unknown option " << a << "\n";
            usage();
            return 2;
        }
    }

    std::ifstream in(file);
    if (!in) {
        std::cerr << "cannot open " << file << "\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();

    Cleanup cleanup;
    if (qh_session_new(&cleanup.s) != QH_OK) {
        std::cerr << "session allocation failed\n";
        return 2;
    }
    qh_session* s = cleanup.s;
    qh_session_set_seed(s, seed);
    qh_session_set_max_degree(s, max_degree);
    qh_session_enable_timings(s, timings ? 1 : 0);

    if (qh_load_problem(s, text.c_str()) != QH_OK) {
        std::cerr << "input error: " << qh_last_error(s) << "\n";
        return 2;
    }

    if (format == "dot") {
        // default: draw the quiver of the first declared algebra
        std::string what = dot_what;
        if (what.empty()) {
            std::cerr << "--format dot needs --dot-what, e.g. '{\"quiver\":\"A\"}'\n";
            return 2;
        }
        char* dot = nullptr;
        if (qh_emit_dot(s, what.c_str(), &dot) != QH_OK) {
            std::cerr << "input error: " << qh_last_error(s) << "\n";
            return 2;
        }
        std::cout << dot;
        qh_string_free(dot);
        return 0;
    }

    char* report = nullptr;
    qh_status st = qh_run(s, command.c_str(), nullptr, &report);
    if (st != QH_OK) {
        std::cerr << "input error: " << qh_last_error(s) << "\n";
        return 2;
    }
    int all = qh_report_all_passed(report);
    if (format == "json") {
        std::cout << report;
    } else {
        char* txt = nullptr;
        if (qh_render_text(s, report, &txt) == QH_OK) {
            std::cout << txt;
            qh_string_free(txt);
        }
    }
    qh_string_free(report);
    return all == 1 ? 0 : 1;
}
