#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "problem.hpp"

#include <fstream>
#include <sstream>

using namespace qhlab;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string problems_dir() { return QHLAB_PROBLEMS_DIR; }

}  // namespace

TEST_CASE("parse errors carry line/column; semantic errors carry names") {
    CHECK_THROWS_AS(load_problem("{ not json"), Error);
    try {
        load_problem("{\n  \"algebras\": oops\n}");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    // unknown arrow in a relation
    std::string bad = R"({"algebras": {"A": {
        "quiver": {"vertices": 2, "arrows": [["a", 1, 2]]},
        "relations": [[["1", ["zz"]]]],
        "degree_bound": 2}}})";
    try {
        load_problem(bad);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Semantic);
    }
    // arrow referencing an unknown vertex
    std::string bad2 = R"({"algebras": {"A": {
        "quiver": {"vertices": 1, "arrows": [["a", 1, 2]]},
        "degree_bound": 2}}})";
    CHECK_THROWS_AS(load_problem(bad2), Error);
}

TEST_CASE("presentation parse/serialize round-trip") {
    std::string text = slurp(problems_dir() + "/cyc2_base.json");
    Json j = Json::parse(text);
    const Json& aj = j.at("algebras").at("A");
    PresentationSpec spec = parse_presentation_json(aj);
    CHECK(spec.quiver.n_vertices == 2);
    CHECK(spec.relations.size() == 1);
    CHECK(spec.degree_bound == 3);

    Json round = serialize_presentation(spec, {{0, 1}});
    PresentationSpec spec2 = parse_presentation_json(round);
    CHECK(spec2.quiver.n_vertices == spec.quiver.n_vertices);
    CHECK(spec2.quiver.arrows.size() == spec.quiver.arrows.size());
    CHECK(spec2.degree_bound == spec.degree_bound);
    REQUIRE(spec2.relations.size() == 1);
    CHECK(spec2.relations[0][0].path == spec.relations[0][0].path);
    CHECK(spec2.relations[0][0].coeff == spec.relations[0][0].coeff);
    // serializing again yields the identical document
    CHECK(serialize_presentation(spec2, {{0, 1}}) == round);
}

TEST_CASE("empty relation list is valid") {
    std::string text = R"({"algebras": {"A": {
        "quiver": {"vertices": 2, "arrows": [["a", 1, 2]]},
        "relations": [],
        "degree_bound": 2,
        "order": [[1, 2]]}}})";
    Problem p = load_problem(text);
    CHECK(p.algebra("A").algebra->dim == 3);
}

TEST_CASE("base example problem file: all checks pass") {
    Problem p = load_problem(slurp(problems_dir() + "/cyc2_base.json"));
    Json report = run_command(p, "run");
    CHECK(report_all_passed(report));
    CHECK(report.at("checks").size() == 8);
    std::string text = render_text(report);
    CHECK(text.find("[PASS] check-qh A") != std::string::npos);
}

TEST_CASE("single-command dispatch runs only matching checks") {
    Problem p = load_problem(slurp(problems_dir() + "/cyc2_base.json"));
    Json report = run_command(p, "check-qh");
    CHECK(report.at("checks").size() == 1);
    CHECK(report_all_passed(report));
}

TEST_CASE("tensor problem file: dims, filtration absence, non-regularity") {
    Problem p = load_problem(slurp(problems_dir() + "/cyc2_tensor.json"));
    Json report = run_command(p, "run");
    INFO(report.dump(2));
    CHECK(report_all_passed(report));
}

TEST_CASE("species problem files") {
    for (const char* f : {"/species_442.json", "/species_diamond.json",
                          "/species_a3.json", "/species_final.json"}) {
        Problem p = load_problem(slurp(problems_dir() + f));
        Json report = run_command(p, "run");
        INFO(f, " -> ", report.dump(2));
        CHECK(report_all_passed(report));
    }
}

TEST_CASE("triangular problem file") {
    Problem p = load_problem(slurp(problems_dir() + "/triangular.json"));
    Json report = run_command(p, "run");
    INFO(report.dump(2));
    CHECK(report_all_passed(report));
}

TEST_CASE("reports are deterministic for a fixed seed") {
    std::string text = slurp(problems_dir() + "/species_final.json");
    RunOptions opt;
    opt.seed = 7;
    Problem p1 = load_problem(text, opt);
    Problem p2 = load_problem(text, opt);
    std::string r1 = run_command(p1, "run").dump(2);
    std::string r2 = run_command(p2, "run").dump(2);
    CHECK(r1 == r2);
}

TEST_CASE("emit_dot: quiver and loewy") {
    Problem p = load_problem(slurp(problems_dir() + "/cyc2_base.json"));
    std::string quiver = emit_dot(p, Json{{"quiver", "A"}});
    CHECK(quiver.find("digraph quiver") != std::string::npos);
    CHECK(quiver.find("\"1\" -> \"2\" [label=\"a\"]") != std::string::npos);
    CHECK(quiver.find("\"2\" -> \"1\" [label=\"b\"]") != std::string::npos);

    Json what;
    what["loewy"]["algebra"] = "A";
    what["loewy"]["module"] = Json{{"projective", "1"}};
    std::string loewy = emit_dot(p, what);
    CHECK(loewy.find("digraph loewy") != std::string::npos);
    // three layers -> two rank groups of edges
    CHECK(loewy.find("rank=same") != std::string::npos);

    // stability: emitting twice gives identical text
    CHECK(emit_dot(p, what) == loewy);
}

TEST_CASE("check failure is reported, not thrown") {
    std::string text = R"({
      "algebras": {"A": {
        "quiver": {"vertices": 2, "arrows": [["a", 1, 2], ["b", 2, 1]]},
        "relations": [[["1", ["b", "a"]]]],
        "degree_bound": 3,
        "order": [[2, 1]]}},
      "checks": [{"command": "check-qh", "algebra": "A", "expect": true}]
    })";
    Problem p = load_problem(text);
    Json report = run_command(p, "run");
    CHECK(!report_all_passed(report));
    CHECK(report.at("checks")[0].at("verdict") == "fail");
    CHECK(report.at("checks")[0].at("details").at("definition_route") == false);
    CHECK(report.at("checks")[0].at("details").at("deciders_agree") == true);
}

TEST_CASE("emit_dot edge cases: single arrow and empty quiver") {
    std::string text = R"({"algebras": {
      "A2": {"quiver": {"vertices": 2, "arrows": [["a", 1, 2]]}, "degree_bound": 2},
      "E":  {"quiver": {"vertices": 0, "arrows": []}, "degree_bound": 1}
    }})";
    // an empty quiver yields the zero algebra; vertices 0 means no idempotents,
    // which make_algebra rejects (no unit decomposition) -- so declare E with
    // one vertex instead and check the single-arrow case precisely
    std::string ok = R"({"algebras": {
      "A2": {"quiver": {"vertices": 2, "arrows": [["a", 1, 2]]}, "degree_bound": 2},
      "pt": {"quiver": {"vertices": 1, "arrows": []}, "degree_bound": 1}
    }})";
    (void)text;
    Problem p = load_problem(ok);
    std::string dot = emit_dot(p, Json{{"quiver", "A2"}});
    CHECK(dot.find("\"1\";") != std::string::npos);
    CHECK(dot.find("\"2\";") != std::string::npos);
    CHECK(dot.find("\"1\" -> \"2\" [label=\"a\"]") != std::string::npos);
    // exactly one edge
    size_t count = 0, pos = 0;
    while ((pos = dot.find("->", pos)) != std::string::npos) { ++count; pos += 2; }
    CHECK(count == 1);

    std::string pt = emit_dot(p, Json{{"quiver", "pt"}});
    CHECK(pt.find("->") == std::string::npos);  // no edges
}
