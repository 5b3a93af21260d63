#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"

using namespace qhlab;

TEST_CASE("path enumeration: A2, the 1<=>2 quiver, the diamond") {
    Quiver a2;
    a2.n_vertices = 2;
    a2.arrows = {{"a", 1, 2}};
    auto p = enumerate_paths(a2, 5);
    CHECK(p.size() == 3);  // e1, e2, a

    Quiver cyc2;
    cyc2.n_vertices = 2;
    cyc2.arrows = {{"a", 1, 2}, {"b", 2, 1}};
    auto p2 = enumerate_paths(cyc2, 2);
    CHECK(p2.size() == 6);  // e1, e2, a, b, ab, ba

    Quiver diamond;
    diamond.n_vertices = 4;
    diamond.arrows = {{"a", 4, 1}, {"b", 4, 2}, {"c", 1, 3}, {"d", 2, 3}};
    auto p3 = enumerate_paths(diamond, 2);
    CHECK(p3.size() == 10);  // 4 trivial + 4 arrows + ca, db
}

TEST_CASE("path count is monotone and stabilizes iff acyclic") {
    Quiver acyc;
    acyc.n_vertices = 3;
    acyc.arrows = {{"a", 1, 2}, {"b", 2, 3}};
    size_t prev = 0;
    for (int len = 0; len <= 5; ++len) {
        size_t cnt = enumerate_paths(acyc, len).size();
        CHECK(cnt >= prev);
        prev = cnt;
    }
    CHECK(enumerate_paths(acyc, 3).size() == enumerate_paths(acyc, 10).size());
    CHECK(acyc.is_acyclic());

    Quiver cyc;
    cyc.n_vertices = 2;
    cyc.arrows = {{"a", 1, 2}, {"b", 2, 1}};
    CHECK(!cyc.is_acyclic());
    CHECK(enumerate_paths(cyc, 4).size() < enumerate_paths(cyc, 5).size());
}

TEST_CASE("base example: dim 5, basis paths, idempotents") {
    auto a = corpus::cyc2();
    CHECK(a.algebra->dim == 5);
    // basis {e1, e2, a, b, ba}; the killed path is ab (2->2)
    int trivial = 0, len1 = 0, len2 = 0;
    for (const auto& p : a.basis_paths) {
        if (p.length() == 0) ++trivial;
        if (p.length() == 1) ++len1;
        if (p.length() == 2) {
            ++len2;
            CHECK(p.source == 1);
            CHECK(p.target == 1);
        }
    }
    CHECK(trivial == 2);
    CHECK(len1 == 2);
    CHECK(len2 == 1);
    CHECK(a.algebra->idems.size() == 2);
}

TEST_CASE("A2 with no relations has dim 3, diamond has dim 10") {
    CHECK(corpus::a2_path().algebra->dim == 3);
    CHECK(corpus::diamond_path().algebra->dim == 10);
}

TEST_CASE("truncation certificate rejects a too-small degree bound") {
    PresentationSpec spec;
    spec.quiver.n_vertices = 2;
    spec.quiver.arrows = {{"a", 1, 2}, {"b", 2, 1}};
    Path ab;
    ab.source = 2;
    ab.target = 2;
    ab.arrows = {1, 0};
    spec.relations = {{{rat(1), ab}}};
    spec.degree_bound = 2;  // ba survives at length 2
    CHECK_THROWS_AS(bound_quiver_algebra(spec), Error);
    try {
        bound_quiver_algebra(spec);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TruncationNotSaturated);
    }
}

TEST_CASE("non-parallel relation rejected") {
    PresentationSpec spec;
    spec.quiver.n_vertices = 2;
    spec.quiver.arrows = {{"a", 1, 2}, {"b", 2, 1}};
    Path pa = trivial_path(1);
    pa.arrows = {0};
    pa.target = 2;
    Path pb = trivial_path(2);
    pb.arrows = {1};
    pb.target = 1;
    spec.relations = {{{rat(1), pa}, {rat(-1), pb}}};
    spec.degree_bound = 3;
    try {
        bound_quiver_algebra(spec);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidRelation);
    }
}

TEST_CASE("dual numbers: loop with x^2 = 0") {
    auto a = corpus::dual_numbers();
    CHECK(a.algebra->dim == 2);
    CHECK(radical(*a.algebra).dim() == 1);
}

TEST_CASE("base example multiplication: ab = 0, ba != 0") {
    auto a = corpus::cyc2();
    int ia = -1, ib = -1, iba = -1;
    for (size_t k = 0; k < a.basis_paths.size(); ++k) {
        const Path& p = a.basis_paths[k];
        if (p.length() == 1 && a.spec.quiver.arrows[p.arrows[0]].label == "a") ia = (int)k;
        if (p.length() == 1 && a.spec.quiver.arrows[p.arrows[0]].label == "b") ib = (int)k;
        if (p.length() == 2) iba = (int)k;
    }
    REQUIRE(ia >= 0);
    REQUIRE(ib >= 0);
    REQUIRE(iba >= 0);
    const Algebra& A = *a.algebra;
    // a * b traverses b then a: the killed relation
    CHECK(vec_is_zero(A.mul(vec_unit(5, ia), vec_unit(5, ib))));
    // b * a traverses a then b: the surviving length-2 path
    CHECK(A.mul(vec_unit(5, ib), vec_unit(5, ia)) == vec_unit(5, iba));
}
