#pragma once

// Shared fixtures: the algebras and Borel subalgebras exercised across the
// test suites. Builders are memoized so cross-referencing fixtures share
// pointer-identical algebras.

#include "constructions.hpp"
#include "presentation.hpp"

#include <map>

namespace qhlab::corpus {

// quiver 1 <=> 2 with alpha: 1->2, beta: 2->1 and relation alpha.beta = 0
// (first traverse beta, then alpha); dim 5, basis {e1, e2, a, b, b*a}.
inline const BoundQuiverAlgebra& cyc2() {
    static BoundQuiverAlgebra cached = [] {
        PresentationSpec spec;
        spec.quiver.n_vertices = 2;
        spec.quiver.arrows = {{"a", 1, 2}, {"b", 2, 1}};
        Path ab;  // traverse b then a: starts at 2, ends at 2
        ab.source = 2;
        ab.target = 2;
        ab.arrows = {1, 0};
        spec.relations = {{{rat(1), ab}}};
        spec.degree_bound = 3;
        return bound_quiver_algebra(spec, "A");
    }();
    return cached;
}

// Borel span{e1, e2, a} of the base example.
inline Embedding cyc2_borel(const BoundQuiverAlgebra& a) {
    std::vector<Vec> basis;
    std::vector<Idempotent> idems;
    for (size_t k = 0; k < a.basis_paths.size(); ++k) {
        const Path& p = a.basis_paths[k];
        if (p.is_trivial()) {
            basis.push_back(vec_unit(a.algebra->dim, (int)k));
            idems.push_back({basis.back(), p.source - 1});
        }
    }
    for (size_t k = 0; k < a.basis_paths.size(); ++k)
        if (a.basis_paths[k].length() == 1 &&
            a.spec.quiver.arrows[a.basis_paths[k].arrows[0]].label == "a")
            basis.push_back(vec_unit(a.algebra->dim, (int)k));
    AlgebraPtr b = subalgebra(a.algebra, basis, idems, {"1", "2"}, "B");
    return Embedding{b, a.algebra, Matrix::from_cols(basis)};
}

inline const BoundQuiverAlgebra& a2_path() {  // 1 -> 2
    static BoundQuiverAlgebra cached = [] {
        Quiver q;
        q.n_vertices = 2;
        q.arrows = {{"a", 1, 2}};
        return path_algebra(q, "A2");
    }();
    return cached;
}

inline const BoundQuiverAlgebra& a2_path_desc() {  // 2 -> 1
    static BoundQuiverAlgebra cached = [] {
        Quiver q;
        q.n_vertices = 2;
        q.arrows = {{"a", 2, 1}};
        return path_algebra(q, "A2v");
    }();
    return cached;
}

inline const BoundQuiverAlgebra& a3_path() {  // 1 -> 2 -> 3
    static BoundQuiverAlgebra cached = [] {
        Quiver q;
        q.n_vertices = 3;
        q.arrows = {{"a", 1, 2}, {"b", 2, 3}};
        return path_algebra(q, "A3");
    }();
    return cached;
}

inline const BoundQuiverAlgebra& semisimple(int n) {
    static std::map<int, BoundQuiverAlgebra> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        Quiver q;
        q.n_vertices = n;
        it = cache.emplace(n, path_algebra(q, "k^" + std::to_string(n))).first;
    }
    return it->second;
}

// local non-semisimple algebra k[x]/(x^2): loop with x^2 = 0
inline const BoundQuiverAlgebra& dual_numbers() {
    static BoundQuiverAlgebra cached = [] {
        PresentationSpec spec;
        spec.quiver.n_vertices = 1;
        spec.quiver.arrows = {{"x", 1, 1}};
        Path xx;
        xx.source = xx.target = 1;
        xx.arrows = {0, 0};
        spec.relations = {{{rat(1), xx}}};
        spec.degree_bound = 2;
        return bound_quiver_algebra(spec, "k[x]/x2");
    }();
    return cached;
}

// the diamond quiver: 4->1, 4->2, 1->3, 2->3
inline const BoundQuiverAlgebra& diamond_path() {
    static BoundQuiverAlgebra cached = [] {
        Quiver q;
        q.n_vertices = 4;
        q.arrows = {{"a", 4, 1}, {"b", 4, 2}, {"c", 1, 3}, {"d", 2, 3}};
        return path_algebra(q, "Diamond");
    }();
    return cached;
}

inline Embedding identity_borel(const AlgebraPtr& a) { return identity_embedding(a); }

// the semisimple subalgebra spanned by the trivial paths of a bound quiver
// algebra (an exact Borel precisely when all standards are projective)
inline Embedding vertex_span_embedding(const BoundQuiverAlgebra& a) {
    std::vector<Vec> basis;
    std::vector<Idempotent> idems;
    std::vector<std::string> labels;
    for (size_t k = 0; k < a.basis_paths.size(); ++k) {
        const Path& p = a.basis_paths[k];
        if (!p.is_trivial()) continue;
        basis.push_back(vec_unit(a.algebra->dim, (int)k));
        idems.push_back({basis.back(), (int)labels.size()});
        labels.push_back(std::to_string(p.source));
    }
    AlgebraPtr b = subalgebra(a.algebra, basis, idems, labels, a.algebra->name + ".ss");
    return Embedding{b, a.algebra, Matrix::from_cols(basis)};
}

}  // namespace qhlab::corpus
