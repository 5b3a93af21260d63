#include "presentation.hpp"

#include <algorithm>
#include <map>

namespace qhlab {

void validate_relation(const Quiver& q, const Relation& r) {
    if (r.empty()) fail(ErrorKind::InvalidRelation, "empty relation");
    bool has_nonzero = false;
    for (const auto& term : r) {
        if (sgn(term.coeff) != 0) has_nonzero = true;
        if (term.path.is_trivial())
            fail(ErrorKind::InvalidRelation, "relation contains a trivial path");
        for (int ai : term.path.arrows)
            if (ai < 0 || ai >= (int)q.arrows.size())
                fail(ErrorKind::InvalidRelation, "relation references unknown arrow");
        if (term.path.source != r[0].path.source || term.path.target != r[0].path.target)
            fail(ErrorKind::InvalidRelation,
                 "relation terms are not parallel: " + path_to_string(q, term.path) +
                     " vs " + path_to_string(q, r[0].path));
    }
    if (!has_nonzero) fail(ErrorKind::InvalidRelation, "relation has no nonzero coefficient");
}

BoundQuiverAlgebra bound_quiver_algebra(const PresentationSpec& spec, const std::string& name) {
    const Quiver& q = spec.quiver;
    q.validate();
    if (spec.degree_bound < 1) fail(ErrorKind::Semantic, "degree bound must be >= 1");
    for (const auto& r : spec.relations) validate_relation(q, r);

    int d = spec.degree_bound;
    std::vector<Path> paths = enumerate_paths(q, d);
    int n = (int)paths.size();
    std::map<std::vector<int>, int> index_of;  // key: (source, arrows...)
    for (int k = 0; k < n; ++k) {
        std::vector<int> key{paths[k].source};
        key.insert(key.end(), paths[k].arrows.begin(), paths[k].arrows.end());
        index_of[key] = k;
    }
    auto lookup = [&](const Path& p) -> int {
        if (p.length() > d) return -1;  // truncated away (lives in J^{d+1})
        std::vector<int> key{p.source};
        key.insert(key.end(), p.arrows.begin(), p.arrows.end());
        auto it = index_of.find(key);
        return it == index_of.end() ? -1 : it->second;
    };

    // relation vectors in the truncated path space
    auto relation_vec = [&](const Relation& r) {
        Vec v = vec_zero(n);
        for (const auto& t : r) {
            int k = lookup(t.path);
            if (k < 0)
                fail(ErrorKind::InvalidRelation,
                     "relation path longer than the degree bound");
            v[k] += t.coeff;
        }
        return v;
    };

    // ideal generated by the relations inside kQ/J^{d+1}: span of u r v over
    // all composable path pairs (u, v); products beyond degree d truncate to 0
    SpanBuilder ideal(n);
    for (const auto& r : spec.relations) {
        Vec rv = relation_vec(r);
        int rs = r[0].path.source, rt = r[0].path.target;
        for (const auto& u : paths) {
            if (u.source != rt) continue;
            for (const auto& v : paths) {
                if (v.target != rs) continue;
                // u r v in composition notation: traverse v, then r, then u
                Vec w = vec_zero(n);
                for (int k = 0; k < n; ++k) {
                    if (sgn(rv[k]) == 0) continue;
                    Path p = compose(q, v, paths[k]);
                    p = compose(q, p, u);
                    int idx = lookup(p);
                    if (idx >= 0) w[idx] += rv[k];
                }
                ideal.insert(std::move(w));
            }
        }
    }

    // certificate: all paths of length exactly d die in the ideal
    for (int k = 0; k < n; ++k)
        if (paths[k].length() == d && !ideal.contains(vec_unit(n, k)))
            fail(ErrorKind::TruncationNotSaturated,
                 "path " + path_to_string(q, paths[k]) +
                     " of length d survives; increase the degree bound or the ideal "
                     "is not admissible");

    Subspace ideal_sub = ideal.to_subspace();
    QuotientBasis qb = QuotientBasis::make(ideal_sub);
    int dim = qb.qdim();

    Algebra a;
    a.dim = dim;
    a.name = name;
    std::vector<Path> basis_paths;
    for (int k = 0; k < dim; ++k) {
        basis_paths.push_back(paths[qb.free_cols[k]]);
        a.basis_names.push_back(path_to_string(q, paths[qb.free_cols[k]]));
    }
    a.mult.assign(dim, std::vector<SparseVec>((size_t)dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            // basis path product: paths[i] after paths[j] (right-to-left)
            const Path &pi = basis_paths[i], &pj = basis_paths[j];
            if (pj.target != pi.source) continue;
            Path prod = compose(q, pj, pi);
            int idx = lookup(prod);
            if (idx < 0) continue;  // length > d: dies through the ideal
            a.mult[i][j] = to_sparse(qb.projection.apply(vec_unit(n, idx)));
        }
    a.unit = vec_zero(dim);
    for (int v = 1; v <= q.n_vertices; ++v) {
        int idx = lookup(trivial_path(v));
        Vec img = qb.projection.apply(vec_unit(n, idx));
        a.unit = vec_add(a.unit, img);
        a.idems.push_back({std::move(img), v - 1});
    }
    for (int v = 1; v <= q.n_vertices; ++v) a.label_names.push_back(std::to_string(v));
    for (const auto& e : a.idems) a.generators.push_back(e.v);
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
        Path p = trivial_path(q.arrows[ai].source);
        p.arrows.push_back((int)ai);
        p.target = q.arrows[ai].target;
        int idx = lookup(p);
        if (idx >= 0) {
            Vec img = qb.projection.apply(vec_unit(n, idx));
            if (!vec_is_zero(img)) a.generators.push_back(std::move(img));
        }
    }

    BoundQuiverAlgebra out;
    out.algebra = make_algebra(std::move(a));
    out.basis_paths = std::move(basis_paths);
    out.spec = spec;
    return out;
}

BoundQuiverAlgebra path_algebra(const Quiver& q, const std::string& name) {
    if (!q.is_acyclic()) fail(ErrorKind::CyclicQuiver, "path algebra of a cyclic quiver is infinite-dimensional");
    // longest path in an acyclic quiver is < n_vertices
    PresentationSpec spec;
    spec.quiver = q;
    spec.degree_bound = std::max(1, q.n_vertices);
    // With no relations the certificate requires all length-d paths to vanish,
    // which holds exactly when no path of length d exists.
    std::vector<Path> all = enumerate_paths(q, q.n_vertices);
    int longest = 0;
    for (const auto& p : all) longest = std::max(longest, p.length());
    spec.degree_bound = longest + 1;
    return bound_quiver_algebra(spec, name);
}

}  // namespace qhlab
