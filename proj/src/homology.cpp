#include "homology.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace qhlab {

Resolution minimal_resolution(const Module& m, int max_deg) {
    Resolution r;
    r.target = m;
    if (m.dim == 0) {
        r.projs.push_back(zero_module(m.alg));
        r.proj_label_counts.push_back(std::vector<int>((size_t)m.alg->n_labels()));
        r.augment = Matrix(0, 0);
        return r;
    }
    CoverResult c0 = projective_cover(m);
    r.projs.push_back(c0.cover);
    r.proj_label_counts.push_back(c0.top_counts);
    r.augment = c0.surjection;

    Matrix surj = c0.surjection;          // prev.dim x P_n.dim with prev = M or K
    Module* prev_proj = &r.projs.back();
    Matrix incl_prev = Matrix::identity(prev_proj->dim);  // K_{n} -> P_n coords
    // kernel of (augment) inside P_0, then iterate
    while ((int)r.projs.size() - 1 < max_deg) {
        const Module& pn = r.projs.back();
        Matrix ker = kernel_basis(surj);  // rows span ker(surj) in P_n coords
        if (ker.rows == 0) return r;      // finished, exact
        Subspace ks = Subspace::span_rows(ker);
        SubmoduleResult sub = submodule_from_subspace(pn, ks);
        CoverResult c = projective_cover(sub.module);
        Matrix d = sub.inclusion.mul(c.surjection);  // P_{n+1} -> P_n
        // minimality: image inside rad P_n
        Subspace rad = radical_subspace(pn);
        for (int col = 0; col < d.cols; ++col)
            if (!rad.contains(d.col(col)))
                fail(ErrorKind::Internal, "minimal resolution differential not radical");
        r.projs.push_back(c.cover);
        r.proj_label_counts.push_back(c.top_counts);
        r.diff.push_back(d);
        surj = c.surjection;  // K.dim x P_{n+1}.dim, continue with kernel of this
        // next kernel must be taken inside P_{n+1} mapping onto K
        (void)prev_proj;
        (void)incl_prev;
        if (c.cover.dim == 0) return r;
    }
    r.reached_cap = true;
    return r;
}

InducedResolution induce_resolution(const Embedding& e, const Resolution& r) {
    InducedResolution ir;
    for (const auto& p : r.projs) {
        ir.degree_data.push_back(induce(e, p));
        ir.projs.push_back(ir.degree_data.back().module);
    }
    ir.target_data = induce(e, r.target);
    ir.induced_target = ir.target_data.module;
    const Algebra& A = *e.big;
    int adim = A.dim;
    auto induced_map = [&](const Matrix& f, const InduceResult& from, const InduceResult& to) {
        // (id_A (x) f) descends to the induced modules
        Matrix big = kron(Matrix::identity(adim), f);
        return to.projection.mul(big).mul(from.section);
    };
    for (size_t n = 0; n < r.diff.size(); ++n)
        ir.diff.push_back(induced_map(r.diff[n], ir.degree_data[n + 1], ir.degree_data[n]));
    ir.augment = induced_map(r.augment, ir.degree_data[0], ir.target_data);
    return ir;
}

namespace {

Vec flatten(const Matrix& m) {
    Vec v = m.a;
    return v;
}

}  // namespace

ExtGroup ext_group(const Resolution& r, int n, const Module& y) {
    ExtGroup eg;
    if (n < 0 || n > r.length()) return eg;
    const Module& pn = r.projs[n];
    if (pn.dim == 0 || y.dim == 0) return eg;
    eg.hom_basis = hom_space(pn, y);
    if (eg.hom_basis.empty()) return eg;
    int flat = y.dim * pn.dim;

    // cocycles: g with g . d_{n+1} = 0
    std::vector<Vec> cocycle_coeffs;
    if (n < r.length() && r.projs[n + 1].dim > 0) {
        Matrix sys((int)eg.hom_basis.size(), 0);
        std::vector<Vec> cols;
        for (const auto& h : eg.hom_basis) cols.push_back(flatten(h.mul(r.diff[n])));
        Matrix coeff_system = Matrix::from_cols(cols);  // (y.dim*P_{n+1}.dim) x hom-dim
        Matrix ker = kernel_basis(coeff_system);
        for (int i = 0; i < ker.rows; ++i) cocycle_coeffs.push_back(ker.row(i));
        (void)sys;
    } else {
        for (size_t i = 0; i < eg.hom_basis.size(); ++i)
            cocycle_coeffs.push_back(vec_unit((int)eg.hom_basis.size(), (int)i));
    }

    // coboundaries: f . d_n for f: P_{n-1} -> Y
    std::vector<Vec> boundary_flat;
    if (n >= 1) {
        for (const auto& f : hom_space(r.projs[n - 1], y))
            boundary_flat.push_back(flatten(f.mul(r.diff[n - 1])));
    }
    SpanBuilder span(flat);
    std::vector<Vec> b_basis;
    for (auto& b : boundary_flat)
        if (span.insert(b)) b_basis.push_back(b);
    eg.n_boundary = (int)b_basis.size();

    std::vector<Vec> rep_flat;
    for (const auto& cc : cocycle_coeffs) {
        Matrix g = Matrix::zero(y.dim, pn.dim);
        for (size_t i = 0; i < eg.hom_basis.size(); ++i)
            if (sgn(cc[i]) != 0) g = g.add(eg.hom_basis[i].scale(cc[i]));
        Vec fg = flatten(g);
        if (span.insert(fg)) {
            eg.cocycles.push_back(g);
            rep_flat.push_back(fg);
        }
    }
    eg.dim = (int)eg.cocycles.size();
    std::vector<Vec> cols = b_basis;
    cols.insert(cols.end(), rep_flat.begin(), rep_flat.end());
    eg.reduce_cols = cols.empty() ? Matrix(flat, 0) : Matrix::from_cols(cols);
    return eg;
}

Vec ext_coordinates(const ExtGroup& eg, const Matrix& g) {
    if (eg.dim == 0) return Vec();
    auto sol = solve(eg.reduce_cols, flatten(g));
    if (!sol) fail(ErrorKind::Internal, "cocycle outside Z = B + representatives");
    Vec coords((size_t)eg.dim);
    for (int i = 0; i < eg.dim; ++i) coords[i] = (*sol)[eg.n_boundary + i];
    return coords;
}

std::vector<Matrix> lift_chain_map(const Resolution& p, const std::vector<Module>& c_projs,
                                   const std::vector<Matrix>& c_diff, const Matrix& c_augment,
                                   const Matrix& iso_to_p_target, int up_to) {
    std::vector<Matrix> theta;
    for (int n = 0; n <= up_to && n <= p.length(); ++n) {
        const Module& pn = p.projs[n];
        if (pn.dim == 0) {
            theta.push_back(Matrix(0, 0));
            continue;
        }
        if (n >= (int)c_projs.size() || c_projs[n].dim == 0) {
            // complex ran out; constraint right side must vanish
            Matrix rhs = (n == 0) ? p.augment
                                  : theta[n - 1].mul(p.diff[n - 1]);
            if (!rhs.is_zero())
                fail(ErrorKind::Internal, "chain lift impossible: target complex too short");
            theta.push_back(Matrix(0, pn.dim));
            continue;
        }
        const Module& cn = c_projs[n];
        std::vector<Matrix> homs = hom_space(pn, cn);
        Matrix rhs = (n == 0) ? p.augment : theta[n - 1].mul(p.diff[n - 1]);
        std::vector<Vec> cols;
        for (const auto& h : homs) {
            Matrix lhs = (n == 0) ? iso_to_p_target.mul(c_augment).mul(h)
                                  : c_diff[n - 1].mul(h);
            cols.push_back(flatten(lhs));
        }
        auto sol = solve(Matrix::from_cols(cols), flatten(rhs));
        if (!sol) fail(ErrorKind::Internal, "chain lift system inconsistent");
        Matrix t = Matrix::zero(cn.dim, pn.dim);
        for (size_t i = 0; i < homs.size(); ++i)
            if (sgn((*sol)[i]) != 0) t = t.add(homs[i].scale((*sol)[i]));
        theta.push_back(std::move(t));
    }
    return theta;
}

BorelEmbedding check_exact_borel(const Embedding& e, const SimpleOrder& order_big,
                                 uint64_t seed) {
    BorelEmbedding be;
    be.emb = e;
    be.order_big = order_big;
    BorelCheck& c = be.check;
    std::ostringstream msg;
    verify_embedding(e);  // throws NotEmbedding
    c.embedding_ok = true;

    const AlgebraPtr &B = e.sub, &A = e.big;
    // (i) A projective as a right B-module
    Module aright = big_as_right_sub_module(e);
    c.right_projective = is_projective(aright);
    if (!c.right_projective) msg << "A is not projective as a right B-module; ";

    // (iii) induced simples match standard modules; phi by matching tops
    int nb = B->n_labels(), na = A->n_labels();
    c.phi.assign((size_t)nb, -1);
    std::vector<Module> deltas;
    for (int l = 0; l < na; ++l) deltas.push_back(standard_module(A, order_big, l));
    bool induce_ok = (nb == na);
    if (!induce_ok) msg << "label counts differ (" << nb << " vs " << na << "); ";
    for (int k = 0; k < nb && induce_ok; ++k) {
        Module lk = simple_module(B, k);
        InduceResult ind = induce(e, lk);
        c.induced_dims.push_back(ind.module.dim);
        QuotientResult t = top(ind.module);
        auto counts = semisimple_label_counts(t.module);
        int target = -1;
        bool simple_top = true;
        for (int l = 0; l < na; ++l) {
            if (counts[l] == 0) continue;
            if (target >= 0 || counts[l] > 1) simple_top = false;
            target = l;
        }
        if (!simple_top || target < 0) {
            induce_ok = false;
            msg << "induced module of L(" << B->label_names[k] << ") has non-simple top; ";
            break;
        }
        if (!is_isomorphic(ind.module, deltas[target], seed)) {
            induce_ok = false;
            msg << "A(x)L(" << B->label_names[k] << ") is not Delta("
                << A->label_names[target] << "); ";
            break;
        }
        c.phi[k] = target;
    }
    if (induce_ok) {
        std::vector<bool> hit((size_t)na, false);
        for (int k = 0; k < nb; ++k) {
            if (c.phi[k] < 0 || hit[c.phi[k]]) {
                induce_ok = false;
                msg << "phi is not a bijection; ";
                break;
            }
            hit[c.phi[k]] = true;
        }
    }
    c.induce_ok = induce_ok;

    // (ii) directedness under the transported order
    if (induce_ok) {
        be.order_sub = SimpleOrder::empty(nb);
        for (int k = 0; k < nb; ++k)
            for (int l = 0; l < nb; ++l)
                be.order_sub.less_[k][l] = order_big.lt(c.phi[k], c.phi[l]);
        c.directed = is_directed(B, be.order_sub);
        if (!c.directed) msg << "B is not directed under the transported order; ";
    }

    c.passed = c.embedding_ok && c.right_projective && c.directed && c.induce_ok;
    c.message = msg.str();
    return be;
}

bool is_strong(const BorelEmbedding& be) {
    const AlgebraPtr &B = be.emb.sub, &A = be.emb.big;
    if ((int)B->idems.size() != (int)A->idems.size()) return false;
    for (const auto& eb : B->idems) {
        Vec in_a = be.emb.image(eb.v);
        // primitive in A: corner dimension 1 modulo rad(A)
        Subspace c = corner(*A, in_a);
        Subspace meet = c.intersect(radical(*A));
        if (c.dim() - meet.dim() != 1) return false;
    }
    return true;
}

namespace {

Matrix find_iso(const Module& x, const Module& delta, uint64_t seed) {
    std::vector<Matrix> homs = hom_space(x, delta);
    if (x.dim != delta.dim) fail(ErrorKind::Internal, "find_iso dimension mismatch");
    if (x.dim == 0) return Matrix(0, 0);
    for (const auto& h : homs)
        if (sgn(determinant(h)) != 0) return h;
    std::seed_seq sq{seed, (uint64_t)x.dim};
    std::mt19937_64 rng(sq);
    std::uniform_int_distribution<long> dist(1, 1 << 16);
    for (int t = 0; t < 200; ++t) {
        Matrix f = Matrix::zero(delta.dim, x.dim);
        for (const auto& h : homs) f = f.add(h.scale(rat(dist(rng))));
        if (sgn(determinant(f)) != 0) return f;
    }
    fail(ErrorKind::Internal, "no isomorphism found although modules are isomorphic");
}

}  // namespace

RegularityReport regularity_report(const BorelEmbedding& be, int max_deg, uint64_t seed) {
    if (!be.check.passed)
        fail(ErrorKind::InputNotBorel, "regularity requested on a failed Borel check");
    const AlgebraPtr &B = be.emb.sub, &A = be.emb.big;
    int nb = B->n_labels();
    int cap = max_deg > 0 ? max_deg : A->dim;

    RegularityReport rep;
    std::vector<Module> b_simples;
    std::vector<Resolution> q;  // over B
    for (int k = 0; k < nb; ++k) {
        b_simples.push_back(simple_module(B, k));
        q.push_back(minimal_resolution(b_simples[k], cap));
        rep.hit_cap |= q.back().reached_cap;
    }
    std::vector<Module> deltas;
    std::vector<Resolution> p;  // over A
    for (int k = 0; k < nb; ++k) {
        deltas.push_back(standard_module(A, be.order_big, be.check.phi[k]));
        p.push_back(minimal_resolution(deltas[k], cap));
        rep.hit_cap |= p.back().reached_cap;
    }
    std::vector<InducedResolution> ic;
    std::vector<Matrix> psi;  // X_k -> Delta_{phi k}
    for (int k = 0; k < nb; ++k) {
        ic.push_back(induce_resolution(be.emb, q[k]));
        psi.push_back(find_iso(ic.back().induced_target, deltas[k], seed));
    }
    // induced targets for the value side: X_l with iso to Delta_{phi l}
    // (the same objects, reuse ic[l].induced_target and psi[l])

    int maxn = 0;
    for (int k = 0; k < nb; ++k) maxn = std::max({maxn, q[k].length(), p[k].length()});
    rep.max_degree = maxn;

    std::vector<std::vector<Matrix>> theta((size_t)nb);
    for (int k = 0; k < nb; ++k)
        theta[k] = lift_chain_map(p[k], ic[k].projs, ic[k].diff, ic[k].augment, psi[k], maxn);

    for (int n = 1; n <= maxn; ++n) {
        ExtMapDegree deg;
        deg.degree = n;
        std::vector<std::vector<Vec>> block_cols;  // per (k,l) block: target coords per source basis elt
        int src_total = 0, tgt_total = 0;
        std::vector<Vec> all_cols;
        std::vector<int> tgt_offsets;
        // precompute target ext groups per (k,l)
        std::vector<std::vector<ExtGroup>> target_eg((size_t)nb, std::vector<ExtGroup>((size_t)nb));
        for (int k = 0; k < nb; ++k)
            for (int l = 0; l < nb; ++l) {
                target_eg[k][l] = ext_group(p[k], n, deltas[l]);
                tgt_total += target_eg[k][l].dim;
            }
        // assemble block-diagonal matrix in one big coordinate system
        std::vector<std::vector<int>> tgt_off((size_t)nb, std::vector<int>((size_t)nb));
        int off = 0;
        for (int k = 0; k < nb; ++k)
            for (int l = 0; l < nb; ++l) {
                tgt_off[k][l] = off;
                off += target_eg[k][l].dim;
            }
        std::vector<Vec> cols;
        for (int k = 0; k < nb; ++k)
            for (int l = 0; l < nb; ++l) {
                ExtGroup src = ext_group(q[k], n, b_simples[l]);
                src_total += src.dim;
                for (const auto& f : src.cocycles) {
                    Vec col((size_t)tgt_total);
                    if (n <= q[k].length() && n < (int)ic[k].projs.size() &&
                        target_eg[k][l].dim > 0 && n <= p[k].length() &&
                        (int)theta[k].size() > n && theta[k][n].rows > 0) {
                        // induced cocycle id (x) f, pushed to the minimal resolution
                        const InduceResult& from = ic[k].degree_data[n];
                        Matrix big = kron(Matrix::identity(A->dim), f);
                        Matrix induced_f = ic[l].target_data.projection.mul(big).mul(from.section);
                        Matrix g = psi[l].mul(induced_f).mul(theta[k][n]);
                        // must be a cocycle on P_n
                        if (n < p[k].length() && !g.mul(p[k].diff[n]).is_zero())
                            fail(ErrorKind::Internal, "induced cochain is not a cocycle");
                        Vec coords = ext_coordinates(target_eg[k][l], g);
                        for (int i = 0; i < target_eg[k][l].dim; ++i)
                            col[tgt_off[k][l] + i] = coords[i];
                    }
                    cols.push_back(std::move(col));
                }
            }
        deg.source_dim = src_total;
        deg.target_dim = tgt_total;
        deg.matrix = cols.empty() ? Matrix(tgt_total, 0) : Matrix::from_cols(cols);
        deg.rank = deg.matrix.cols == 0 ? 0 : rank(deg.matrix);
        rep.degrees.push_back(std::move(deg));
    }
    rep.regular = true;
    rep.homological = true;
    for (const auto& d : rep.degrees) {
        bool iso = (d.source_dim == d.target_dim && d.rank == d.source_dim);
        bool epi = (d.rank == d.target_dim);
        if (!iso) rep.regular = false;
        if (d.degree == 1 ? !epi : !iso) rep.homological = false;
    }
    return rep;
}

bool is_regular(const BorelEmbedding& be, uint64_t seed) {
    return regularity_report(be, -1, seed).regular;
}

bool is_homological(const BorelEmbedding& be, uint64_t seed) {
    return regularity_report(be, -1, seed).homological;
}

ExtTable ext_table(const std::vector<Module>& family, const std::vector<std::string>& names,
                   int max_deg) {
    ExtTable t;
    t.names = names;
    int n = (int)family.size();
    std::vector<Resolution> res;
    int maxlen = 0;
    for (const auto& x : family) {
        res.push_back(minimal_resolution(x, max_deg));
        t.hit_cap |= res.back().reached_cap;
        maxlen = std::max(maxlen, res.back().length());
        t.shapes.push_back(res.back().proj_label_counts);
    }
    for (int d = 0; d <= maxlen; ++d) {
        std::vector<std::vector<int>> grid((size_t)n, std::vector<int>((size_t)n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) grid[i][j] = ext_group(res[i], d, family[j]).dim;
        t.dims.push_back(std::move(grid));
    }
    return t;
}

}  // namespace qhlab
