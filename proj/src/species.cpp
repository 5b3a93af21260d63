#include "species.hpp"

#include <algorithm>
#include <map>

namespace qhlab {

void validate_species(const SpeciesSpec& s) {
    s.quiver.validate();
    if (!s.quiver.is_acyclic()) fail(ErrorKind::CyclicQuiver, "species quiver must be acyclic");
    if ((int)s.vertex_alg.size() != s.quiver.n_vertices ||
        (int)s.vertex_order.size() != s.quiver.n_vertices)
        fail(ErrorKind::Semantic, "species needs one algebra and order per vertex");
    if (s.arrow_bimod.size() != s.quiver.arrows.size())
        fail(ErrorKind::Semantic, "species needs one bimodule per arrow");
    for (size_t i = 0; i < s.quiver.arrows.size(); ++i) {
        const Arrow& a = s.quiver.arrows[i];
        if (s.arrow_bimod[i].left.get() != s.vertex_alg[a.target - 1].get() ||
            s.arrow_bimod[i].right.get() != s.vertex_alg[a.source - 1].get())
            fail(ErrorKind::AlgebraMismatch,
                 "bimodule of arrow " + a.label + " is not an (A_target, A_source)-bimodule");
    }
    for (int v = 0; v < s.quiver.n_vertices; ++v)
        if (s.vertex_order[v].n != s.vertex_alg[v]->n_labels())
            fail(ErrorKind::Semantic, "vertex order size mismatch");
}

namespace {

struct TensorChain {
    // factors left-to-right: M_{a_k}, ..., M_{a_1} for traversal order a_1..a_k
    std::vector<const Bimodule*> factors;
    std::vector<int> dims;
    int tdim = 1;

    int factor_count() const { return (int)factors.size(); }
};

TensorChain chain_of(const SpeciesSpec& s, const Path& p) {
    TensorChain c;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        c.factors.push_back(&s.arrow_bimod[*it]);
        c.dims.push_back(s.arrow_bimod[*it].dim());
        c.tdim *= s.arrow_bimod[*it].dim();
    }
    return c;
}

// identity (x) ... (x) op-at-position (x) ... (x) identity on the chain
Matrix position_op(const TensorChain& c, int pos, const Matrix& op) {
    Matrix m = Matrix::identity(1);
    for (int i = 0; i < c.factor_count(); ++i)
        m = kron(m, i == pos ? op : Matrix::identity(c.dims[i]));
    return m;
}

Subspace middle_relators(const SpeciesSpec& s, const Path& p, const TensorChain& c) {
    // relators between adjacent factors j (left) and j+1..: factor order is
    // reversed traversal, so adjacent pair (pos, pos+1) has middle algebra
    // A_{s(arrow at pos)} = A_{t(arrow at pos+1)}
    SpanBuilder rel(c.tdim);
    int k = c.factor_count();
    for (int pos = 0; pos + 1 < k; ++pos) {
        const Bimodule& leftf = *c.factors[pos];       // later arrow
        const Bimodule& rightf = *c.factors[pos + 1];  // earlier arrow
        const AlgebraPtr& mid = leftf.right;
        if (mid.get() != rightf.left.get())
            fail(ErrorKind::AlgebraMismatch, "path factors do not share the middle algebra");
        for (int a = 0; a < mid->dim; ++a) {
            Matrix ra = position_op(c, pos, leftf.right_act(a));
            Matrix la = position_op(c, pos + 1, rightf.left_act(a));
            Matrix d = ra.sub(la);
            for (int col = 0; col < c.tdim; ++col) {
                Vec v = d.col(col);
                if (!vec_is_zero(v)) rel.insert(std::move(v));
            }
        }
    }
    (void)s;
    (void)p;
    return rel.to_subspace();
}

}  // namespace

int SpeciesAlgebra::block_of_path(const Path& p) const {
    for (size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].path == p) return (int)i;
    return -1;
}

Matrix SpeciesAlgebra::left_on_t(int pblock, int alg_basis_idx) const {
    const PathBlock& b = blocks[pblock];
    if (b.path.is_trivial())
        return spec.vertex_alg[b.path.source - 1]->left_mult(
            vec_unit(spec.vertex_alg[b.path.source - 1]->dim, alg_basis_idx));
    TensorChain c = chain_of(spec, b.path);
    return position_op(c, 0, c.factors[0]->left_act(alg_basis_idx));
}

Matrix SpeciesAlgebra::right_on_t(int pblock, int alg_basis_idx) const {
    const PathBlock& b = blocks[pblock];
    if (b.path.is_trivial())
        return spec.vertex_alg[b.path.source - 1]->right_mult(
            vec_unit(spec.vertex_alg[b.path.source - 1]->dim, alg_basis_idx));
    TensorChain c = chain_of(spec, b.path);
    int last = c.factor_count() - 1;
    return position_op(c, last, c.factors[last]->right_act(alg_basis_idx));
}

Matrix SpeciesAlgebra::concat_map(int pblock, int qblock) const {
    const PathBlock &bp = blocks[pblock], &bq = blocks[qblock];
    if (bq.path.target != bp.path.source)
        fail(ErrorKind::Semantic, "concat of non-composable path blocks");
    Path prod = compose(spec.quiver, bq.path, bp.path);
    int rblock = block_of_path(prod);
    if (rblock < 0) fail(ErrorKind::Internal, "product path missing from block list");
    const PathBlock& br = blocks[rblock];
    // T_r = T_p (x) T_q when both nontrivial; trivial blocks act instead
    Matrix out(br.dim, bp.dim * bq.dim);
    if (bp.path.is_trivial() && bq.path.is_trivial()) {
        const AlgebraPtr& A = spec.vertex_alg[bp.path.source - 1];
        for (int x = 0; x < bp.dim; ++x)
            for (int y = 0; y < bq.dim; ++y) {
                Vec prodv = A->mul(vec_unit(A->dim, x), vec_unit(A->dim, y));
                for (int r = 0; r < br.dim; ++r) out.at(r, x * bq.dim + y) = prodv[r];
            }
        return out;
    }
    if (bp.path.is_trivial()) {
        // left action of A_{t(q)} element x on V_q
        for (int x = 0; x < bp.dim; ++x) {
            Matrix lx = bq.proj.mul(left_on_t(qblock, x)).mul(bq.sect);
            for (int y = 0; y < bq.dim; ++y) {
                Vec img = lx.col(y);
                for (int r = 0; r < br.dim; ++r) out.at(r, x * bq.dim + y) = img[r];
            }
        }
        return out;
    }
    if (bq.path.is_trivial()) {
        for (int y = 0; y < bq.dim; ++y) {
            Matrix ry = bp.proj.mul(right_on_t(pblock, y)).mul(bp.sect);
            for (int x = 0; x < bp.dim; ++x) {
                Vec img = ry.col(x);
                for (int r = 0; r < br.dim; ++r) out.at(r, x * bq.dim + y) = img[r];
            }
        }
        return out;
    }
    // both nontrivial: sigma_p (x) sigma_q landing in T_r = T_p (x) T_q
    for (int x = 0; x < bp.dim; ++x)
        for (int y = 0; y < bq.dim; ++y) {
            Vec tp = bp.sect.col(x), tq = bq.sect.col(y);
            Vec tr((size_t)br.tdim);
            for (int i = 0; i < bp.tdim; ++i)
                if (sgn(tp[i]) != 0)
                    for (int j = 0; j < bq.tdim; ++j)
                        if (sgn(tq[j]) != 0) tr[i * bq.tdim + j] = tp[i] * tq[j];
            Vec img = br.proj.apply(tr);
            for (int r = 0; r < br.dim; ++r) out.at(r, x * bq.dim + y) = img[r];
        }
    return out;
}

Vec SpeciesAlgebra::embed_block(int pblock, const Vec& v) const {
    Vec w = vec_zero(algebra->dim);
    for (int i = 0; i < blocks[pblock].dim; ++i) w[blocks[pblock].offset + i] = v[i];
    return w;
}

SpeciesAlgebra species_algebra(const SpeciesSpec& s, const std::string& name) {
    validate_species(s);
    SpeciesAlgebra sa;
    sa.spec = s;
    sa.paths = enumerate_paths(s.quiver, std::max(1, s.quiver.n_vertices));

    int offset = 0;
    for (const auto& p : sa.paths) {
        SpeciesAlgebra::PathBlock b;
        b.path = p;
        if (p.is_trivial()) {
            b.dim = b.tdim = s.vertex_alg[p.source - 1]->dim;
            b.proj = Matrix::identity(b.dim);
            b.sect = Matrix::identity(b.dim);
        } else {
            TensorChain c = chain_of(s, p);
            b.tdim = c.tdim;
            Subspace rel = middle_relators(s, p, c);
            QuotientBasis qb = QuotientBasis::make(rel);
            b.dim = qb.qdim();
            b.proj = qb.projection;
            b.sect = qb.section;
        }
        b.offset = offset;
        offset += b.dim;
        sa.blocks.push_back(std::move(b));
    }

    Algebra alg;
    alg.dim = offset;
    alg.name = name;
    for (const auto& b : sa.blocks)
        for (int i = 0; i < b.dim; ++i)
            alg.basis_names.push_back(path_to_string(s.quiver, b.path) + "#" + std::to_string(i));
    alg.mult.assign(alg.dim, std::vector<SparseVec>((size_t)alg.dim));
    for (size_t pb = 0; pb < sa.blocks.size(); ++pb)
        for (size_t qb = 0; qb < sa.blocks.size(); ++qb) {
            const auto &bp = sa.blocks[pb], &bq = sa.blocks[qb];
            if (bq.path.target != bp.path.source) continue;
            Matrix cm = sa.concat_map((int)pb, (int)qb);
            int rblock = sa.block_of_path(compose(s.quiver, bq.path, bp.path));
            int roff = sa.blocks[rblock].offset;
            for (int x = 0; x < bp.dim; ++x)
                for (int y = 0; y < bq.dim; ++y) {
                    SparseVec sv;
                    for (int r = 0; r < sa.blocks[rblock].dim; ++r)
                        if (sgn(cm.at(r, x * bq.dim + y)) != 0)
                            sv.emplace_back(roff + r, cm.at(r, x * bq.dim + y));
                    alg.mult[bp.offset + x][bq.offset + y] = std::move(sv);
                }
        }

    alg.unit = vec_zero(alg.dim);
    for (size_t pb = 0; pb < sa.blocks.size(); ++pb) {
        const auto& b = sa.blocks[pb];
        if (!b.path.is_trivial()) continue;
        const AlgebraPtr& A = s.vertex_alg[b.path.source - 1];
        for (int i = 0; i < A->dim; ++i) alg.unit[b.offset + i] = A->unit[i];
    }

    sa.label_of_vertex.assign((size_t)s.quiver.n_vertices, {});
    for (int v = 1; v <= s.quiver.n_vertices; ++v) {
        const AlgebraPtr& A = s.vertex_alg[v - 1];
        for (int l = 0; l < A->n_labels(); ++l) {
            sa.label_of_vertex[v - 1].push_back((int)alg.label_names.size());
            alg.label_names.push_back(std::to_string(v) + ":" + A->label_names[l]);
        }
    }
    for (size_t pb = 0; pb < sa.blocks.size(); ++pb) {
        const auto& b = sa.blocks[pb];
        if (!b.path.is_trivial()) continue;
        int v = b.path.source;
        const AlgebraPtr& A = s.vertex_alg[v - 1];
        for (const auto& e : A->idems) {
            Vec w = vec_zero(alg.dim);
            for (int i = 0; i < A->dim; ++i) w[b.offset + i] = e.v[i];
            alg.idems.push_back({std::move(w), sa.label_of_vertex[v - 1][e.label]});
        }
        for (const auto& g : A->generators) {
            Vec w = vec_zero(alg.dim);
            for (int i = 0; i < A->dim; ++i) w[b.offset + i] = g[i];
            alg.generators.push_back(std::move(w));
        }
    }
    for (size_t pb = 0; pb < sa.blocks.size(); ++pb) {
        const auto& b = sa.blocks[pb];
        if (b.path.length() != 1) continue;
        for (int i = 0; i < b.dim; ++i)
            alg.generators.push_back(vec_unit(alg.dim, b.offset + i));
    }

    sa.algebra = make_algebra(std::move(alg));

    // global order: (i, j) <= (k, l) iff i < k or (i = k and j <=_i l)
    int nl = sa.algebra->n_labels();
    sa.order = SimpleOrder::empty(nl);
    for (int v = 1; v <= s.quiver.n_vertices; ++v)
        for (int w = 1; w <= s.quiver.n_vertices; ++w)
            for (int j = 0; j < (int)sa.label_of_vertex[v - 1].size(); ++j)
                for (int l = 0; l < (int)sa.label_of_vertex[w - 1].size(); ++l) {
                    bool lt = v < w || (v == w && s.vertex_order[v - 1].lt(j, l));
                    if (lt)
                        sa.order.less_[sa.label_of_vertex[v - 1][j]]
                                      [sa.label_of_vertex[w - 1][l]] = true;
                }

    // radical block formula: rad(A) = (+) rad(A_i) (+) (+)_{p nontrivial} M_p
    std::vector<Vec> expected;
    for (size_t pb = 0; pb < sa.blocks.size(); ++pb) {
        const auto& b = sa.blocks[pb];
        if (b.path.is_trivial()) {
            const Subspace& r = radical(*s.vertex_alg[b.path.source - 1]);
            for (int i = 0; i < r.basis.rows; ++i) {
                Vec w = vec_zero(sa.algebra->dim);
                for (int c = 0; c < r.ambient; ++c) w[b.offset + c] = r.basis.at(i, c);
                expected.push_back(std::move(w));
            }
        } else {
            for (int i = 0; i < b.dim; ++i)
                expected.push_back(vec_unit(sa.algebra->dim, b.offset + i));
        }
    }
    if (!(Subspace::span(sa.algebra->dim, expected) == radical(*sa.algebra)))
        fail(ErrorKind::Internal, "species radical does not match the block formula");

    return sa;
}

Module species_standard_oracle(const SpeciesAlgebra& sa, int vertex, int vertex_label) {
    const SpeciesSpec& s = sa.spec;
    const AlgebraPtr& Ai = s.vertex_alg[vertex - 1];
    Module delta = standard_module(Ai, s.vertex_order[vertex - 1], vertex_label);

    // allowed paths: start at the vertex, never visit anything above it
    std::vector<int> allowed;
    for (size_t pb = 0; pb < sa.blocks.size(); ++pb) {
        const Path& p = sa.blocks[pb].path;
        if (p.source == vertex && max_vertex(p, s.quiver) <= vertex) allowed.push_back((int)pb);
    }

    struct Summand {
        int block;
        int offset = 0;
        int dim = 0;     // dim W_p
        Matrix proj;     // W_p <- V_p (x) Delta
        Matrix sect;     // V_p (x) Delta <- W_p
    };
    std::vector<Summand> sums;
    int total = 0;
    for (int pb : allowed) {
        const auto& b = sa.blocks[pb];
        int amb = b.dim * delta.dim;
        // relators (v.a) (x) d - v (x) (a.d) over a in A_i
        SpanBuilder rel(amb);
        for (int a = 0; a < Ai->dim; ++a) {
            Matrix ra = b.proj.mul(sa.right_on_t(pb, a)).mul(b.sect);  // right action on V_p
            Matrix la = delta.action[a];
            Matrix d = kron(ra, Matrix::identity(delta.dim))
                           .sub(kron(Matrix::identity(b.dim), la));
            for (int col = 0; col < amb; ++col) {
                Vec v = d.col(col);
                if (!vec_is_zero(v)) rel.insert(std::move(v));
            }
        }
        QuotientBasis qb = QuotientBasis::make(rel.to_subspace());
        Summand sm;
        sm.block = pb;
        sm.dim = qb.qdim();
        sm.proj = qb.projection;
        sm.sect = qb.section;
        sm.offset = total;
        total += sm.dim;
        sums.push_back(std::move(sm));
    }
    auto summand_of_block = [&](int pb) -> int {
        for (size_t i = 0; i < sums.size(); ++i)
            if (sums[i].block == pb) return (int)i;
        return -1;
    };

    // action of each global algebra basis element
    std::vector<Matrix> action((size_t)sa.algebra->dim, Matrix::zero(total, total));
    for (size_t rb = 0; rb < sa.blocks.size(); ++rb) {
        const auto& br = sa.blocks[rb];
        for (int x = 0; x < br.dim; ++x) {
            Matrix& out = action[br.offset + x];
            if (br.path.is_trivial()) {
                int v = br.path.source;
                for (const auto& sm : sums) {
                    const auto& bp = sa.blocks[sm.block];
                    if (bp.path.target != v) continue;
                    // left action on the V_p factor
                    Matrix lx = bp.proj.mul(sa.left_on_t(sm.block, x)).mul(bp.sect);
                    Matrix w = sm.proj.mul(kron(lx, Matrix::identity(delta.dim))).mul(sm.sect);
                    for (int r = 0; r < sm.dim; ++r)
                        for (int c = 0; c < sm.dim; ++c)
                            out.at(sm.offset + r, sm.offset + c) = w.at(r, c);
                }
                continue;
            }
            // nontrivial path r: kills everything when it climbs above the vertex
            if (max_vertex(br.path, s.quiver) > vertex) continue;
            for (const auto& sm : sums) {
                const auto& bp = sa.blocks[sm.block];
                if (bp.path.target != br.path.source) continue;
                Path prod = compose(s.quiver, bp.path, br.path);
                int tb = sa.block_of_path(prod);
                int ts = summand_of_block(tb);
                if (ts < 0) fail(ErrorKind::Internal, "oracle product block missing");
                // V_r (x) W_p -> W_{rp}: fix x, map via concat then re-quotient
                Matrix cm = sa.concat_map((int)rb, sm.block);  // V_rp <- V_r (x) V_p
                // columns indexed by (x', y): take x' = x slice
                Matrix slice(sa.blocks[tb].dim, bp.dim);
                for (int y = 0; y < bp.dim; ++y)
                    for (int r = 0; r < sa.blocks[tb].dim; ++r)
                        slice.at(r, y) = cm.at(r, x * bp.dim + y);
                Matrix w = sums[ts].proj.mul(kron(slice, Matrix::identity(delta.dim)))
                               .mul(sm.sect);
                for (int r = 0; r < sums[ts].dim; ++r)
                    for (int c = 0; c < sm.dim; ++c)
                        out.at(sums[ts].offset + r, sm.offset + c) = w.at(r, c);
            }
        }
    }
    Module oracle = make_module(sa.algebra, std::move(action),
                                "DeltaOracle(" + std::to_string(vertex) + ":" +
                                    Ai->label_names[vertex_label] + ")");
    return oracle;
}

SpeciesQhVerdict species_qh_criterion(const SpeciesSpec& s, uint64_t seed) {
    validate_species(s);
    SpeciesQhVerdict v;
    std::vector<Path> paths = enumerate_paths(s.quiver, std::max(1, s.quiver.n_vertices));
    // one-sided projectivity hypotheses per arrow
    v.hypotheses_hold = true;
    for (size_t ai = 0; ai < s.quiver.arrows.size(); ++ai) {
        bool need_right = false, need_left = false;
        for (const auto& p : paths) {
            bool contains = std::find(p.arrows.begin(), p.arrows.end(), (int)ai) != p.arrows.end();
            if (!contains) continue;
            int mx = max_vertex(p, s.quiver);
            if (mx == p.source) need_right = true;
            if (mx == p.target) need_left = true;
        }
        bool ok = true;
        if (need_right && !is_projective(right_restrict_op(s.arrow_bimod[ai]))) ok = false;
        if (need_left && !is_projective(left_restrict(s.arrow_bimod[ai]))) ok = false;
        if (!ok) {
            v.hypotheses_hold = false;
            v.failed_arrows.push_back(s.quiver.arrows[ai].label);
        }
    }
    // directed-quiver criterion: every path module left standardly filtered
    v.quiver_directed = s.quiver.arrows_ascend();
    if (v.quiver_directed) {
        v.remark_criterion = true;
        for (const auto& p : paths) {
            if (p.is_trivial()) continue;
            // build V_p as a left module over A_{t(p)}
            SpeciesSpec sub = s;  // reuse the machinery on the full species
            (void)sub;
            // assemble the path module via chained tensor_over_algebra
            Bimodule cur = s.arrow_bimod[p.arrows[0]];
            for (size_t i = 1; i < p.arrows.size(); ++i)
                cur = tensor_over_algebra(s.arrow_bimod[p.arrows[i]], cur).result;
            const AlgebraPtr& At = s.vertex_alg[p.target - 1];
            DeltaSystem ds = build_delta_system(At, s.vertex_order[p.target - 1]);
            Module lm = left_restrict(cur);
            if (!has_delta_filtration(lm, ds, FiltKind::Delta, seed)) {
                v.remark_criterion = false;
                v.unfiltered_paths.push_back(path_to_string(s.quiver, p));
            }
        }
    }
    return v;
}

}  // namespace qhlab
