#include "induction.hpp"

namespace qhlab {

void verify_embedding(const Embedding& e) {
    const Algebra &B = *e.sub, &A = *e.big;
    if (e.map.rows != A.dim || e.map.cols != B.dim)
        fail(ErrorKind::NotEmbedding, "embedding matrix has wrong shape");
    if (rank(e.map) != B.dim) fail(ErrorKind::NotEmbedding, "embedding is not injective");
    if (e.image(B.unit) != A.unit) fail(ErrorKind::NotEmbedding, "embedding is not unital");
    for (int i = 0; i < B.dim; ++i)
        for (int j = 0; j < B.dim; ++j) {
            Vec lhs = A.mul(e.map.col(i), e.map.col(j));
            Vec rhs = e.image(to_dense(B.mult[i][j], B.dim));
            if (lhs != rhs)
                fail(ErrorKind::NotEmbedding,
                     "embedding not multiplicative at (" + B.basis_names[i] + "," +
                         B.basis_names[j] + ")");
        }
}

Embedding identity_embedding(const AlgebraPtr& a) {
    return Embedding{a, a, Matrix::identity(a->dim)};
}

Embedding tensor_embedding(const Embedding& e1, const Embedding& e2,
                           const AlgebraPtr& sub_tensor, const AlgebraPtr& big_tensor) {
    Embedding e{sub_tensor, big_tensor, kron(e1.map, e2.map)};
    verify_embedding(e);
    return e;
}

InduceResult induce(const Embedding& e, const Module& m) {
    verify_embedding(e);
    if (m.alg.get() != e.sub.get())
        fail(ErrorKind::AlgebraMismatch, "induce expects a module over the subalgebra");
    const Algebra &A = *e.big, &B = *e.sub;
    int amb = A.dim * m.dim;

    // relators a.emb(b) (x) v - a (x) b.v, built sparsely
    SpanBuilder rel(amb);
    for (int b = 0; b < B.dim; ++b) {
        Vec ib = e.map.col(b);
        Matrix rho = m.act(vec_unit(B.dim, b));
        for (int a = 0; a < A.dim; ++a) {
            Vec prod = A.mul(vec_unit(A.dim, a), ib);
            for (int v = 0; v < m.dim; ++v) {
                Vec r = vec_zero(amb);
                for (int x = 0; x < A.dim; ++x)
                    if (sgn(prod[x]) != 0) r[x * m.dim + v] += prod[x];
                for (int w = 0; w < m.dim; ++w)
                    if (sgn(rho.at(w, v)) != 0) r[a * m.dim + w] -= rho.at(w, v);
                rel.insert(std::move(r));
            }
        }
    }

    // closure of the relator span under the big action L_a (x) I is structural;
    // verify cheaply against the span builder
    auto apply_big = [&](int g, const Vec& v) {
        // action of basis element g of A on A (x) M: left mult on the A factor
        Vec w = vec_zero(amb);
        for (int x = 0; x < A.dim; ++x) {
            for (const auto& [y, c] : A.mult[g][x]) {
                for (int q = 0; q < m.dim; ++q)
                    if (sgn(v[x * m.dim + q]) != 0) w[y * m.dim + q] += c * v[x * m.dim + q];
            }
        }
        return w;
    };
    for (const auto& g : A.generators) {
        for (const auto& row : rel.rows) {
            Vec gv = vec_zero(amb);
            for (int gi = 0; gi < A.dim; ++gi)
                if (sgn(g[gi]) != 0) {
                    Vec t = apply_big(gi, row);
                    vec_axpy(gv, g[gi], t);
                }
            if (!rel.contains(gv))
                fail(ErrorKind::Internal, "induction relator span not action-closed");
        }
    }

    Subspace rs = rel.to_subspace();
    QuotientBasis qb = QuotientBasis::make(rs);
    int qd = qb.qdim();
    std::vector<Matrix> action;
    for (int g = 0; g < A.dim; ++g) {
        // induced action: project( L_g (x) I ( section(col) ) )
        Matrix act(qd, qd);
        for (int c = 0; c < qd; ++c) {
            Vec v = qb.section.col(c);
            Vec gv = apply_big(g, v);
            Vec pc = qb.projection.apply(gv);
            for (int r = 0; r < qd; ++r) act.at(r, c) = pc[r];
        }
        action.push_back(std::move(act));
    }
    InduceResult res;
    res.module = make_module(e.big, std::move(action), A.name + "(x)_B " + m.name);
    res.projection = qb.projection;
    res.section = qb.section;
    res.f = Matrix(qd, m.dim);
    for (int v = 0; v < m.dim; ++v) {
        Vec unit_tensor = vec_zero(amb);
        for (int x = 0; x < A.dim; ++x)
            if (sgn(A.unit[x]) != 0) unit_tensor[x * m.dim + v] = A.unit[x];
        Vec img = qb.projection.apply(unit_tensor);
        for (int r = 0; r < qd; ++r) res.f.at(r, v) = img[r];
    }
    res.f_injective = rank(res.f) == m.dim;
    return res;
}

ModuleMap f_map(const Embedding& e, const Module& m, const Module& induced, const Matrix& f) {
    (void)e;
    if (rank(f) != m.dim) fail(ErrorKind::Internal, "f_N is not a monomorphism");
    return ModuleMap{&m, &induced, f};
}

Module big_as_right_sub_module(const Embedding& e) {
    AlgebraPtr op = opposite_cached(e.sub);
    std::vector<Matrix> action;
    for (int b = 0; b < e.sub->dim; ++b) action.push_back(e.big->right_mult(e.map.col(b)));
    return make_module(op, std::move(action), e.big->name + "|" + e.sub->name + "-right");
}

}  // namespace qhlab
