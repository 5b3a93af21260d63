#include "bimodule.hpp"

#include <map>
#include <mutex>

namespace qhlab {

namespace {

// write-once caches keyed by algebra identity so bimodules built along
// different code paths land over pointer-identical enveloping algebras
std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

std::map<const Algebra*, std::pair<AlgebraPtr, AlgebraPtr>>& op_cache() {
    static std::map<const Algebra*, std::pair<AlgebraPtr, AlgebraPtr>> cache;
    return cache;
}

std::map<std::pair<const Algebra*, const Algebra*>,
         std::tuple<AlgebraPtr, AlgebraPtr, AlgebraPtr>>&
env_cache() {
    static std::map<std::pair<const Algebra*, const Algebra*>,
                    std::tuple<AlgebraPtr, AlgebraPtr, AlgebraPtr>>
        cache;
    return cache;
}

}  // namespace

AlgebraPtr opposite_cached(const AlgebraPtr& a) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = op_cache().find(a.get());
        if (it != op_cache().end()) return it->second.second;
    }
    AlgebraPtr op = opposite(*a);
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto [it, inserted] = op_cache().emplace(a.get(), std::make_pair(a, op));
    if (!inserted) return it->second.second;  // someone else won the race
    // op of op is a itself, pointer-wise
    op_cache().emplace(op.get(), std::make_pair(op, a));
    return op;
}

AlgebraPtr enveloping_cached(const AlgebraPtr& left, const AlgebraPtr& right) {
    auto key = std::make_pair(left.get(), right.get());
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = env_cache().find(key);
        if (it != env_cache().end()) return std::get<2>(it->second);
    }
    AlgebraPtr env = tensor_algebras(left, opposite_cached(right));
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto [it, inserted] = env_cache().emplace(key, std::make_tuple(left, right, env));
    return std::get<2>(it->second);
}

Matrix Bimodule::left_act_elem(const Vec& c) const {
    Matrix m = Matrix::zero(dim(), dim());
    const Vec& ru = right->unit;
    for (int i = 0; i < left->dim; ++i) {
        if (sgn(c[i]) == 0) continue;
        for (int j = 0; j < right->dim; ++j)
            if (sgn(ru[j]) != 0)
                m = m.add(mod.action[i * right->dim + j].scale(c[i] * ru[j]));
    }
    return m;
}

Matrix Bimodule::right_act_elem(const Vec& d) const {
    Matrix m = Matrix::zero(dim(), dim());
    const Vec& lu = left->unit;
    for (int i = 0; i < left->dim; ++i) {
        if (sgn(lu[i]) == 0) continue;
        for (int j = 0; j < right->dim; ++j)
            if (sgn(d[j]) != 0)
                m = m.add(mod.action[i * right->dim + j].scale(lu[i] * d[j]));
    }
    return m;
}

Matrix Bimodule::left_act(int i) const { return left_act_elem(vec_unit(left->dim, i)); }
Matrix Bimodule::right_act(int j) const { return right_act_elem(vec_unit(right->dim, j)); }

Bimodule make_bimodule(const AlgebraPtr& left, const AlgebraPtr& right,
                       const std::vector<Matrix>& left_actions,
                       const std::vector<Matrix>& right_actions, std::string name) {
    AlgebraPtr env = enveloping_cached(left, right);
    std::vector<Matrix> action;
    for (int i = 0; i < left->dim; ++i)
        for (int j = 0; j < right->dim; ++j)
            action.push_back(left_actions[i].mul(right_actions[j]));
    Bimodule b{left, right, make_module(env, std::move(action), std::move(name))};
    return b;
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
    std::vector<Matrix> la, ra;
    for (int i = 0; i < a->dim; ++i) {
        la.push_back(a->left_mult(vec_unit(a->dim, i)));
        ra.push_back(a->right_mult(vec_unit(a->dim, i)));
    }
    return make_bimodule(a, a, la, ra, a->name + ".bimod");
}

Bimodule free_bimodule(const AlgebraPtr& left, const AlgebraPtr& right, int rank) {
    AlgebraPtr env = enveloping_cached(left, right);
    Module reg = regular_module(env);
    Module m = rank == 1 ? reg : direct_sum_power(reg, rank);
    m.name = "free^" + std::to_string(rank);
    return Bimodule{left, right, std::move(m)};
}

Bimodule simple_pair_bimodule(const AlgebraPtr& left, const AlgebraPtr& right, int llabel,
                              int rlabel) {
    AlgebraPtr rop = opposite_cached(right);
    Module ls = simple_module(left, llabel);
    Module rs = simple_module(rop, rlabel);
    std::vector<Matrix> la, ra;
    for (int i = 0; i < left->dim; ++i) la.push_back(kron(ls.action[i], Matrix::identity(rs.dim)));
    for (int j = 0; j < right->dim; ++j) ra.push_back(kron(Matrix::identity(ls.dim), rs.action[j]));
    return make_bimodule(left, right, la, ra,
                         "L(" + left->label_names[llabel] + ")(x)L(" +
                             right->label_names[rlabel] + ")op");
}

Bimodule span_sub_bimodule(const AlgebraPtr& amb, const std::vector<Vec>& vectors,
                           const std::string& name) {
    // closure under both multiplications
    SpanBuilder span(amb->dim);
    std::vector<Vec> work;
    for (const auto& v : vectors)
        if (span.insert(v)) work.push_back(v);
    for (size_t i = 0; i < work.size(); ++i)
        for (int k = 0; k < amb->dim; ++k) {
            Vec l = amb->mul(vec_unit(amb->dim, k), work[i]);
            if (span.insert(l)) work.push_back(l);
            Vec r = amb->mul(work[i], vec_unit(amb->dim, k));
            if (span.insert(r)) work.push_back(r);
        }
    Subspace s = span.to_subspace();
    if (s.dim() != (int)vectors.size())
        fail(ErrorKind::Semantic,
             "spanned sub-bimodule is larger than the given vectors; span is not closed");
    Matrix basisT = s.basis.transpose();
    auto restricted = [&](const Matrix& big) {
        Matrix cols = big.mul(basisT);
        Matrix act(s.dim(), s.dim());
        for (int c = 0; c < s.dim(); ++c) {
            auto coords = s.coordinates(cols.col(c));
            if (!coords) fail(ErrorKind::Internal, "sub-bimodule closure lost");
            for (int r = 0; r < s.dim(); ++r) act.at(r, c) = (*coords)[r];
        }
        return act;
    };
    std::vector<Matrix> la, ra;
    for (int i = 0; i < amb->dim; ++i) la.push_back(restricted(amb->left_mult(vec_unit(amb->dim, i))));
    for (int j = 0; j < amb->dim; ++j) ra.push_back(restricted(amb->right_mult(vec_unit(amb->dim, j))));
    return make_bimodule(amb, amb, la, ra, name);
}

Module left_restrict(const Bimodule& m) {
    std::vector<Matrix> action;
    for (int i = 0; i < m.left->dim; ++i) action.push_back(m.left_act(i));
    return make_module(m.left, std::move(action), m.mod.name + "|left");
}

Module right_restrict_op(const Bimodule& m) {
    AlgebraPtr rop = opposite_cached(m.right);
    std::vector<Matrix> action;
    for (int j = 0; j < m.right->dim; ++j) action.push_back(m.right_act(j));
    return make_module(rop, std::move(action), m.mod.name + "|right");
}

Bimodule restrict_right(const Bimodule& m, const AlgebraPtr& s, const Matrix& emb) {
    std::vector<Matrix> la, ra;
    for (int i = 0; i < m.left->dim; ++i) la.push_back(m.left_act(i));
    for (int j = 0; j < s->dim; ++j) ra.push_back(m.right_act_elem(emb.col(j)));
    return make_bimodule(m.left, s, la, ra, m.mod.name + "|r");
}

Bimodule restrict_left(const Bimodule& m, const AlgebraPtr& s, const Matrix& emb) {
    std::vector<Matrix> la, ra;
    for (int i = 0; i < s->dim; ++i) la.push_back(m.left_act_elem(emb.col(i)));
    for (int j = 0; j < m.right->dim; ++j) ra.push_back(m.right_act(j));
    return make_bimodule(s, m.right, la, ra, m.mod.name + "|l");
}

BimoduleTensor tensor_over_algebra(const Bimodule& m, const Bimodule& n) {
    if (m.right.get() != n.left.get())
        fail(ErrorKind::AlgebraMismatch, "middle algebras differ in tensor_over_algebra");
    const AlgebraPtr& mid = m.right;
    int md = m.dim(), nd = n.dim();
    int amb = md * nd;
    // relators (v.a) (x) w - v (x) (a.w)
    SpanBuilder rel(amb);
    for (int a = 0; a < mid->dim; ++a) {
        Matrix ra = m.right_act(a);   // right action of a on M
        Matrix la = n.left_act(a);    // left action of a on N
        for (int v = 0; v < md; ++v) {
            Vec rav = ra.col(v);
            for (int w = 0; w < nd; ++w) {
                Vec r = vec_zero(amb);
                for (int x = 0; x < md; ++x)
                    if (sgn(rav[x]) != 0) r[x * nd + w] += rav[x];
                Vec law = la.col(w);
                for (int y = 0; y < nd; ++y)
                    if (sgn(law[y]) != 0) r[v * nd + y] -= law[y];
                rel.insert(std::move(r));
            }
        }
    }
    Subspace rs = rel.to_subspace();
    QuotientBasis qb = QuotientBasis::make(rs);
    auto induced = [&](const Matrix& big) { return qb.projection.mul(big).mul(qb.section); };
    std::vector<Matrix> la, ra;
    for (int i = 0; i < m.left->dim; ++i) la.push_back(induced(kron(m.left_act(i), Matrix::identity(nd))));
    for (int j = 0; j < n.right->dim; ++j) ra.push_back(induced(kron(Matrix::identity(md), n.right_act(j))));
    BimoduleTensor out{make_bimodule(m.left, n.right, la, ra, m.mod.name + "(x)" + n.mod.name),
                       qb.projection, qb.section};
    return out;
}

bool bimodules_isomorphic(const Bimodule& a, const Bimodule& b, uint64_t seed) {
    if (a.left.get() != b.left.get() || a.right.get() != b.right.get()) return false;
    return is_isomorphic(a.mod, b.mod, seed);
}

}  // namespace qhlab
