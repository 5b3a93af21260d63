#include "qh.hpp"

#include "bimodule.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qhlab {

SimpleOrder SimpleOrder::empty(int n) {
    SimpleOrder o;
    o.n = n;
    o.less_.assign((size_t)n, std::vector<bool>((size_t)n, false));
    return o;
}

SimpleOrder SimpleOrder::chain(int n) {
    SimpleOrder o = empty(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) o.less_[i][j] = true;
    return o;
}

SimpleOrder SimpleOrder::reversed_chain(int n) {
    SimpleOrder o = empty(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) o.less_[j][i] = true;
    return o;
}

SimpleOrder SimpleOrder::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    SimpleOrder o = empty(n);
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            fail(ErrorKind::Semantic, "order pair references unknown label");
        o.less_[a][b] = true;
    }
    // Floyd-Warshall closure
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (o.less_[i][k])
                for (int j = 0; j < n; ++j)
                    if (o.less_[k][j]) o.less_[i][j] = true;
    for (int i = 0; i < n; ++i)
        if (o.less_[i][i]) fail(ErrorKind::Semantic, "order is not antisymmetric");
    return o;
}

std::vector<int> SimpleOrder::maximal(const std::vector<int>& labels) const {
    std::vector<int> out;
    for (int l : labels) {
        bool dominated = false;
        for (int m : labels)
            if (m != l && less_[l][m]) dominated = true;
        if (!dominated) out.push_back(l);
    }
    return out;
}

SimpleOrder SimpleOrder::restrict_to(const std::vector<int>& keep) const {
    SimpleOrder o = empty((int)keep.size());
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j) o.less_[i][j] = less_[keep[i]][keep[j]];
    return o;
}

std::vector<std::pair<int, int>> SimpleOrder::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (less_[i][j]) out.emplace_back(i, j);
    return out;
}

SimpleOrder tensor_order(const SimpleOrder& o, const SimpleOrder& o2) {
    SimpleOrder t = SimpleOrder::empty(o.n * o2.n);
    for (int i = 0; i < o.n; ++i)
        for (int j = 0; j < o2.n; ++j)
            for (int k = 0; k < o.n; ++k)
                for (int l = 0; l < o2.n; ++l) {
                    bool le = o.leq(i, k) && o2.leq(j, l);
                    bool eq = (i == k && j == l);
                    if (le && !eq) t.less_[i * o2.n + j][k * o2.n + l] = true;
                }
    return t;
}

SimpleOrder direct_sum_order(const SimpleOrder& o, const SimpleOrder& o2) {
    SimpleOrder t = SimpleOrder::empty(o.n + o2.n);
    for (int i = 0; i < o.n; ++i)
        for (int j = 0; j < o.n; ++j) t.less_[i][j] = o.less_[i][j];
    for (int i = 0; i < o2.n; ++i)
        for (int j = 0; j < o2.n; ++j) t.less_[o.n + i][o.n + j] = o2.less_[i][j];
    return t;
}

SimpleOrder stacked_order(const SimpleOrder& lower, const SimpleOrder& upper) {
    SimpleOrder t = direct_sum_order(lower, upper);
    for (int i = 0; i < lower.n; ++i)
        for (int j = 0; j < upper.n; ++j) t.less_[i][lower.n + j] = true;
    return t;
}

Module standard_module(const AlgebraPtr& a, const SimpleOrder& order, int label) {
    Module p = projective_module(a, label);
    std::vector<Vec> gens;
    for (const auto& e : a->idems) {
        if (order.leq(e.label, label)) continue;  // only L' not<= label contribute
        Matrix act = p.act(e.v);
        for (int c = 0; c < p.dim; ++c) {
            Vec v = act.col(c);
            if (!vec_is_zero(v)) gens.push_back(std::move(v));
        }
    }
    if (gens.empty()) {
        p.name = "Delta(" + a->label_names[label] + ")";
        return p;
    }
    SubmoduleResult k = submodule_generated(p, gens);
    QuotientResult q = quotient_module(p, k.space);
    q.module.name = "Delta(" + a->label_names[label] + ")";
    return q.module;
}

Module costandard_module(const AlgebraPtr& a, const SimpleOrder& order, int label) {
    AlgebraPtr op = opposite_cached(a);
    Module d = standard_module(op, order, label);
    Module n = dual_module(d, a);
    n.name = "Nabla(" + a->label_names[label] + ")";
    return n;
}

Module costandard_module_direct(const AlgebraPtr& a, const SimpleOrder& order, int label) {
    AlgebraPtr op = opposite_cached(a);
    Module i = dual_module(projective_module(op, label), a);  // injective envelope of L
    // biggest submodule all of whose composition factors lie below the label:
    // x with (e' b) x = 0 for every idempotent e' of a label not <= label
    std::vector<Vec> rows;
    for (const auto& e : a->idems) {
        if (order.leq(e.label, label)) continue;
        for (int k = 0; k < a->dim; ++k) {
            Vec w = a->mul(e.v, vec_unit(a->dim, k));
            if (vec_is_zero(w)) continue;
            Matrix act = i.act(w);
            for (int r = 0; r < i.dim; ++r) rows.push_back(act.row(r));
        }
    }
    Subspace sub = rows.empty() ? Subspace::full(i.dim)
                                : Subspace::span_rows(kernel_basis(Matrix::from_rows(rows)));
    Module m = submodule_from_subspace(i, sub).module;
    m.name = "Nabla_dir(" + a->label_names[label] + ")";
    return m;
}

DeltaSystem build_delta_system(const AlgebraPtr& a, const SimpleOrder& order) {
    DeltaSystem ds;
    ds.alg = a;
    ds.order = order;
    for (int l = 0; l < a->n_labels(); ++l) {
        ds.delta.push_back(standard_module(a, order, l));
        ds.nabla.push_back(costandard_module(a, order, l));
    }
    return ds;
}

namespace {

// [M] = sum m_l [Delta(l)] solved exactly; nullopt when not a non-negative
// integral combination. The [Delta] classes are independent because the top
// multiplicity matrix is unitriangular along any linear refinement.
std::optional<std::vector<int>> delta_multiplicities(const std::vector<int>& m_factors,
                                                     const std::vector<std::vector<int>>& delta_factors) {
    int n = (int)delta_factors.size();
    Matrix cols(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) cols.at(i, j) = rat(delta_factors[j][i]);
    Vec rhs((size_t)n);
    for (int i = 0; i < n; ++i) rhs[i] = rat(m_factors[i]);
    auto sol = solve(cols, rhs);
    if (!sol) return std::nullopt;
    // uniqueness: the columns are linearly independent, verified once by rank
    if (rank(cols) != n) return std::nullopt;
    std::vector<int> mult((size_t)n);
    for (int i = 0; i < n; ++i) {
        if ((*sol)[i].get_den() != 1 || sgn((*sol)[i]) < 0) return std::nullopt;
        mult[i] = (int)(*sol)[i].get_num().get_si();
    }
    return mult;
}

struct FiltSearch {
    const DeltaSystem& ds;
    const std::vector<Module>& stds;  // delta or the op-side delta
    uint64_t seed;
    std::map<std::string, std::optional<Filtration>> memo;
    std::vector<std::vector<int>> std_factors;

    explicit FiltSearch(const DeltaSystem& d, const std::vector<Module>& s, uint64_t sd)
        : ds(d), stds(s), seed(sd) {
        for (const auto& st : stds) std_factors.push_back(composition_factors(st));
    }

    std::optional<Filtration> search(const Module& m) {
        if (m.dim == 0) return Filtration{};
        std::string key = fingerprint(m);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::optional<Filtration> result = std::nullopt;

        auto factors = composition_factors(m);
        auto mults = delta_multiplicities(factors, std_factors);
        if (!mults) {
            memo[key] = result;
            return result;
        }
        std::vector<int> present;
        for (int l = 0; l < (int)factors.size(); ++l)
            if (factors[l] > 0) present.push_back(l);
        std::vector<int> candidates = ds.order.maximal(present);

        const Algebra& A = *m.alg;
        for (int lam : candidates) {
            // trace peel: U = A . e_lam . M must be Delta(lam)^m
            const Module& delta = stds[lam];
            int top_mult = std_factors[lam][lam];
            if (top_mult <= 0 || factors[lam] % top_mult != 0) continue;
            int copies = factors[lam] / top_mult;
            std::vector<Vec> gens;
            for (const auto& e : A.idems) {
                if (e.label != lam) continue;
                Matrix act = m.act(e.v);
                for (int c = 0; c < m.dim; ++c) {
                    Vec v = act.col(c);
                    if (!vec_is_zero(v)) gens.push_back(std::move(v));
                }
            }
            SubmoduleResult u = submodule_generated(m, gens);
            if (u.module.dim == copies * delta.dim &&
                is_isomorphic(u.module, direct_sum_power(delta, copies), seed)) {
                Module q = quotient_module(m, u.space).module;
                auto rest = search(q);
                if (rest) {
                    Filtration f;
                    f.labels_bottom_up.assign((size_t)copies, lam);
                    f.labels_bottom_up.insert(f.labels_bottom_up.end(),
                                              rest->labels_bottom_up.begin(),
                                              rest->labels_bottom_up.end());
                    result = f;
                    break;
                }
            }
            // surjection peel: kernel of some surjection M ->> Delta(lam)
            std::vector<Matrix> homs = hom_space(m, delta);
            int tried = 0;
            for (const auto& h : homs) {
                if (tried >= 3) break;
                if (rank(h) != delta.dim) continue;
                ++tried;
                Subspace ker = Subspace::span_rows(kernel_basis(h));
                Module k = submodule_from_subspace(m, ker).module;
                auto rest = search(k);
                if (rest) {
                    Filtration f = *rest;
                    f.labels_bottom_up.push_back(lam);
                    result = f;
                    break;
                }
            }
            if (result) break;
        }
        memo[key] = result;
        return result;
    }
};

}  // namespace

std::optional<Filtration> has_delta_filtration(const Module& m, const DeltaSystem& ds,
                                               FiltKind kind, uint64_t seed) {
    if (kind == FiltKind::Delta) {
        FiltSearch fs(ds, ds.delta, seed);
        return fs.search(m);
    }
    // nabla filtration of M <=> delta filtration of the dual over A^op with
    // the same order (costandard = dual of op-standard)
    AlgebraPtr op = opposite_cached(ds.alg);
    Module dm = dual_module(m, op);
    DeltaSystem ods;
    ods.alg = op;
    ods.order = ds.order;
    for (int l = 0; l < op->n_labels(); ++l)
        ods.delta.push_back(standard_module(op, ds.order, l));
    FiltSearch fs(ods, ods.delta, seed);
    auto r = fs.search(dm);
    if (!r) return std::nullopt;
    // duality reverses the chain; report in the nabla order (top of M first
    // becomes bottom of the dual), keep bottom-up convention for M itself
    std::reverse(r->labels_bottom_up.begin(), r->labels_bottom_up.end());
    return r;
}

QhVerdict is_quasi_hereditary(const AlgebraPtr& a, const SimpleOrder& order, uint64_t seed) {
    auto split = assert_split(*a);
    if (!split.split) fail(ErrorKind::NotSplit, split.message);
    QhVerdict v;
    DeltaSystem ds;
    ds.alg = a;
    ds.order = order;
    for (int l = 0; l < a->n_labels(); ++l) ds.delta.push_back(standard_module(a, order, l));
    std::ostringstream why;
    bool ends_ok = true;
    for (int l = 0; l < a->n_labels(); ++l) {
        int ed = hom_dim(ds.delta[l], ds.delta[l]);
        int tm = composition_factors(ds.delta[l])[l];
        v.end_dims.push_back(ed);
        v.top_mults.push_back(tm);
        if (ed != 1) {
            ends_ok = false;
            why << "End(Delta(" << a->label_names[l] << ")) has dimension " << ed << "; ";
        }
    }
    if (!ends_ok) {
        v.qh = false;
        v.reason = why.str();
        return v;
    }
    Module reg = regular_module(a);
    v.filt = has_delta_filtration(reg, ds, FiltKind::Delta, seed);
    v.qh = v.filt.has_value();
    if (!v.qh) v.reason = "regular module has no standard filtration";
    return v;
}

namespace {

bool heredity_step(const AlgebraPtr& cur, const SimpleOrder& order,
                   std::vector<ChainLayer>& layers, std::string& failure) {
    if (cur->dim == 0) return true;
    std::vector<int> all;
    for (int l = 0; l < cur->n_labels(); ++l) all.push_back(l);
    if (all.empty()) {
        failure = "algebra has no labels left but positive dimension";
        return false;
    }
    std::vector<int> maxima = order.maximal(all);
    std::string local_failure;
    for (int lam : maxima) {
        Vec e = vec_zero(cur->dim);
        for (const auto& id : cur->idems)
            if (id.label == lam) e = vec_add(e, id.v);
        Subspace J = ideal_generated(*cur, {e});
        // J rad J = 0
        const Subspace& rad = radical(*cur);
        bool jradj_zero = true;
        for (int i = 0; i < J.basis.rows && jradj_zero; ++i)
            for (int r = 0; r < rad.basis.rows && jradj_zero; ++r) {
                Vec jr = cur->mul(J.basis.row(i), rad.basis.row(r));
                if (vec_is_zero(jr)) continue;
                for (int k = 0; k < J.basis.rows; ++k) {
                    if (!vec_is_zero(cur->mul(jr, J.basis.row(k)))) {
                        jradj_zero = false;
                        break;
                    }
                }
            }
        if (!jradj_zero) {
            local_failure = "J rad J != 0 for class " + cur->label_names[lam];
            continue;
        }
        // J projective as a right module: left module over the opposite algebra
        AlgebraPtr op = opposite_cached(cur);
        Matrix basisT = J.basis.transpose();
        std::vector<Matrix> action;
        bool closed = true;
        for (int b = 0; b < cur->dim && closed; ++b) {
            Matrix cols = cur->right_mult(vec_unit(cur->dim, b)).mul(basisT);
            Matrix act(J.dim(), J.dim());
            for (int c = 0; c < J.dim(); ++c) {
                auto coords = J.coordinates(cols.col(c));
                if (!coords) { closed = false; break; }
                for (int r = 0; r < J.dim(); ++r) act.at(r, c) = (*coords)[r];
            }
            action.push_back(std::move(act));
        }
        if (!closed) {
            local_failure = "ideal span not closed (internal)";
            continue;
        }
        Module jr = make_module(op, std::move(action), "J-right");
        if (!is_projective(jr)) {
            local_failure = "J not projective as a right module for class " +
                            cur->label_names[lam];
            continue;
        }
        // recurse on the quotient
        AlgebraPtr q;
        try {
            q = quotient_algebra(cur, J);
        } catch (const Error& err) {
            local_failure = std::string("quotient failed: ") + err.what();
            continue;
        }
        ChainLayer layer{cur->label_names[lam], J.dim(), q->dim};
        // order restricted to surviving labels, matched by name
        std::vector<int> keep;
        for (const auto& nm : q->label_names) {
            int idx = cur->label_index(nm);
            if (idx < 0) {
                local_failure = "label bookkeeping failed";
                break;
            }
            keep.push_back(idx);
        }
        if ((int)keep.size() != q->n_labels()) continue;
        SimpleOrder sub = order.restrict_to(keep);
        layers.push_back(layer);
        if (heredity_step(q, sub, layers, failure)) return true;
        layers.pop_back();
        local_failure = failure.empty() ? local_failure : failure;
    }
    failure = local_failure.empty() ? "no maximal class yields a heredity ideal"
                                    : local_failure;
    return false;
}

}  // namespace

HeredityChain heredity_chain(const AlgebraPtr& a, const SimpleOrder& order) {
    auto split = assert_split(*a);
    if (!split.split) fail(ErrorKind::NotSplit, split.message);
    HeredityChain chain;
    std::string failure;
    chain.ok = heredity_step(a, order, chain.layers, failure);
    if (!chain.ok) chain.failure = failure;
    return chain;
}

bool is_directed(const AlgebraPtr& a, const SimpleOrder& order) {
    for (int l = 0; l < a->n_labels(); ++l) {
        Module d = standard_module(a, order, l);
        Module s = simple_module(a, l);
        if (d.dim != s.dim) return false;
    }
    return true;
}

}  // namespace qhlab
