#include "module.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <random>
#include <sstream>

namespace qhlab {

Matrix Module::act(const Vec& a) const {
    Matrix m = Matrix::zero(dim, dim);
    for (int i = 0; i < alg->dim; ++i)
        if (sgn(a[i]) != 0) m = m.add(action[i].scale(a[i]));
    return m;
}

Vec Module::apply(const Vec& a, const Vec& v) const {
    Vec r((size_t)dim);
    for (int i = 0; i < alg->dim; ++i)
        if (sgn(a[i]) != 0) vec_axpy(r, a[i], action[i].apply(v));
    return r;
}

Module make_module(AlgebraPtr alg, std::vector<Matrix> action, std::string name) {
    Module m;
    m.alg = std::move(alg);
    m.action = std::move(action);
    m.name = std::move(name);
    const Algebra& A = *m.alg;
    if ((int)m.action.size() != A.dim)
        fail(ErrorKind::Internal, "module needs one action matrix per basis element");
    m.dim = A.dim ? m.action[0].rows : 0;
    for (const auto& mat : m.action)
        if (mat.rows != m.dim || mat.cols != m.dim)
            fail(ErrorKind::Internal, "module action matrices must be square of equal size");
    // unit acts as identity
    if (m.act(A.unit) != Matrix::identity(m.dim))
        fail(ErrorKind::Internal, "unit does not act as identity on module " + m.name);
    // structure constants respected: rho(b_i) rho(b_j) = sum_k c_ij^k rho(b_k)
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            Matrix lhs = m.action[i].mul(m.action[j]);
            Matrix rhs = Matrix::zero(m.dim, m.dim);
            for (const auto& [k, c] : A.mult[i][j]) rhs = rhs.add(m.action[k].scale(c));
            if (!(lhs == rhs))
                fail(ErrorKind::Internal,
                     "action incompatible with structure constants in module " + m.name +
                         " at (" + A.basis_names[i] + "," + A.basis_names[j] + ")");
        }
    return m;
}

Module regular_module(const AlgebraPtr& a) {
    std::vector<Matrix> action;
    for (int i = 0; i < a->dim; ++i) action.push_back(a->left_mult(vec_unit(a->dim, i)));
    return make_module(a, std::move(action), a->name + ".regular");
}

Module zero_module(const AlgebraPtr& a) {
    std::vector<Matrix> action((size_t)a->dim, Matrix(0, 0));
    return make_module(a, std::move(action), "0");
}

Module projective_module(const AlgebraPtr& a, int label) {
    const Vec& e = a->idem_of_label(label).v;
    std::vector<Vec> gens;
    for (int k = 0; k < a->dim; ++k) gens.push_back(a->mul(vec_unit(a->dim, k), e));
    Subspace s = Subspace::span(a->dim, gens);
    Matrix basisT = s.basis.transpose();  // ambient x d
    std::vector<Matrix> action;
    for (int i = 0; i < a->dim; ++i) {
        Matrix big = a->left_mult(vec_unit(a->dim, i)).mul(basisT);  // ambient x d
        Matrix act(s.dim(), s.dim());
        for (int c = 0; c < s.dim(); ++c) {
            auto coords = s.coordinates(big.col(c));
            if (!coords) fail(ErrorKind::Internal, "projective module subspace not closed");
            for (int r = 0; r < s.dim(); ++r) act.at(r, c) = (*coords)[r];
        }
        action.push_back(std::move(act));
    }
    return make_module(a, std::move(action),
                       "P(" + a->label_names[label] + ")");
}

Module simple_module(const AlgebraPtr& a, int label) {
    Module p = projective_module(a, label);
    QuotientResult t = top(p);
    t.module.name = "L(" + a->label_names[label] + ")";
    return t.module;
}

Module direct_sum(const std::vector<Module>& parts) {
    if (parts.empty()) fail(ErrorKind::Internal, "direct sum of nothing");
    AlgebraPtr a = parts[0].alg;
    int total = 0;
    for (const auto& p : parts) {
        if (p.alg.get() != a.get()) fail(ErrorKind::AlgebraMismatch, "direct sum across algebras");
        total += p.dim;
    }
    std::vector<Matrix> action;
    for (int i = 0; i < a->dim; ++i) {
        Matrix m(total, total);
        int off = 0;
        for (const auto& p : parts) {
            for (int r = 0; r < p.dim; ++r)
                for (int c = 0; c < p.dim; ++c) m.at(off + r, off + c) = p.action[i].at(r, c);
            off += p.dim;
        }
        action.push_back(std::move(m));
    }
    std::string nm = parts[0].name;
    for (size_t i = 1; i < parts.size(); ++i) nm += "+" + parts[i].name;
    return make_module(a, std::move(action), nm);
}

Module direct_sum_power(const Module& m, int copies) {
    if (copies == 0) return zero_module(m.alg);
    std::vector<Module> parts((size_t)copies, m);
    return direct_sum(parts);
}

std::vector<Matrix> hom_space(const Module& m, const Module& n) {
    if (m.alg.get() != n.alg.get())
        fail(ErrorKind::AlgebraMismatch, "hom between modules over different algebras");
    if (m.dim == 0 || n.dim == 0) return {};
    const Algebra& A = *m.alg;
    // unknowns F (n.dim x m.dim), flattened row-major; equations per generator g:
    // rho_N(g) F - F rho_M(g) = 0
    int unknowns = n.dim * m.dim;
    std::vector<Vec> eq_rows;
    for (const auto& g : A.generators) {
        Matrix gn = n.act(g), gm = m.act(g);
        for (int r = 0; r < n.dim; ++r)
            for (int c = 0; c < m.dim; ++c) {
                Vec row((size_t)unknowns);
                // (gn F)_{rc} = sum_k gn_{rk} F_{kc}; (F gm)_{rc} = sum_k F_{rk} gm_{kc}
                for (int k = 0; k < n.dim; ++k)
                    if (sgn(gn.at(r, k)) != 0) row[k * m.dim + c] += gn.at(r, k);
                for (int k = 0; k < m.dim; ++k)
                    if (sgn(gm.at(k, c)) != 0) row[r * m.dim + k] -= gm.at(k, c);
                if (!vec_is_zero(row)) eq_rows.push_back(std::move(row));
            }
    }
    Matrix ker = eq_rows.empty() ? Matrix::identity(unknowns)
                                 : kernel_basis(Matrix::from_rows(eq_rows));
    std::vector<Matrix> basis;
    for (int i = 0; i < ker.rows; ++i) {
        Matrix f(n.dim, m.dim);
        for (int r = 0; r < n.dim; ++r)
            for (int c = 0; c < m.dim; ++c) f.at(r, c) = ker.at(i, r * m.dim + c);
        basis.push_back(std::move(f));
    }
    return basis;
}

int hom_dim(const Module& m, const Module& n) { return (int)hom_space(m, n).size(); }

bool is_intertwiner(const Module& m, const Module& n, const Matrix& f) {
    for (const auto& g : m.alg->generators)
        if (!(n.act(g).mul(f) == f.mul(m.act(g)))) return false;
    return true;
}

SubmoduleResult submodule_generated(const Module& m, const std::vector<Vec>& vectors) {
    SpanBuilder span(m.dim);
    std::vector<Vec> work;
    for (const auto& v : vectors)
        if (span.insert(v)) work.push_back(v);
    for (size_t i = 0; i < work.size(); ++i)
        for (const auto& g : m.alg->generators) {
            Vec w = m.act(g).apply(work[i]);
            if (span.insert(w)) work.push_back(w);
        }
    return submodule_from_subspace(m, span.to_subspace());
}

SubmoduleResult submodule_from_subspace(const Module& m, const Subspace& s) {
    Matrix basisT = s.basis.transpose();
    std::vector<Matrix> action;
    for (int i = 0; i < m.alg->dim; ++i) {
        Matrix big = m.action[i].mul(basisT);
        Matrix act(s.dim(), s.dim());
        for (int c = 0; c < s.dim(); ++c) {
            auto coords = s.coordinates(big.col(c));
            if (!coords) fail(ErrorKind::NotSubmodule, "subspace not action-closed");
            for (int r = 0; r < s.dim(); ++r) act.at(r, c) = (*coords)[r];
        }
        action.push_back(std::move(act));
    }
    SubmoduleResult res{make_module(m.alg, std::move(action), m.name + ".sub"), basisT, s};
    return res;
}

QuotientResult quotient_module(const Module& m, const Subspace& sub) {
    // closure check
    for (int i = 0; i < sub.basis.rows; ++i)
        for (const auto& g : m.alg->generators)
            if (!sub.contains(m.act(g).apply(sub.basis.row(i))))
                fail(ErrorKind::NotSubmodule, "quotient by a non-submodule");
    QuotientBasis qb = QuotientBasis::make(sub);
    std::vector<Matrix> action;
    for (int i = 0; i < m.alg->dim; ++i)
        action.push_back(qb.projection.mul(m.action[i]).mul(qb.section));
    QuotientResult res{make_module(m.alg, std::move(action), m.name + ".quot"),
                       qb.projection, qb.section};
    return res;
}

Subspace radical_subspace(const Module& m) {
    const Subspace& rad = radical(*m.alg);
    std::vector<Vec> vs;
    for (int i = 0; i < rad.basis.rows; ++i) {
        Matrix act = m.act(rad.basis.row(i));
        for (int c = 0; c < m.dim; ++c) vs.push_back(act.col(c));
    }
    return Subspace::span(m.dim, vs);
}

Subspace socle_subspace(const Module& m) {
    const Subspace& rad = radical(*m.alg);
    if (rad.dim() == 0) return Subspace::full(m.dim);
    std::vector<Vec> rows;
    for (int i = 0; i < rad.basis.rows; ++i) {
        Matrix act = m.act(rad.basis.row(i));
        for (int r = 0; r < m.dim; ++r) rows.push_back(act.row(r));
    }
    Matrix ker = kernel_basis(Matrix::from_rows(rows));
    return Subspace::span_rows(ker);
}

QuotientResult top(const Module& m) { return quotient_module(m, radical_subspace(m)); }

SubmoduleResult socle(const Module& m) { return submodule_from_subspace(m, socle_subspace(m)); }

std::vector<int> semisimple_label_counts(const Module& m) {
    const Algebra& A = *m.alg;
    std::vector<int> counts((size_t)A.n_labels());
    for (int l = 0; l < A.n_labels(); ++l) {
        // multiplicity of L_l = rank of e_l on the (semisimple) module,
        // divided by nothing: each copy of L_l contributes dim e_l L_l = 1
        counts[l] = rank(m.act(A.idem_of_label(l).v));
    }
    return counts;
}

std::vector<std::vector<int>> loewy_layers(const Module& m) {
    std::vector<std::vector<int>> layers;
    Module cur = m;
    while (cur.dim > 0) {
        Subspace rad = radical_subspace(cur);
        QuotientResult t = quotient_module(cur, rad);
        layers.push_back(semisimple_label_counts(t.module));
        if (rad.dim() == 0) break;
        cur = submodule_from_subspace(cur, rad).module;
    }
    return layers;
}

std::vector<int> composition_factors(const Module& m) {
    const Algebra& A = *m.alg;
    std::vector<int> counts((size_t)A.n_labels());
    for (int l = 0; l < A.n_labels(); ++l) counts[l] = rank(m.act(A.idem_of_label(l).v));
    return counts;
}

int total_length(const Module& m) {
    auto c = composition_factors(m);
    int s = 0;
    for (int x : c) s += x;
    return s;
}

bool is_isomorphic(const Module& m, const Module& n, uint64_t seed) {
    if (m.alg.get() != n.alg.get()) return false;
    if (m.dim != n.dim) return false;
    if (m.dim == 0) return true;
    if (composition_factors(m) != composition_factors(n)) return false;
    std::vector<Matrix> homs = hom_space(m, n);
    if (homs.empty()) return false;
    if ((int)homs.size() != hom_dim(n, m)) return false;
    // det(sum t_i F_i) is a polynomial of degree <= dim; evaluate at random
    // integer points. Confidence >= 1 - (dim/2^20)^5 >= 1 - 2^-40 at desk scale.
    std::seed_seq seq{seed, (uint64_t)m.dim, (uint64_t)homs.size()};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<long> dist(1, 1 << 20);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix f = Matrix::zero(n.dim, m.dim);
        for (const auto& h : homs) f = f.add(h.scale(rat(dist(rng))));
        if (sgn(determinant(f)) != 0) return true;
    }
    return false;
}

Module dual_module(const Module& m, const AlgebraPtr& op_alg) {
    if (op_alg->dim != m.alg->dim)
        fail(ErrorKind::AlgebraMismatch, "dual needs the opposite algebra of the same space");
    std::vector<Matrix> action;
    for (int i = 0; i < m.alg->dim; ++i) action.push_back(m.action[i].transpose());
    return make_module(op_alg, std::move(action), m.name + "*");
}

Module restrict_module(const Module& m, const AlgebraPtr& sub, const Matrix& emb_map) {
    std::vector<Matrix> action;
    for (int i = 0; i < sub->dim; ++i) action.push_back(m.act(emb_map.col(i)));
    return make_module(sub, std::move(action), m.name + "|" + sub->name);
}

Module tensor_modules(const Module& m, const Module& n, const AlgebraPtr& tensor_alg) {
    // tensor_alg must be tensor_algebras(m.alg, n.alg); basis (i,j) lex order
    if (tensor_alg->dim != m.alg->dim * n.alg->dim)
        fail(ErrorKind::AlgebraMismatch, "tensor algebra dimension mismatch");
    std::vector<Matrix> action;
    for (int i = 0; i < m.alg->dim; ++i)
        for (int j = 0; j < n.alg->dim; ++j) action.push_back(kron(m.action[i], n.action[j]));
    return make_module(tensor_alg, std::move(action), m.name + "(x)" + n.name);
}

namespace {

// Subspace A.e with its canonical basis; the same construction backs
// projective_module so bases line up.
Subspace left_ideal_of_idem(const Algebra& a, const Vec& e) {
    std::vector<Vec> gens;
    for (int k = 0; k < a.dim; ++k) gens.push_back(a.mul(vec_unit(a.dim, k), e));
    return Subspace::span(a.dim, gens);
}

}  // namespace

CoverResult projective_cover(const Module& m) {
    const Algebra& A = *m.alg;
    Subspace rad = radical_subspace(m);
    QuotientBasis qb = QuotientBasis::make(rad);
    QuotientResult t = quotient_module(m, rad);
    CoverResult res;
    res.top_counts.assign((size_t)A.n_labels(), 0);
    std::vector<Module> parts;
    std::vector<std::pair<int, Vec>> gens;  // (label, e-aligned generator in M)
    for (int l = 0; l < A.n_labels(); ++l) {
        const Vec& e = A.idem_of_label(l).v;
        Matrix etop = t.module.act(e);
        Subspace img = Subspace::span_rows(etop.transpose());  // e . top(M)
        res.top_counts[l] = img.dim();
        for (int k = 0; k < img.dim(); ++k) {
            Vec lift = qb.section.apply(img.basis.row(k));
            gens.emplace_back(l, m.apply(e, lift));
            parts.push_back(projective_module(m.alg, l));
        }
    }
    if (parts.empty()) {
        res.cover = zero_module(m.alg);
        res.surjection = Matrix(m.dim, 0);
        return res;
    }
    res.cover = direct_sum(parts);
    // Column c of the P(l)-block maps the c-th basis element of A.e to its
    // action on the chosen generator.
    res.surjection = Matrix(m.dim, res.cover.dim);
    int off = 0;
    for (auto& [l, gen] : gens) {
        Subspace s = left_ideal_of_idem(A, A.idem_of_label(l).v);
        for (int c = 0; c < s.dim(); ++c) {
            Vec img = m.apply(s.basis.row(c), gen);
            for (int r = 0; r < m.dim; ++r) res.surjection.at(r, off + c) = img[r];
        }
        off += s.dim();
    }
    if (rank(res.surjection) != m.dim)
        fail(ErrorKind::Internal, "projective cover surjection has deficient rank");
    return res;
}

bool is_projective(const Module& m) {
    if (m.dim == 0) return true;
    const Algebra& A = *m.alg;
    QuotientResult t = top(m);
    auto counts = semisimple_label_counts(t.module);
    int cover_dim = 0;
    for (int l = 0; l < A.n_labels(); ++l)
        if (counts[l] > 0)
            cover_dim += counts[l] * left_ideal_of_idem(A, A.idem_of_label(l).v).dim();
    return cover_dim == m.dim;
}

std::string fingerprint(const Module& m) {
    std::ostringstream os;
    os << m.alg->name << "#" << m.dim << "#";
    for (size_t i = 0; i < m.action.size(); ++i) {
        const Matrix& mat = m.action[i];
        for (size_t j = 0; j < mat.a.size(); ++j)
            if (sgn(mat.a[j]) != 0) os << i << "." << j << ":" << mat.a[j].get_str() << ";";
    }
    return os.str();
}

}  // namespace qhlab
