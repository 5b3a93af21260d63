#include "algebra.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>

namespace qhlab {

Vec Algebra::mul(const Vec& x, const Vec& y) const {
    Vec r((size_t)dim);
    for (int i = 0; i < dim; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (sgn(y[j]) == 0) continue;
            Rat c = x[i] * y[j];
            for (const auto& [k, v] : mult[i][j]) r[k] += c * v;
        }
    }
    return r;
}

Matrix Algebra::left_mult(const Vec& x) const {
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (int j = 0; j < dim; ++j)
            for (const auto& [k, v] : mult[i][j]) m.at(k, j) += x[i] * v;
    }
    return m;
}

Matrix Algebra::right_mult(const Vec& x) const {
    Matrix m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        if (sgn(x[j]) == 0) continue;
        for (int i = 0; i < dim; ++i)
            for (const auto& [k, v] : mult[i][j]) m.at(k, i) += x[j] * v;
    }
    return m;
}

const Idempotent& Algebra::idem_of_label(int label) const {
    for (const auto& e : idems)
        if (e.label == label) return e;
    fail(ErrorKind::Internal, "no idempotent with label " + std::to_string(label));
}

int Algebra::count_label(int label) const {
    int c = 0;
    for (const auto& e : idems)
        if (e.label == label) ++c;
    return c;
}

int Algebra::label_index(const std::string& nm) const {
    for (size_t i = 0; i < label_names.size(); ++i)
        if (label_names[i] == nm) return (int)i;
    return -1;
}

namespace {

// tr of left multiplication per basis element.
Vec basis_traces(const Algebra& a) {
    Vec t((size_t)a.dim);
    for (int k = 0; k < a.dim; ++k) {
        Rat s = 0;
        for (int l = 0; l < a.dim; ++l)
            for (const auto& [m, v] : a.mult[k][l])
                if (m == l) s += v;
        t[k] = s;
    }
    return t;
}

Subspace compute_radical(const Algebra& a) {
    // Dickson: in char 0, rad(A) = { x : tr(L_{xy}) = 0 for all y }.
    Vec t = basis_traces(a);
    Matrix gram(a.dim, a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Rat s = 0;
            for (const auto& [k, v] : a.mult[i][j]) s += v * t[k];
            gram.at(i, j) = s;
        }
    Matrix ker = kernel_basis(gram.transpose());
    return Subspace::span_rows(ker);
}

void verify_radical(const Algebra& a, const Subspace& rad) {
    // nilpotency
    Subspace power = rad;
    for (int iter = 0; iter <= a.dim && !power.is_zero(); ++iter) {
        std::vector<Vec> prods;
        for (int i = 0; i < power.basis.rows; ++i)
            for (int j = 0; j < rad.basis.rows; ++j)
                prods.push_back(a.mul(power.basis.row(i), rad.basis.row(j)));
        Subspace next = Subspace::span(a.dim, prods);
        if (next.dim() >= power.dim() && !next.is_zero())
            fail(ErrorKind::Internal, "radical candidate is not nilpotent");
        power = next;
    }
    if (!power.is_zero()) fail(ErrorKind::Internal, "radical candidate is not nilpotent");
    // semisimple quotient: radical of A/rad must vanish
    QuotientBasis qb = QuotientBasis::make(rad);
    int qd = qb.qdim();
    Algebra q;
    q.dim = qd;
    q.basis_names.resize(qd);
    q.mult.assign(qd, std::vector<SparseVec>((size_t)qd));
    for (int i = 0; i < qd; ++i)
        for (int j = 0; j < qd; ++j) {
            Vec p = a.mul(qb.section.col(i), qb.section.col(j));
            q.mult[i][j] = to_sparse(qb.projection.apply(p));
        }
    q.unit = qb.projection.apply(a.unit);
    if (compute_radical(q).dim() != 0)
        fail(ErrorKind::Internal, "quotient by radical is not semisimple");
}

}  // namespace

const Subspace& radical(const Algebra& a) {
    static std::mutex m;
    {
        std::lock_guard<std::mutex> lock(m);
        if (a.radical_cache) return *a.radical_cache;
    }
    Subspace rad = compute_radical(a);
    verify_radical(a, rad);
    std::lock_guard<std::mutex> lock(m);
    if (!a.radical_cache) a.radical_cache = std::move(rad);
    return *a.radical_cache;
}

Subspace corner(const Algebra& a, const Vec& e) {
    std::vector<Vec> vs;
    for (int k = 0; k < a.dim; ++k) vs.push_back(a.mul(e, a.mul(vec_unit(a.dim, k), e)));
    return Subspace::span(a.dim, vs);
}

namespace {

// dim of e (A/rad) f.
int corner_dim_mod_rad(const Algebra& a, const Vec& e, const Vec& f) {
    std::vector<Vec> vs;
    for (int k = 0; k < a.dim; ++k) vs.push_back(a.mul(e, a.mul(vec_unit(a.dim, k), f)));
    Subspace eaf = Subspace::span(a.dim, vs);
    Subspace meet = eaf.intersect(radical(a));
    return eaf.dim() - meet.dim();
}

void verify_algebra_axioms(const Algebra& a) {
    if ((int)a.basis_names.size() != a.dim || (int)a.unit.size() != a.dim)
        fail(ErrorKind::Internal, "algebra field sizes inconsistent");
    // unit
    for (int i = 0; i < a.dim; ++i) {
        Vec b = vec_unit(a.dim, i);
        if (a.mul(a.unit, b) != b || a.mul(b, a.unit) != b)
            fail(ErrorKind::Internal, "unit is not a two-sided identity at basis " +
                                          a.basis_names[i]);
    }
    // associativity on the basis, exploiting sparsity of the tables
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            const SparseVec& mij = a.mult[i][j];
            for (int l = 0; l < a.dim; ++l) {
                Vec lhs((size_t)a.dim), rhs((size_t)a.dim);
                for (const auto& [k, c] : mij)
                    for (const auto& [m, v] : a.mult[k][l]) lhs[m] += c * v;
                for (const auto& [k, c] : a.mult[j][l])
                    for (const auto& [m, v] : a.mult[i][k]) rhs[m] += c * v;
                if (lhs != rhs)
                    fail(ErrorKind::Internal,
                         "multiplication not associative at (" + a.basis_names[i] + "," +
                             a.basis_names[j] + "," + a.basis_names[l] + ")");
            }
        }
    // idempotents: idempotent, pairwise orthogonal, sum to unit, labels in range
    Vec sum((size_t)a.dim);
    for (size_t i = 0; i < a.idems.size(); ++i) {
        const auto& e = a.idems[i];
        if (e.label < 0 || e.label >= (int)a.label_names.size())
            fail(ErrorKind::Internal, "idempotent label out of range");
        if (a.mul(e.v, e.v) != e.v)
            fail(ErrorKind::Internal, "claimed idempotent is not idempotent");
        for (size_t j = 0; j < i; ++j) {
            if (!vec_is_zero(a.mul(e.v, a.idems[j].v)) ||
                !vec_is_zero(a.mul(a.idems[j].v, e.v)))
                fail(ErrorKind::Internal, "idempotents not orthogonal");
        }
        sum = vec_add(sum, e.v);
    }
    if (sum != a.unit) fail(ErrorKind::Internal, "idempotents do not sum to the unit");
    for (int l = 0; l < (int)a.label_names.size(); ++l)
        if (a.count_label(l) == 0)
            fail(ErrorKind::Internal, "label without idempotent: " + a.label_names[l]);
}

void verify_generators(Algebra& a) {
    if (a.generators.empty()) {
        for (int i = 0; i < a.dim; ++i) a.generators.push_back(vec_unit(a.dim, i));
        return;
    }
    SpanBuilder span(a.dim);
    std::vector<Vec> work;
    span.insert(a.unit);
    work.push_back(a.unit);
    for (const auto& g : a.generators)
        if (span.insert(g)) work.push_back(g);
    for (size_t i = 0; i < work.size(); ++i)
        for (const auto& g : a.generators) {
            Vec p = a.mul(work[i], g);
            if (span.insert(p)) work.push_back(p);
            Vec p2 = a.mul(g, work[i]);
            if (span.insert(p2)) work.push_back(p2);
        }
    if (span.dim() != a.dim) {
        // generating set incomplete; fall back to the whole basis
        a.generators.clear();
        for (int i = 0; i < a.dim; ++i) a.generators.push_back(vec_unit(a.dim, i));
    }
}

}  // namespace

AlgebraPtr make_algebra(Algebra a, bool verify_primitive) {
    verify_algebra_axioms(a);
    verify_generators(a);
    auto ptr = std::make_shared<Algebra>(std::move(a));
    if (verify_primitive) {
        const Algebra& A = *ptr;
        for (size_t i = 0; i < A.idems.size(); ++i) {
            int d = corner_dim_mod_rad(A, A.idems[i].v, A.idems[i].v);
            if (d != 1)
                fail(ErrorKind::NotSplit,
                     "corner of idempotent " + std::to_string(i) + " in " + A.name +
                         " has dimension " + std::to_string(d) + " modulo the radical");
        }
        // same label <=> equivalent
        for (size_t i = 0; i < A.idems.size(); ++i)
            for (size_t j = i + 1; j < A.idems.size(); ++j) {
                int d1 = corner_dim_mod_rad(A, A.idems[i].v, A.idems[j].v);
                int d2 = corner_dim_mod_rad(A, A.idems[j].v, A.idems[i].v);
                bool equiv = (d1 == 1 && d2 == 1);
                bool same = A.idems[i].label == A.idems[j].label;
                if (equiv != same)
                    fail(ErrorKind::Internal,
                         "idempotent labels inconsistent with equivalence in " + A.name);
            }
    }
    return ptr;
}

SplitVerdict assert_split(const Algebra& a) {
    SplitVerdict v;
    for (size_t i = 0; i < a.idems.size(); ++i) {
        int d = corner_dim_mod_rad(a, a.idems[i].v, a.idems[i].v);
        if (d != 1) {
            v.split = false;
            v.witness_idem = (int)i;
            v.message = "residue of idempotent " + std::to_string(i) + " has dimension " +
                        std::to_string(d);
            return v;
        }
    }
    return v;
}

namespace {

// Monic minimal polynomial of x inside the unital span of its powers,
// computed relative to a unit element u (u acts as 1).
std::vector<Rat> min_poly(const Algebra& a, const Vec& u, const Vec& x) {
    std::vector<Vec> powers{u};
    SpanBuilder span(a.dim);
    span.insert(u);
    Vec cur = u;
    for (int k = 1; k <= a.dim + 1; ++k) {
        cur = a.mul(cur, x);
        if (!span.insert(cur)) {
            // cur = sum c_i powers[i]; min poly = t^k - sum c_i t^i
            Matrix cols = Matrix::from_cols(powers);
            auto sol = solve(cols, cur);
            if (!sol) fail(ErrorKind::Internal, "minimal polynomial solve failed");
            std::vector<Rat> mp((size_t)k + 1);
            mp[k] = 1;
            for (int i = 0; i < k; ++i) mp[i] = -(*sol)[i];
            return mp;
        }
        powers.push_back(cur);
    }
    fail(ErrorKind::Internal, "minimal polynomial not found");
}

std::vector<Rat> poly_div_linear(const std::vector<Rat>& p, const Rat& root) {
    // p / (t - root), exact
    int d = (int)p.size() - 1;
    std::vector<Rat> q((size_t)d);
    Rat carry = 0;
    for (int i = d; i >= 1; --i) {
        q[i - 1] = p[i] + carry;
        carry = q[i - 1] * root;
    }
    return q;
}

Rat poly_eval(const std::vector<Rat>& p, const Rat& t) {
    Rat v = 0;
    for (int i = (int)p.size() - 1; i >= 0; --i) v = v * t + p[i];
    return v;
}

std::vector<Rat> rational_roots(const std::vector<Rat>& p) {
    // roots of p with rational value; p nonzero
    std::vector<Rat> roots;
    std::vector<Rat> q = p;
    // strip zero roots
    while (q.size() > 1 && sgn(q[0]) == 0) {
        roots.push_back(Rat(0));
        q.erase(q.begin());
    }
    if (q.size() <= 1) return roots;
    // integerize
    mpz_class lcm = 1;
    for (const auto& c : q) lcm = lcm / gcd(lcm, c.get_den()) * c.get_den();
    std::vector<mpz_class> z;
    for (const auto& c : q) z.push_back(mpz_class(c * lcm));
    mpz_class c0 = abs(z.front()), cd = abs(z.back());
    auto divisors = [](mpz_class n) {
        std::vector<mpz_class> ds;
        if (n == 0) return ds;
        for (mpz_class d = 1; d * d <= n && ds.size() < 4096; ++d)
            if (n % d == 0) {
                ds.push_back(d);
                if (d * d != n) ds.push_back(n / d);
            }
        return ds;
    };
    for (const auto& pnum : divisors(c0))
        for (const auto& pden : divisors(cd))
            for (int s : {1, -1}) {
                Rat cand(s * pnum, pden);
                cand.canonicalize();
                if (sgn(poly_eval(q, cand)) == 0) {
                    bool seen = false;
                    for (const auto& r : roots) seen |= (r == cand);
                    if (!seen) roots.push_back(cand);
                }
            }
    return roots;
}

// Newton lift: from e^2 = e mod nilpotents to an exact idempotent.
Vec newton_idempotent(const Algebra& a, Vec e) {
    for (int it = 0; it <= a.dim + 2; ++it) {
        Vec e2 = a.mul(e, e);
        if (e2 == e) return e;
        Vec e3 = a.mul(e2, e);
        // e <- 3e^2 - 2e^3
        Vec next = vec_sub(vec_scale(Rat(3), e2), vec_scale(Rat(2), e3));
        e = next;
    }
    fail(ErrorKind::NotSplit, "idempotent lifting did not converge");
}

// Finds an idempotent f inside the corner algebra with unit e splitting e,
// or nullopt when no rational split is visible.
std::optional<Vec> split_idempotent(const Algebra& a, const Vec& e) {
    Subspace c = corner(a, e);
    if (c.dim() <= 1) return std::nullopt;
    std::vector<Vec> candidates;
    for (int i = 0; i < c.basis.rows; ++i) candidates.push_back(c.basis.row(i));
    for (int i = 0; i < c.basis.rows && i < 6; ++i)
        for (int j = i + 1; j < c.basis.rows && j < 6; ++j)
            candidates.push_back(vec_add(c.basis.row(i), c.basis.row(j)));
    for (const auto& x : candidates) {
        std::vector<Rat> mp = min_poly(a, e, x);
        std::vector<Rat> roots = rational_roots(mp);
        for (const auto& lam : roots) {
            // g = (t-lam)^mult, h = mp/g, coprime; f = 1 - (g*u)(x) projects onto
            // the lam-primary component. Compute via repeated division.
            std::vector<Rat> h = mp;
            while (h.size() > 1 && sgn(poly_eval(h, lam)) == 0) h = poly_div_linear(h, lam);
            if (h.size() == mp.size()) continue;  // not a root
            if (h.size() <= 1) continue;          // x has one-point spectrum
            // f0 = h(x)/h(lam) is an idempotent mod nilpotents (spectral projector
            // onto lam eigenspace up to nilpotent error); Newton-lift inside eAe.
            Rat hl = poly_eval(h, lam);
            if (sgn(hl) == 0) continue;
            Vec f = vec_zero(a.dim);
            Vec cur = e;
            for (size_t i = 0; i < h.size(); ++i) {
                vec_axpy(f, h[i] / hl, cur);
                cur = a.mul(cur, x);
            }
            Vec lifted;
            try {
                lifted = newton_idempotent(a, f);
            } catch (const Error&) {
                continue;
            }
            if (vec_is_zero(lifted) || lifted == e) continue;
            // ensure f lives in the corner: f = e f e
            Vec efe = a.mul(e, a.mul(lifted, e));
            if (a.mul(efe, efe) != efe || vec_is_zero(efe) || efe == e) continue;
            return efe;
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<Idempotent> lift_idempotents(const Algebra& a) {
    std::vector<Vec> work;
    if (!a.idems.empty())
        for (const auto& e : a.idems) work.push_back(e.v);
    else
        work.push_back(a.unit);
    // make every candidate exactly idempotent (supplied ones should already be)
    for (auto& e : work) {
        if (a.mul(e, e) != e) e = newton_idempotent(a, e);
    }
    // split until all corners are one-dimensional mod rad
    std::vector<Vec> result;
    while (!work.empty()) {
        Vec e = work.back();
        work.pop_back();
        if (vec_is_zero(e)) continue;
        if (corner_dim_mod_rad(a, e, e) == 1) {
            result.push_back(e);
            continue;
        }
        auto f = split_idempotent(a, e);
        if (!f)
            fail(ErrorKind::NotSplit,
                 "idempotent has a residue algebra larger than the base field");
        work.push_back(*f);
        work.push_back(vec_sub(e, *f));
    }
    // group by equivalence to assign labels
    std::vector<Idempotent> out;
    std::vector<Vec> reps;
    for (const auto& e : result) {
        int label = -1;
        for (size_t r = 0; r < reps.size(); ++r) {
            if (corner_dim_mod_rad(a, e, reps[r]) == 1 &&
                corner_dim_mod_rad(a, reps[r], e) == 1) {
                label = (int)r;
                break;
            }
        }
        if (label < 0) {
            label = (int)reps.size();
            reps.push_back(e);
        }
        out.push_back({e, label});
    }
    return out;
}

AlgebraPtr opposite(const Algebra& a) {
    Algebra op;
    op.dim = a.dim;
    op.name = a.name + "^op";
    op.basis_names = a.basis_names;
    op.mult.assign(a.dim, std::vector<SparseVec>((size_t)a.dim));
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) op.mult[i][j] = a.mult[j][i];
    op.unit = a.unit;
    op.idems = a.idems;
    op.label_names = a.label_names;
    op.generators = a.generators;
    return make_algebra(std::move(op));
}

AlgebraPtr tensor_algebras(const AlgebraPtr& a, const AlgebraPtr& a2) {
    const Algebra &A = *a, &B = *a2;
    Algebra t;
    t.dim = A.dim * B.dim;
    t.name = A.name + "(x)" + B.name;
    t.basis_names.resize((size_t)t.dim);
    auto idx = [&](int i, int j) { return i * B.dim + j; };
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < B.dim; ++j)
            t.basis_names[idx(i, j)] = A.basis_names[i] + "(x)" + B.basis_names[j];
    t.mult.assign(t.dim, std::vector<SparseVec>((size_t)t.dim));
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < B.dim; ++j)
            for (int k = 0; k < A.dim; ++k)
                for (int l = 0; l < B.dim; ++l) {
                    SparseVec prod;
                    for (const auto& [p, u] : A.mult[i][k])
                        for (const auto& [q, v] : B.mult[j][l])
                            prod.emplace_back(idx(p, q), u * v);
                    std::sort(prod.begin(), prod.end(),
                              [](const auto& x, const auto& y) { return x.first < y.first; });
                    t.mult[idx(i, j)][idx(k, l)] = std::move(prod);
                }
    t.unit = vec_zero(t.dim);
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < B.dim; ++j)
            if (sgn(A.unit[i]) != 0 && sgn(B.unit[j]) != 0)
                t.unit[idx(i, j)] = A.unit[i] * B.unit[j];
    for (int la = 0; la < A.n_labels(); ++la)
        for (int lb = 0; lb < B.n_labels(); ++lb)
            t.label_names.push_back("(" + A.label_names[la] + "," + B.label_names[lb] + ")");
    auto pair_label = [&](int la, int lb) { return la * B.n_labels() + lb; };
    for (const auto& e : A.idems)
        for (const auto& f : B.idems) {
            Vec v = vec_zero(t.dim);
            for (int i = 0; i < A.dim; ++i)
                for (int j = 0; j < B.dim; ++j)
                    if (sgn(e.v[i]) != 0 && sgn(f.v[j]) != 0) v[idx(i, j)] = e.v[i] * f.v[j];
            t.idems.push_back({std::move(v), pair_label(e.label, f.label)});
        }
    for (const auto& g : A.generators) {
        Vec v = vec_zero(t.dim);
        for (int i = 0; i < A.dim; ++i)
            for (int j = 0; j < B.dim; ++j)
                if (sgn(g[i]) != 0 && sgn(B.unit[j]) != 0) v[idx(i, j)] = g[i] * B.unit[j];
        t.generators.push_back(std::move(v));
    }
    for (const auto& g : B.generators) {
        Vec v = vec_zero(t.dim);
        for (int i = 0; i < A.dim; ++i)
            for (int j = 0; j < B.dim; ++j)
                if (sgn(A.unit[i]) != 0 && sgn(g[j]) != 0) v[idx(i, j)] = A.unit[i] * g[j];
        t.generators.push_back(std::move(v));
    }
    return make_algebra(std::move(t));
}

AlgebraPtr quotient_algebra(const AlgebraPtr& a, const Subspace& ideal) {
    const Algebra& A = *a;
    // two-sided closure
    for (int i = 0; i < ideal.basis.rows; ++i) {
        Vec r = ideal.basis.row(i);
        for (int k = 0; k < A.dim; ++k) {
            if (!ideal.contains(A.mul(vec_unit(A.dim, k), r)) ||
                !ideal.contains(A.mul(r, vec_unit(A.dim, k))))
                fail(ErrorKind::Internal, "subspace is not a two-sided ideal");
        }
    }
    QuotientBasis qb = QuotientBasis::make(ideal);
    int qd = qb.qdim();
    Algebra q;
    q.dim = qd;
    q.name = A.name + "/J";
    for (int k = 0; k < qd; ++k) q.basis_names.push_back("[" + A.basis_names[qb.free_cols[k]] + "]");
    q.mult.assign(qd, std::vector<SparseVec>((size_t)qd));
    for (int i = 0; i < qd; ++i)
        for (int j = 0; j < qd; ++j)
            q.mult[i][j] = to_sparse(qb.projection.apply(A.mul(qb.section.col(i), qb.section.col(j))));
    q.unit = qb.projection.apply(A.unit);
    std::vector<int> label_map(A.n_labels(), -1);
    for (const auto& e : A.idems) {
        Vec img = qb.projection.apply(e.v);
        if (vec_is_zero(img)) continue;
        if (label_map[e.label] < 0) {
            label_map[e.label] = (int)q.label_names.size();
            q.label_names.push_back(A.label_names[e.label]);
        }
        q.idems.push_back({std::move(img), label_map[e.label]});
    }
    for (const auto& g : A.generators) {
        Vec img = qb.projection.apply(g);
        if (!vec_is_zero(img)) q.generators.push_back(std::move(img));
    }
    return make_algebra(std::move(q));
}

AlgebraPtr subalgebra(const AlgebraPtr& big, const std::vector<Vec>& basis_vectors,
                      const std::vector<Idempotent>& idems_in_big,
                      const std::vector<std::string>& label_names,
                      const std::string& name) {
    const Algebra& A = *big;
    Matrix cols = Matrix::from_cols(basis_vectors);
    if (rank(cols) != (int)basis_vectors.size())
        fail(ErrorKind::Semantic, "subalgebra basis is linearly dependent");
    int d = (int)basis_vectors.size();
    auto coords = [&](const Vec& v) -> Vec {
        auto sol = solve(cols, v);
        if (!sol) fail(ErrorKind::Semantic, "subalgebra is not multiplicatively closed");
        return *sol;
    };
    Algebra s;
    s.dim = d;
    s.name = name;
    for (int i = 0; i < d; ++i) s.basis_names.push_back(name + "_" + std::to_string(i));
    s.mult.assign(d, std::vector<SparseVec>((size_t)d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            s.mult[i][j] = to_sparse(coords(A.mul(basis_vectors[i], basis_vectors[j])));
    s.unit = coords(A.unit);
    s.label_names = label_names;
    for (const auto& e : idems_in_big) s.idems.push_back({coords(e.v), e.label});
    return make_algebra(std::move(s));
}

AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b) {
    const Algebra &A = *a, &B = *b;
    Algebra p;
    p.dim = A.dim + B.dim;
    p.name = A.name + "x" + B.name;
    for (const auto& n : A.basis_names) p.basis_names.push_back(n + ".1");
    for (const auto& n : B.basis_names) p.basis_names.push_back(n + ".2");
    p.mult.assign(p.dim, std::vector<SparseVec>((size_t)p.dim));
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) p.mult[i][j] = A.mult[i][j];
    for (int i = 0; i < B.dim; ++i)
        for (int j = 0; j < B.dim; ++j) {
            SparseVec sv;
            for (const auto& [k, v] : B.mult[i][j]) sv.emplace_back(A.dim + k, v);
            p.mult[A.dim + i][A.dim + j] = std::move(sv);
        }
    p.unit = vec_zero(p.dim);
    for (int i = 0; i < A.dim; ++i) p.unit[i] = A.unit[i];
    for (int j = 0; j < B.dim; ++j) p.unit[A.dim + j] = B.unit[j];
    for (const auto& l : A.label_names) p.label_names.push_back(l + ".1");
    for (const auto& l : B.label_names) p.label_names.push_back(l + ".2");
    auto emb1 = [&](const Vec& v) {
        Vec w = vec_zero(p.dim);
        for (int i = 0; i < A.dim; ++i) w[i] = v[i];
        return w;
    };
    auto emb2 = [&](const Vec& v) {
        Vec w = vec_zero(p.dim);
        for (int j = 0; j < B.dim; ++j) w[A.dim + j] = v[j];
        return w;
    };
    for (const auto& e : A.idems) p.idems.push_back({emb1(e.v), e.label});
    for (const auto& e : B.idems) p.idems.push_back({emb2(e.v), A.n_labels() + e.label});
    for (const auto& g : A.generators) p.generators.push_back(emb1(g));
    for (const auto& g : B.generators) p.generators.push_back(emb2(g));
    return make_algebra(std::move(p));
}

bool is_semisimple(const Algebra& a) { return radical(a).dim() == 0; }

Subspace ideal_generated(const Algebra& a, const std::vector<Vec>& gens) {
    SpanBuilder span(a.dim);
    std::vector<Vec> work;
    for (const auto& g : gens)
        if (span.insert(g)) work.push_back(g);
    for (size_t i = 0; i < work.size(); ++i) {
        for (int k = 0; k < a.dim; ++k) {
            Vec l = a.mul(vec_unit(a.dim, k), work[i]);
            if (span.insert(l)) work.push_back(l);
            Vec r = a.mul(work[i], vec_unit(a.dim, k));
            if (span.insert(r)) work.push_back(r);
        }
    }
    return span.to_subspace();
}

std::vector<std::vector<int>> cartan_matrix(const Algebra& a) {
    int n = a.n_labels();
    std::vector<std::vector<int>> c((size_t)n, std::vector<int>((size_t)n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec &e = a.idem_of_label(i).v, &f = a.idem_of_label(j).v;
            std::vector<Vec> vs;
            for (int k = 0; k < a.dim; ++k) vs.push_back(a.mul(e, a.mul(vec_unit(a.dim, k), f)));
            c[i][j] = Subspace::span(a.dim, vs).dim();
        }
    return c;
}

}  // namespace qhlab
