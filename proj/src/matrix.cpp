#include "matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace qhlab {

Vec vec_zero(int n) { return Vec((size_t)n); }

Vec vec_unit(int n, int i) {
    Vec v((size_t)n);
    v[i] = 1;
    return v;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Rat& c, const Vec& a) {
    Vec r(a.size());
    if (sgn(c) == 0) return r;
    for (size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0) r[i] = c * a[i];
    return r;
}

void vec_axpy(Vec& y, const Rat& c, const Vec& x) {
    assert(y.size() == x.size());
    if (sgn(c) == 0) return;
    for (size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != 0) y[i] += c * x[i];
}

Rat vec_dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

SparseVec to_sparse(const Vec& v) {
    SparseVec s;
    for (int i = 0; i < (int)v.size(); ++i)
        if (sgn(v[i]) != 0) s.emplace_back(i, v[i]);
    return s;
}

Vec to_dense(const SparseVec& v, int n) {
    Vec d((size_t)n);
    for (const auto& [i, x] : v) d[i] = x;
    return d;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::zero(int r, int c) { return Matrix(r, c); }

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix(0, 0);
    Matrix m((int)rows.size(), (int)rows[0].size());
    for (int i = 0; i < m.rows; ++i) {
        assert((int)rows[i].size() == m.cols);
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols) {
    if (cols.empty()) return Matrix(0, 0);
    Matrix m((int)cols[0].size(), (int)cols.size());
    for (int j = 0; j < m.cols; ++j) {
        assert((int)cols[j].size() == m.rows);
        for (int i = 0; i < m.rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::row(int i) const {
    Vec v((size_t)cols);
    for (int j = 0; j < cols; ++j) v[j] = at(i, j);
    return v;
}

Vec Matrix::col(int j) const {
    Vec v((size_t)rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (sgn(at(i, j)) != 0) t.at(j, i) = at(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : a)
        if (sgn(x) != 0) return false;
    return true;
}

Vec Matrix::apply(const Vec& x) const {
    assert((int)x.size() == cols);
    Vec y((size_t)rows);
    for (int i = 0; i < rows; ++i) {
        Rat s = 0;
        for (int j = 0; j < cols; ++j) {
            const Rat& m = at(i, j);
            if (sgn(m) != 0 && sgn(x[j]) != 0) s += m * x[j];
        }
        y[i] = s;
    }
    return y;
}

Matrix Matrix::mul(const Matrix& o) const {
    assert(cols == o.rows);
    Matrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Rat& x = at(i, k);
            if (sgn(x) == 0) continue;
            for (int j = 0; j < o.cols; ++j) {
                const Rat& y = o.at(k, j);
                if (sgn(y) != 0) r.at(i, j) += x * y;
            }
        }
    return r;
}

Matrix Matrix::add(const Matrix& o) const {
    assert(rows == o.rows && cols == o.cols);
    Matrix r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
    return r;
}

Matrix Matrix::sub(const Matrix& o) const {
    assert(rows == o.rows && cols == o.cols);
    Matrix r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
    return r;
}

Matrix Matrix::scale(const Rat& c) const {
    Matrix r(rows, cols);
    if (sgn(c) == 0) return r;
    for (size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0) r.a[i] = c * a[i];
    return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
    assert(rows == o.rows);
    Matrix r(rows, cols + o.cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols; ++j) r.at(i, cols + j) = o.at(i, j);
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
    assert(cols == o.cols);
    Matrix r(rows + o.rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(rows + i, j) = o.at(i, j);
    return r;
}

// Lexicographic basis ordering of the tensor space: index (i,j) -> i*b.cols+j,
// so kron(a,b)(x (x) y) = (a x) (x) (b y).
Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            const Rat& x = a.at(i, j);
            if (sgn(x) == 0) continue;
            for (int k = 0; k < b.rows; ++k)
                for (int l = 0; l < b.cols; ++l) {
                    const Rat& y = b.at(k, l);
                    if (sgn(y) != 0) r.at(i * b.rows + k, j * b.cols + l) = x * y;
                }
        }
    return r;
}

RrefResult rref(const Matrix& m) {
    RrefResult res;
    res.r = m;
    Matrix& r = res.r;
    int lead = 0;
    for (int col = 0; col < r.cols && lead < r.rows; ++col) {
        int piv = -1;
        for (int i = lead; i < r.rows; ++i)
            if (sgn(r.at(i, col)) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(lead, j));
        Rat inv = 1 / r.at(lead, col);
        if (inv != 1)
            for (int j = col; j < r.cols; ++j)
                if (sgn(r.at(lead, j)) != 0) r.at(lead, j) *= inv;
        for (int i = 0; i < r.rows; ++i) {
            if (i == lead) continue;
            const Rat f = r.at(i, col);
            if (sgn(f) == 0) continue;
            for (int j = col; j < r.cols; ++j)
                if (sgn(r.at(lead, j)) != 0) r.at(i, j) -= f * r.at(lead, j);
        }
        res.pivots.push_back(col);
        ++lead;
    }
    res.rank = (int)res.pivots.size();
    return res;
}

int rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot((size_t)m.cols, false);
    for (int p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec> rows;
    for (int j = 0; j < m.cols; ++j) {
        if (is_pivot[j]) continue;
        Vec v((size_t)m.cols);
        v[j] = 1;
        for (int i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = -rr.r.at(i, j);
        rows.push_back(std::move(v));
    }
    if (rows.empty()) return Matrix(0, m.cols);
    // Canonicalize so subspace equality is entry-wise equality.
    return rref(Matrix::from_rows(rows)).r;
}

std::optional<Vec> solve(const Matrix& m, const Vec& v) {
    assert((int)v.size() == m.rows);
    Matrix aug = m.hstack(Matrix::from_cols({v}));
    RrefResult rr = rref(aug);
    Vec x((size_t)m.cols);
    for (int i = 0; i < rr.rank; ++i) {
        int p = rr.pivots[i];
        if (p == m.cols) return std::nullopt;  // pivot in augmented column
        x[p] = rr.r.at(i, m.cols);
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    assert(m.rows == m.cols);
    Matrix aug = m.hstack(Matrix::identity(m.rows));
    RrefResult rr = rref(aug);
    if (rr.rank < m.rows || (rr.rank > 0 && rr.pivots.back() >= m.cols)) return std::nullopt;
    for (int i = 0; i < m.rows; ++i)
        if (rr.pivots[i] != i) return std::nullopt;
    Matrix inv(m.rows, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.rows; ++j) inv.at(i, j) = rr.r.at(i, m.cols + j);
    return inv;
}

Rat determinant(const Matrix& m) {
    assert(m.rows == m.cols);
    Matrix r = m;
    Rat det = 1;
    int n = m.rows;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (sgn(r.at(i, col)) != 0) { piv = i; break; }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(r.at(piv, j), r.at(col, j));
            det = -det;
        }
        det *= r.at(col, col);
        Rat inv = 1 / r.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            Rat f = r.at(i, col) * inv;
            if (sgn(f) == 0) continue;
            for (int j = col; j < n; ++j)
                if (sgn(r.at(col, j)) != 0) r.at(i, j) -= f * r.at(col, j);
        }
    }
    return det;
}

Subspace Subspace::zero(int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Matrix(0, ambient);
    return s;
}

Subspace Subspace::full(int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Matrix::identity(ambient);
    return s;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
    if (vectors.empty()) return zero(ambient);
    RrefResult rr = rref(Matrix::from_rows(vectors));
    Subspace s;
    s.ambient = ambient;
    s.basis = Matrix(rr.rank, ambient);
    for (int i = 0; i < rr.rank; ++i)
        for (int j = 0; j < ambient; ++j) s.basis.at(i, j) = rr.r.at(i, j);
    return s;
}

Subspace Subspace::span_rows(const Matrix& rows) {
    std::vector<Vec> v;
    v.reserve(rows.rows);
    for (int i = 0; i < rows.rows; ++i) v.push_back(rows.row(i));
    Subspace s = span(rows.cols, v);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    Vec w = v;
    for (int i = 0; i < basis.rows; ++i) {
        // pivot of row i
        int p = -1;
        for (int j = 0; j < ambient; ++j)
            if (sgn(basis.at(i, j)) != 0) { p = j; break; }
        if (p < 0) continue;
        if (sgn(w[p]) != 0) vec_axpy(w, -w[p], basis.row(i));
    }
    return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
    for (int i = 0; i < other.basis.rows; ++i)
        if (!contains(other.basis.row(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    assert(ambient == other.ambient);
    std::vector<Vec> rows;
    for (int i = 0; i < basis.rows; ++i) rows.push_back(basis.row(i));
    for (int i = 0; i < other.basis.rows; ++i) rows.push_back(other.basis.row(i));
    return span(ambient, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
    assert(ambient == other.ambient);
    // x in both <=> x = u^T basis = w^T obasis; kernel trick on stacked system.
    if (dim() == 0 || other.dim() == 0) return zero(ambient);
    Matrix stacked = basis.transpose().hstack(other.basis.transpose().scale(Rat(-1)));
    Matrix ker = kernel_basis(stacked);  // rows (u | w)
    std::vector<Vec> rows;
    for (int i = 0; i < ker.rows; ++i) {
        Vec full = ker.row(i);
        Vec u(full.begin(), full.begin() + dim());
        rows.push_back(basis.transpose().apply(u));
    }
    return span(ambient, rows);
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    Vec w = v;
    Vec coords((size_t)basis.rows);
    for (int i = 0; i < basis.rows; ++i) {
        int p = -1;
        for (int j = 0; j < ambient; ++j)
            if (sgn(basis.at(i, j)) != 0) { p = j; break; }
        if (p < 0) continue;
        if (sgn(w[p]) != 0) {
            coords[i] = w[p];
            vec_axpy(w, -w[p], basis.row(i));
        }
    }
    if (!vec_is_zero(w)) return std::nullopt;
    return coords;
}

bool SpanBuilder::insert(Vec v) {
    assert((int)v.size() == ambient);
    for (size_t i = 0; i < rows.size(); ++i) {
        int p = pivots[i];
        if (sgn(v[p]) != 0) vec_axpy(v, -v[p] / rows[i][p], rows[i]);
    }
    int p = -1;
    for (int j = 0; j < ambient; ++j)
        if (sgn(v[j]) != 0) { p = j; break; }
    if (p < 0) return false;
    // keep pivot order increasing for cheap containment checks
    size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < p) ++pos;
    rows.insert(rows.begin() + pos, std::move(v));
    pivots.insert(pivots.begin() + pos, p);
    return true;
}

bool SpanBuilder::contains(Vec v) const {
    for (size_t i = 0; i < rows.size(); ++i) {
        int p = pivots[i];
        if (sgn(v[p]) != 0) vec_axpy(v, -v[p] / rows[i][p], rows[i]);
    }
    return vec_is_zero(v);
}

Subspace SpanBuilder::to_subspace() const {
    std::vector<Vec> r = rows;
    return Subspace::span(ambient, r);
}

QuotientBasis QuotientBasis::make(const Subspace& sub) {
    QuotientBasis q;
    q.ambient = sub.ambient;
    q.sub = sub;
    std::vector<bool> is_pivot((size_t)sub.ambient, false);
    std::vector<int> pivot_of_row(sub.basis.rows, -1);
    for (int i = 0; i < sub.basis.rows; ++i) {
        for (int j = 0; j < sub.ambient; ++j)
            if (sgn(sub.basis.at(i, j)) != 0) {
                is_pivot[j] = true;
                pivot_of_row[i] = j;
                break;
            }
    }
    for (int j = 0; j < sub.ambient; ++j)
        if (!is_pivot[j]) q.free_cols.push_back(j);
    int qd = (int)q.free_cols.size();
    q.projection = Matrix(qd, sub.ambient);
    q.section = Matrix(sub.ambient, qd);
    for (int k = 0; k < qd; ++k) q.section.at(q.free_cols[k], k) = 1;
    // projection of e_j: reduce e_j by sub basis, read free coordinates
    for (int j = 0; j < sub.ambient; ++j) {
        Vec e = vec_unit(sub.ambient, j);
        for (int i = 0; i < sub.basis.rows; ++i) {
            int p = pivot_of_row[i];
            if (p >= 0 && sgn(e[p]) != 0) vec_axpy(e, -e[p], sub.basis.row(i));
        }
        for (int k = 0; k < qd; ++k) q.projection.at(k, j) = e[q.free_cols[k]];
    }
    return q;
}

}  // namespace qhlab
