#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matrix.hpp"

#include <random>

using namespace qhlab;

namespace {

Matrix random_int_matrix(int r, int c, std::mt19937_64& rng, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = rat(d(rng));
    return m;
}

// Independent elimination oracle: fraction-free (Bareiss) row echelon over the
// integers, then pivot normalization and back-substitution done directly.
Matrix bareiss_rref(const Matrix& input) {
    Matrix m = input;
    int rows = m.rows, cols = m.cols;
    Rat prev = 1;
    int lead = 0;
    std::vector<int> pivots;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int piv = -1;
        for (int i = lead; i < rows; ++i)
            if (sgn(m.at(i, col)) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(lead, j));
        for (int i = lead + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                m.at(i, j) = (m.at(lead, col) * m.at(i, j) - m.at(i, col) * m.at(lead, j)) / prev;
            m.at(i, col) = 0;
        }
        prev = m.at(lead, col);
        pivots.push_back(col);
        ++lead;
    }
    // normalize pivots to 1 and clear above, straightforward rational ops
    for (int i = (int)pivots.size() - 1; i >= 0; --i) {
        int pc = pivots[i];
        Rat inv = 1 / m.at(i, pc);
        for (int j = pc; j < cols; ++j) m.at(i, j) *= inv;
        for (int k = 0; k < i; ++k) {
            Rat f = m.at(k, pc);
            if (sgn(f) == 0) continue;
            for (int j = pc; j < cols; ++j) m.at(k, j) -= f * m.at(i, j);
        }
    }
    // drop zero rows for comparison
    std::vector<Vec> keep;
    for (int i = 0; i < rows; ++i)
        if (!vec_is_zero(m.row(i))) keep.push_back(m.row(i));
    return keep.empty() ? Matrix(0, cols) : Matrix::from_rows(keep);
}

Matrix nonzero_rows(const Matrix& m) {
    std::vector<Vec> keep;
    for (int i = 0; i < m.rows; ++i)
        if (!vec_is_zero(m.row(i))) keep.push_back(m.row(i));
    return keep.empty() ? Matrix(0, m.cols) : Matrix::from_rows(keep);
}

}  // namespace

TEST_CASE("rref identity and rank-1") {
    RrefResult r = rref(Matrix::identity(2));
    CHECK(r.r == Matrix::identity(2));
    CHECK(r.pivots == std::vector<int>{0, 1});

    Matrix m(2, 2);
    m.at(0, 0) = rat(2);
    m.at(0, 1) = rat(4);
    m.at(1, 0) = rat(1);
    m.at(1, 1) = rat(2);
    RrefResult r2 = rref(m);
    CHECK(r2.rank == 1);
    CHECK(r2.pivots == std::vector<int>{0});
    CHECK(r2.r.at(0, 0) == rat(1));
    CHECK(r2.r.at(0, 1) == rat(2));
    CHECK(vec_is_zero(r2.r.row(1)));
}

TEST_CASE("rref agrees with the fraction-free elimination oracle") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix m = random_int_matrix(5, 7, rng);
        Matrix ours = nonzero_rows(rref(m).r);
        Matrix oracle = bareiss_rref(m);
        CHECK(ours == oracle);
    }
}

TEST_CASE("rref is idempotent") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = random_int_matrix(4, 6, rng);
        Matrix once = rref(m).r;
        CHECK(rref(once).r == once);
    }
}

TEST_CASE("kernel: trivial cases and multiply-back oracle") {
    Matrix z = Matrix::zero(3, 3);
    CHECK(kernel_basis(z) == Matrix::identity(3));
    CHECK(kernel_basis(Matrix::identity(4)).rows == 0);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix m = random_int_matrix(4, 6, rng);
        Matrix k = kernel_basis(m);
        CHECK(k.rows + rank(m) == m.cols);  // rank-nullity
        for (int i = 0; i < k.rows; ++i) CHECK(vec_is_zero(m.apply(k.row(i))));
        // canonical form: rref of the basis is the basis itself
        CHECK(rref(k).r == k);
    }
}

TEST_CASE("solve: substitution oracle and inconsistency") {
    Vec v{rat(3), rat(-2)};
    auto x = solve(Matrix::identity(2), v);
    REQUIRE(x.has_value());
    CHECK(*x == v);

    Matrix row(1, 2);
    row.at(0, 0) = rat(1);
    row.at(0, 1) = rat(1);
    auto y = solve(row, Vec{rat(3)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] + (*y)[1] == rat(3));

    Matrix col(2, 1);
    col.at(0, 0) = rat(1);
    CHECK(!solve(col, Vec{rat(0), rat(1)}).has_value());

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = random_int_matrix(4, 5, rng);
        Vec target = m.apply(random_int_matrix(5, 1, rng).col(0));
        auto s = solve(m, target);
        REQUIRE(s.has_value());
        CHECK(m.apply(*s) == target);
    }
}

TEST_CASE("kron: identities, scalars, definition oracle, composition") {
    CHECK(kron(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));

    Matrix s(1, 1);
    s.at(0, 0) = rat(2);
    std::mt19937_64 rng(55);
    Matrix b = random_int_matrix(2, 3, rng);
    CHECK(kron(s, b) == b.scale(rat(2)));

    Matrix a = random_int_matrix(2, 2, rng);
    Matrix c = random_int_matrix(2, 2, rng);
    Matrix k = kron(a, c);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q)
                    CHECK(k.at(i * 2 + p, j * 2 + q) == a.at(i, j) * c.at(p, q));

    // kron(a,b) kron(c,d) = kron(ac, bd)
    Matrix d = random_int_matrix(3, 2, rng);
    Matrix e = random_int_matrix(2, 4, rng);
    Matrix f = random_int_matrix(2, 3, rng);
    CHECK(kron(a, d).mul(kron(e, f)) == kron(a.mul(e), d.mul(f)));

    // action on simple tensors under the lexicographic ordering
    Vec x{rat(1), rat(2)}, y{rat(3), rat(-1), rat(4)};
    Vec xy((size_t)6);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) xy[i * 3 + j] = x[i] * y[j];
    Matrix g = random_int_matrix(3, 3, rng);
    Vec lhs = kron(a, g).apply(xy);
    Vec ax = a.apply(x), gy = g.apply(y);
    Vec rhs((size_t)6);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) rhs[i * 3 + j] = ax[i] * gy[j];
    CHECK(lhs == rhs);
}

TEST_CASE("subspace canonical form, sums, intersections, quotients") {
    std::mt19937_64 rng(77);
    Matrix m = random_int_matrix(3, 5, rng);
    Subspace s = Subspace::span_rows(m);
    Subspace s2 = Subspace::span(5, {m.row(2), m.row(0), vec_add(m.row(1), m.row(0))});
    CHECK(s == s2);  // canonical form makes equality entry-wise

    Subspace inter = s.intersect(s2);
    CHECK(inter == s);
    CHECK(s.sum(s2) == s);

    QuotientBasis qb = QuotientBasis::make(s);
    CHECK(qb.qdim() == 5 - s.dim());
    CHECK(qb.projection.mul(qb.section) == Matrix::identity(qb.qdim()));
    for (int i = 0; i < s.basis.rows; ++i)
        CHECK(vec_is_zero(qb.projection.apply(s.basis.row(i))));
}

TEST_CASE("span builder insert/contains") {
    SpanBuilder sb(4);
    CHECK(sb.insert(Vec{rat(1), rat(0), rat(1), rat(0)}));
    CHECK(sb.insert(Vec{rat(0), rat(1), rat(1), rat(0)}));
    CHECK(!sb.insert(Vec{rat(1), rat(1), rat(2), rat(0)}));
    CHECK(sb.contains(Vec{rat(2), rat(-1), rat(1), rat(0)}));
    CHECK(!sb.contains(Vec{rat(0), rat(0), rat(0), rat(1)}));
    CHECK(sb.dim() == 2);
}

TEST_CASE("determinant and inverse") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m = random_int_matrix(4, 4, rng);
        Rat d = determinant(m);
        auto inv = inverse(m);
        if (sgn(d) == 0) {
            CHECK(!inv.has_value());
        } else {
            REQUIRE(inv.has_value());
            CHECK(m.mul(*inv) == Matrix::identity(4));
        }
    }
}
