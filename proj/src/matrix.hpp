#pragma once

#include "rational.hpp"

#include <optional>
#include <vector>

namespace qhlab {

using Vec = std::vector<Rat>;

// Sparse coordinate vector, indices strictly increasing, entries nonzero.
using SparseVec = std::vector<std::pair<int, Rat>>;

Vec vec_zero(int n);
Vec vec_unit(int n, int i);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& a);
void vec_axpy(Vec& y, const Rat& c, const Vec& x);  // y += c*x
Rat vec_dot(const Vec& a, const Vec& b);
SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, int n);

struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Rat> a;  // row-major

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}

    Rat& at(int i, int j) { return a[(size_t)i * cols + j]; }
    const Rat& at(int i, int j) const { return a[(size_t)i * cols + j]; }

    static Matrix identity(int n);
    static Matrix zero(int r, int c);
    static Matrix from_rows(const std::vector<Vec>& rows);
    static Matrix from_cols(const std::vector<Vec>& cols);

    Vec row(int i) const;
    Vec col(int j) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    Vec apply(const Vec& x) const;            // this * x
    Matrix mul(const Matrix& o) const;        // this * o, skips zero entries
    Matrix add(const Matrix& o) const;
    Matrix sub(const Matrix& o) const;
    Matrix scale(const Rat& c) const;
    Matrix hstack(const Matrix& o) const;
    Matrix vstack(const Matrix& o) const;
};

Matrix kron(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix r;                 // reduced row echelon form
    std::vector<int> pivots;  // pivot column per nonzero row
    int rank = 0;
};

RrefResult rref(const Matrix& m);

// Rows form a canonical basis of the right null space {x : m x = 0}.
Matrix kernel_basis(const Matrix& m);

int rank(const Matrix& m);

// Some x with m x = v, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& v);

// Inverse of a square matrix, nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

Rat determinant(const Matrix& m);

// Subspace of Q^ambient in canonical (reduced echelon) form, so equality and
// containment are entry-wise checks.
struct Subspace {
    int ambient = 0;
    Matrix basis;  // rref rows, rank many

    static Subspace zero(int ambient);
    static Subspace full(int ambient);
    static Subspace span(int ambient, const std::vector<Vec>& vectors);
    static Subspace span_rows(const Matrix& rows);

    int dim() const { return basis.rows; }
    bool is_zero() const { return basis.rows == 0; }
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }

    // Coordinates of v in this basis; nullopt when v is outside the subspace.
    std::optional<Vec> coordinates(const Vec& v) const;
};

// Incremental span builder: inserts vectors one at a time, keeping a row
// echelon basis. Cheaper than re-running rref when closing under operators.
struct SpanBuilder {
    int ambient;
    std::vector<Vec> rows;      // echelon (not reduced), pivot col strictly increasing
    std::vector<int> pivots;

    explicit SpanBuilder(int amb) : ambient(amb) {}
    // Returns true when v enlarged the span.
    bool insert(Vec v);
    bool contains(Vec v) const;
    int dim() const { return (int)rows.size(); }
    Subspace to_subspace() const;
};

// Helper for quotient spaces V / S: non-pivot coordinates of S's echelon basis
// index the quotient. project maps ambient -> quotient, section maps back.
struct QuotientBasis {
    int ambient = 0;
    Subspace sub;
    std::vector<int> free_cols;  // ambient indices forming the complement basis
    Matrix projection;           // qdim x ambient
    Matrix section;              // ambient x qdim

    static QuotientBasis make(const Subspace& sub);
    int qdim() const { return (int)free_cols.size(); }
};

}  // namespace qhlab
