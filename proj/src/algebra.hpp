#pragma once

#include "matrix.hpp"
#include "errors.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qhlab {

struct Idempotent {
    Vec v;
    int label = 0;  // index into label_names
};

// Finite-dimensional unital associative algebra over Q given by structure
// constants, with a distinguished complete set of primitive orthogonal
// idempotents tagged by simple labels.
struct Algebra {
    int dim = 0;
    std::string name;
    std::vector<std::string> basis_names;
    std::vector<std::vector<SparseVec>> mult;  // mult[i][j] = b_i * b_j
    Vec unit;
    std::vector<Idempotent> idems;
    std::vector<std::string> label_names;
    std::vector<Vec> generators;  // multiplicative generating set (for hom systems)

    mutable std::optional<Subspace> radical_cache;

    Vec mul(const Vec& x, const Vec& y) const;
    Matrix left_mult(const Vec& x) const;
    Matrix right_mult(const Vec& x) const;
    int n_labels() const { return (int)label_names.size(); }
    // First idempotent carrying the label.
    const Idempotent& idem_of_label(int label) const;
    int count_label(int label) const;
    int label_index(const std::string& name) const;  // -1 when absent
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Verifies associativity on the basis, the unit, and the idempotent axioms
// (idempotency, orthogonality, sum = unit, primitivity via split corners).
// Throws NotSplit when some corner e(A/rad)e is not one-dimensional.
AlgebraPtr make_algebra(Algebra a, bool verify_primitive = true);

// Jacobson radical via the char-0 trace-form criterion, with nilpotency and
// semisimple-quotient verification.
const Subspace& radical(const Algebra& a);

struct SplitVerdict {
    bool split = true;
    int witness_idem = -1;  // index of a failing idempotent
    std::string message;
};

SplitVerdict assert_split(const Algebra& a);

// Complete set of primitive orthogonal idempotents. Starts from the supplied
// candidates when present (verifying and, if needed, splitting them), else
// decomposes the unit. Newton iteration e <- 3e^2 - 2e^3 lifts modulo rad.
std::vector<Idempotent> lift_idempotents(const Algebra& a);

AlgebraPtr opposite(const Algebra& a);

// A (x) A' on the lexicographic product basis, idempotents e_i (x) e'_j.
AlgebraPtr tensor_algebras(const AlgebraPtr& a, const AlgebraPtr& a2);

// Quotient by a two-sided ideal (given as a subspace, closure verified).
// Idempotents are the nonzero images of a's idempotents, re-verified.
AlgebraPtr quotient_algebra(const AlgebraPtr& a, const Subspace& ideal);

// Unital subalgebra on an explicit basis (closure verified); idempotent
// coordinates are given in the big algebra and must lie in the span.
AlgebraPtr subalgebra(const AlgebraPtr& big, const std::vector<Vec>& basis_vectors,
                      const std::vector<Idempotent>& idems_in_big,
                      const std::vector<std::string>& label_names,
                      const std::string& name);

AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b);

bool is_semisimple(const Algebra& a);

// Two-sided ideal generated by a set of elements.
Subspace ideal_generated(const Algebra& a, const std::vector<Vec>& gens);

// Entry (i,j) = dim e_i A e_j = multiplicity of L_i in P_j (labels).
std::vector<std::vector<int>> cartan_matrix(const Algebra& a);

// Subspace e.A.e for an idempotent e.
Subspace corner(const Algebra& a, const Vec& e);

}  // namespace qhlab
