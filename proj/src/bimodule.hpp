#pragma once

#include "module.hpp"

namespace qhlab {

// Shared, write-once caches so that modules built along different code paths
// land over pointer-identical algebras.
AlgebraPtr opposite_cached(const AlgebraPtr& a);
AlgebraPtr enveloping_cached(const AlgebraPtr& left, const AlgebraPtr& right);  // L (x) R^op

// (C,D)-bimodule as a left module over C (x) D^op (lexicographic basis).
struct Bimodule {
    AlgebraPtr left, right;
    Module mod;  // over enveloping_cached(left, right)

    int dim() const { return mod.dim; }
    Matrix left_act(int i) const;   // action of b_i (x) 1
    Matrix right_act(int j) const;  // action of 1 (x) b_j^op  (right mult by b_j)
    Matrix left_act_elem(const Vec& c) const;
    Matrix right_act_elem(const Vec& d) const;
};

// From explicit commuting left/right action matrices (verified).
Bimodule make_bimodule(const AlgebraPtr& left, const AlgebraPtr& right,
                       const std::vector<Matrix>& left_actions,
                       const std::vector<Matrix>& right_actions, std::string name = "M");

Bimodule regular_bimodule(const AlgebraPtr& a);
// A as (A, k)- or (k, A)-bimodule style constructions use the free form:
// free (left (x) right^op)-module of the given rank.
Bimodule free_bimodule(const AlgebraPtr& left, const AlgebraPtr& right, int rank);
// L_left (x) L_right^op, one-dimensional for basic algebras.
Bimodule simple_pair_bimodule(const AlgebraPtr& left, const AlgebraPtr& right, int llabel,
                              int rlabel);
// Sub-bimodule of the regular bimodule of `amb` spanned by the given vectors
// (closure under both actions verified).
Bimodule span_sub_bimodule(const AlgebraPtr& amb, const std::vector<Vec>& vectors,
                           const std::string& name);

Module left_restrict(const Bimodule& m);                  // module over left
Module right_restrict_op(const Bimodule& m);              // module over opposite(right)
// Restrict the right action along an embedding S -> right.
Bimodule restrict_right(const Bimodule& m, const AlgebraPtr& s, const Matrix& emb);
Bimodule restrict_left(const Bimodule& m, const AlgebraPtr& s, const Matrix& emb);

struct BimoduleTensor {
    Bimodule result;     // M (x)_A N over (C, D)
    Matrix projection;   // result.dim x (M.dim * N.dim)
    Matrix section;      // (M.dim * N.dim) x result.dim
};

// M (x)_A N for M over (C,A), N over (A,D): quotient of the plain tensor by
// the middle-action relators. AlgebraMismatch when the middle algebras differ.
BimoduleTensor tensor_over_algebra(const Bimodule& m, const Bimodule& n);

bool bimodules_isomorphic(const Bimodule& a, const Bimodule& b, uint64_t seed = 0);

}  // namespace qhlab
