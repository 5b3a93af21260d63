#pragma once

#include "bimodule.hpp"

namespace qhlab {

// Unital algebra embedding, kept as a linear map big.dim x sub.dim.
struct Embedding {
    AlgebraPtr sub, big;
    Matrix map;

    Vec image(const Vec& x) const { return map.apply(x); }
};

// Throws NotEmbedding unless the map is unital, multiplicative and injective.
void verify_embedding(const Embedding& e);

Embedding identity_embedding(const AlgebraPtr& a);
// kron of the two maps into tensor_algebras(big1, big2).
Embedding tensor_embedding(const Embedding& e1, const Embedding& e2,
                           const AlgebraPtr& sub_tensor, const AlgebraPtr& big_tensor);

struct InduceResult {
    Module module;        // A (x)_B M over big
    Matrix projection;    // module.dim x (big.dim * m.dim)
    Matrix section;       // (big.dim * m.dim) x module.dim
    Matrix f;             // module.dim x m.dim, the canonical map m -> 1 (x) m
    bool f_injective = false;
};

// A (x)_B M as the quotient of A (x) M by < a.emb(b) (x) m - a (x) b.m >.
InduceResult induce(const Embedding& e, const Module& m);

// Def 4.7 map f_N, verified injective (throws when it is not).
ModuleMap f_map(const Embedding& e, const Module& m, const Module& induced, const Matrix& f);

// A itself as a left module over opposite(sub): action of b is right
// multiplication by emb(b). Projectivity of this module is exactness of the
// induction functor.
Module big_as_right_sub_module(const Embedding& e);

}  // namespace qhlab
