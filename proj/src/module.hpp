#pragma once

#include "algebra.hpp"

#include <cstdint>
#include <optional>

namespace qhlab {

// Finite-dimensional left module: one action matrix per algebra basis element.
struct Module {
    AlgebraPtr alg;
    int dim = 0;
    std::vector<Matrix> action;
    std::string name;

    Matrix act(const Vec& a) const;  // action of an algebra element
    Vec apply(const Vec& a, const Vec& m) const;
};

// Verifies unit action and structure-constant compatibility.
Module make_module(AlgebraPtr alg, std::vector<Matrix> action, std::string name = "M");

Module regular_module(const AlgebraPtr& a);
Module zero_module(const AlgebraPtr& a);
Module simple_module(const AlgebraPtr& a, int label);
// Left module A.e for the (first) idempotent of the label.
Module projective_module(const AlgebraPtr& a, int label);
Module direct_sum(const std::vector<Module>& parts);
Module direct_sum_power(const Module& m, int copies);

struct ModuleMap {
    const Module* src = nullptr;
    const Module* dst = nullptr;
    Matrix f;  // dst.dim x src.dim
};

// Basis of the intertwiner space Hom_A(M, N), via the stacked linear system
// over the algebra's generating set.
std::vector<Matrix> hom_space(const Module& m, const Module& n);
int hom_dim(const Module& m, const Module& n);
bool is_intertwiner(const Module& m, const Module& n, const Matrix& f);

struct SubmoduleResult {
    Module module;
    Matrix inclusion;  // ambient.dim x sub.dim
    Subspace space;
};

// Smallest action-closed subspace containing the vectors.
SubmoduleResult submodule_generated(const Module& m, const std::vector<Vec>& vectors);
SubmoduleResult submodule_from_subspace(const Module& m, const Subspace& s);  // s must be closed

struct QuotientResult {
    Module module;
    Matrix projection;  // quot.dim x ambient.dim
    Matrix section;     // ambient.dim x quot.dim (linear section, not a module map)
};

// Throws NotSubmodule when sub is not action-closed.
QuotientResult quotient_module(const Module& m, const Subspace& sub);

Subspace radical_subspace(const Module& m);      // rad(A) M
Subspace socle_subspace(const Module& m);        // annihilator of rad(A)
QuotientResult top(const Module& m);             // M / rad(A)M
SubmoduleResult socle(const Module& m);

// Multiset of simple labels per radical layer, as counts indexed by label.
std::vector<std::vector<int>> loewy_layers(const Module& m);
std::vector<int> composition_factors(const Module& m);  // counts per label
int total_length(const Module& m);

// Label counts of a semisimple module (rank of each label idempotent).
std::vector<int> semisimple_label_counts(const Module& m);

// Probabilistically complete isomorphism test (exact arithmetic; deterministic
// short-circuits on dimension, composition factors and hom dimensions, then
// Schwartz-Zippel on det of a random hom combination, 5 trials).
bool is_isomorphic(const Module& m, const Module& n, uint64_t seed = 0);

// Transposed actions, a module over opposite(A) (caller-chosen op algebra —
// must have the same underlying space as opposite(m.alg)).
Module dual_module(const Module& m, const AlgebraPtr& op_alg);

// Restriction along an algebra map given by a matrix big <- sub? No:
// pullback along emb: sub -> big; result is a module over sub.
Module restrict_module(const Module& m, const AlgebraPtr& sub, const Matrix& emb_map);

// M (x) N over A (x) A' with the lexicographic (kron) basis.
Module tensor_modules(const Module& m, const Module& n, const AlgebraPtr& tensor_alg);

// Projective cover: P(top M) with an explicit surjection.
struct CoverResult {
    Module cover;
    Matrix surjection;            // m.dim x cover.dim
    std::vector<int> top_counts;  // multiplicity of each label in top(M)
};
CoverResult projective_cover(const Module& m);

bool is_projective(const Module& m);  // cover-dimension test

std::string fingerprint(const Module& m);  // exact content hash for memoization

}  // namespace qhlab
