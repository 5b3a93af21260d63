#pragma once

#include "homology.hpp"
#include "species.hpp"

#include <map>

namespace qhlab {

struct TensorQhResult {
    AlgebraPtr algebra;
    SimpleOrder order;
    DeltaSystem deltas;
};

// Tensor product of two quasi-hereditary algebras with the product order;
// verifies quasi-heredity and Delta (x) Delta' = Delta of the product.
TensorQhResult tensor_qh(const AlgebraPtr& a, const SimpleOrder& oa, const AlgebraPtr& a2,
                         const SimpleOrder& o2, uint64_t seed = 0);

// B (x) B' inside A (x) A'; the result passes check_exact_borel (asserted).
struct TensorBorelResult {
    BorelEmbedding borel;
    bool strong = false;         // computed on the output
    bool strong_expected = false;  // strong(B) and strong(B')
};

TensorBorelResult tensor_borel(const BorelEmbedding& be, const BorelEmbedding& be2,
                               uint64_t seed = 0);

enum class RegularCase { None, BothDirected, BothOpDirected, LeftSemisimple, RightSemisimple };

struct RegularPrediction {
    bool regular = false;
    RegularCase which = RegularCase::None;
};

// The regularity dichotomy for tensor Borels, evaluated on (A, A') directly:
// both directed, both opposites directed, or one factor semisimple.
RegularPrediction predict_tensor_regular(const AlgebraPtr& a, const SimpleOrder& oa,
                                         const AlgebraPtr& a2, const SimpleOrder& o2);

const char* regular_case_name(RegularCase c);

// Witness for one basis path: N over (B_target, B_source) and an isomorphism
// phi: A_target (x)_{B_target} N -> M_path as (A_target, B_source)-bimodules,
// given as a matrix in the induced module's coordinates.
struct BorelWitness {
    Bimodule n;
    Matrix phi;
};

struct SpeciesBorelInput {
    std::vector<Embedding> vertex_borel;  // B_i -> A_i, one per vertex
    std::vector<Path> basis_paths;        // script-B; empty = choose default
    std::map<std::string, BorelWitness> witnesses;  // key: path string in Q
};

struct SpeciesBorelResult {
    BorelEmbedding borel;
    std::vector<Path> basis_paths;  // the script-B actually used
    AlgebraPtr borel_algebra;
};

// Borel-of-a-species construction: assembles the species ((B_i), (N_beta)) on the
// quiver with arrows script-B and embeds it componentwise. Preconditions are
// verified with the generic checker (BQNotBorel / IsoWitnessInvalid).
SpeciesBorelResult species_borel(const SpeciesAlgebra& sa, const SpeciesBorelInput& input,
                                 uint64_t seed = 0);

// Best-effort witness finder for left-projective bimodules: N = the
// (B, right)-sub-bimodule generated by a top slice, phi = the multiplication
// map, verified; nullopt when the heuristic fails.
std::optional<BorelWitness> projective_bimodule_split(const Embedding& left_borel,
                                                      const Bimodule& m);

struct TriangularSpec {
    AlgebraPtr a1;
    SimpleOrder o1;
    AlgebraPtr a2;
    SimpleOrder o2;
    Bimodule m;  // over (a2, a1)
};

struct TriangularResult {
    SpeciesAlgebra species;  // on the quiver 1 -> 2 with a1 at 1, a2 at 2
    AlgebraPtr algebra;
    SimpleOrder order;
};

// Upper-triangular ring over (a2, a1) with corner bimodule M; requires M
// left standardly filtered over a2 (MNotFiltered).
TriangularResult triangular_matrix(const TriangularSpec& t, uint64_t seed = 0);

// Borel of the triangular ring from Borels of the corners and a witness for M.
SpeciesBorelResult triangular_borel(const TriangularResult& t, const Embedding& be1,
                                    const Embedding& be2, const Bimodule& n,
                                    const Matrix& phi, uint64_t seed = 0);

}  // namespace qhlab
