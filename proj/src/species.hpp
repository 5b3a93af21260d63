#pragma once

#include "bimodule.hpp"
#include "qh.hpp"
#include "quiver.hpp"

namespace qhlab {

// Species data: an acyclic quiver, an algebra with an order per vertex, a
// bimodule per arrow (over (A_target, A_source)).
struct SpeciesSpec {
    Quiver quiver;
    std::vector<AlgebraPtr> vertex_alg;      // [vertex-1]
    std::vector<SimpleOrder> vertex_order;   // [vertex-1]
    std::vector<Bimodule> arrow_bimod;       // [arrow index]
};

void validate_species(const SpeciesSpec& s);

// Tensor algebra of the species: basis graded by paths, multiplication by
// tensor concatenation. Keeps the per-path tensor data for the standard
// module oracle and the Borel embedding.
struct SpeciesAlgebra {
    SpeciesSpec spec;
    AlgebraPtr algebra;
    SimpleOrder order;          // e_ij <= e_kl iff i<k or (i=k and j <=_i l)
    std::vector<Path> paths;    // block order

    struct PathBlock {
        Path path;
        int offset = 0;  // first global basis index
        int dim = 0;     // dim V_p
        int tdim = 0;    // dim of the plain tensor T_p
        Matrix proj;     // V_p <- T_p
        Matrix sect;     // T_p <- V_p
    };
    std::vector<PathBlock> blocks;
    std::vector<std::vector<int>> label_of_vertex;  // [vertex-1][vertex label] -> global label

    int block_of_path(const Path& p) const;  // -1 when absent
    // V_p (x) V_q -> V_{pq} concatenation, as a matrix of size
    // dim V_pq x (dim V_p * dim V_q); requires s(p) = t(q).
    Matrix concat_map(int pblock, int qblock) const;
    // plain-tensor level left/right algebra actions on T_p
    Matrix left_on_t(int pblock, int alg_basis_idx) const;
    Matrix right_on_t(int pblock, int alg_basis_idx) const;
    Vec embed_block(int pblock, const Vec& v) const;  // block coords -> global coords
};

SpeciesAlgebra species_algebra(const SpeciesSpec& s, const std::string& name = "T");

// Direct-formula oracle for the standard module at (vertex, vertex-label):
// the graded sum of path blocks tensored with the vertex standard, with the
// climbing action truncated to zero. Independent of the generic
// standard_module route on the assembled algebra.
Module species_standard_oracle(const SpeciesAlgebra& sa, int vertex, int vertex_label);

struct SpeciesQhVerdict {
    bool hypotheses_hold = false;  // arrowwise one-sided projectivity hypotheses
    std::vector<std::string> failed_arrows;
    bool quiver_directed = false;
    bool remark_criterion = false;  // directed case: all M_p left standardly filtered
    std::vector<std::string> unfiltered_paths;
};

SpeciesQhVerdict species_qh_criterion(const SpeciesSpec& s, uint64_t seed = 0);

}  // namespace qhlab
