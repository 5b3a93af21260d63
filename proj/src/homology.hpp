#pragma once

#include "induction.hpp"
#include "qh.hpp"

namespace qhlab {

struct Resolution {
    Module target;
    std::vector<Module> projs;                        // P_0 .. P_len
    std::vector<std::vector<int>> proj_label_counts;  // per degree, per label
    std::vector<Matrix> diff;                         // diff[n]: P_{n+1} -> P_n
    Matrix augment;                                   // target.dim x P_0.dim
    bool reached_cap = false;

    int length() const { return (int)projs.size() - 1; }
};

// Iterated projective covers of kernels; minimal by construction (every
// differential lands in rad of its target, asserted).
Resolution minimal_resolution(const Module& m, int max_deg);

// A projective complex over `big` obtained by inducing a resolution over the
// subalgebra degreewise. Exact when big is right-projective over sub.
struct InducedResolution {
    std::vector<Module> projs;   // C_0 .. C_len (A (x)_B Q_n)
    std::vector<Matrix> diff;    // C_{n+1} -> C_n
    Matrix augment;              // X.dim x C_0.dim, X = A (x)_B M
    Module induced_target;       // X
    std::vector<InduceResult> degree_data;
    InduceResult target_data;
};

InducedResolution induce_resolution(const Embedding& e, const Resolution& r);

// Ext^n(X, Y) off a fixed projective resolution of X: dimension, cocycle
// representatives, and the data needed to reduce an arbitrary cocycle to
// coordinates in the chosen basis.
struct ExtGroup {
    int dim = 0;
    std::vector<Matrix> cocycles;  // representatives: maps P_n -> Y
    // internals for coordinate reduction
    std::vector<Matrix> hom_basis;  // basis of Hom(P_n, Y)
    Matrix reduce_cols;             // coboundary columns | representative columns
    int n_boundary = 0;
};

ExtGroup ext_group(const Resolution& r, int n, const Module& y);
// Coordinates of the class of a cocycle g: P_n -> Y in the ExtGroup basis.
Vec ext_coordinates(const ExtGroup& eg, const Matrix& g);

// Chain map P -> C lifting iso_target: (target of P) <- (target of C)?? see cpp
std::vector<Matrix> lift_chain_map(const Resolution& p, const std::vector<Module>& c_projs,
                                   const std::vector<Matrix>& c_diff, const Matrix& c_augment,
                                   const Matrix& iso_to_p_target, int up_to);

struct BorelCheck {
    bool embedding_ok = false;
    bool right_projective = false;
    bool directed = false;
    bool induce_ok = false;
    bool passed = false;
    std::vector<int> phi;  // B label -> A label
    std::vector<int> induced_dims;
    std::string message;
};

struct BorelEmbedding {
    Embedding emb;
    SimpleOrder order_big;
    BorelCheck check;
    SimpleOrder order_sub;  // transported along phi
};

// The three exact-Borel conditions: right-projectivity of A over B,
// directedness of B under the transported order, and A (x)_B L ~= Delta(phi L)
// with phi a bijection constructed by matching tops.
BorelEmbedding check_exact_borel(const Embedding& e, const SimpleOrder& order_big,
                                 uint64_t seed = 0);

bool is_strong(const BorelEmbedding& be);

struct ExtMapDegree {
    int degree = 0;
    int source_dim = 0;
    int target_dim = 0;
    int rank = 0;
    Matrix matrix;  // target_dim x source_dim (block-assembled over label pairs)
};

struct RegularityReport {
    std::vector<ExtMapDegree> degrees;  // n = 1 .. max
    bool regular = false;
    bool homological = false;
    bool hit_cap = false;
    int max_degree = 0;
};

// The induced maps Ext^n_B(L,L) -> Ext^n_A(Delta,Delta), [f] -> [id (x) f],
// computed per label pair via comparison maps to the minimal resolutions.
RegularityReport regularity_report(const BorelEmbedding& be, int max_deg = -1,
                                   uint64_t seed = 0);

bool is_regular(const BorelEmbedding& be, uint64_t seed = 0);
bool is_homological(const BorelEmbedding& be, uint64_t seed = 0);

// Ext dimension grid between the standard modules (or any family).
struct ExtTable {
    std::vector<std::string> names;
    // dims[n][i][j] = dim Ext^n(X_i, X_j), n = 0 .. max
    std::vector<std::vector<std::vector<int>>> dims;
    // shapes[i][deg] = projective label multiset of degree deg in X_i's resolution
    std::vector<std::vector<std::vector<int>>> shapes;
    bool hit_cap = false;
};

ExtTable ext_table(const std::vector<Module>& family, const std::vector<std::string>& names,
                   int max_deg);

}  // namespace qhlab
