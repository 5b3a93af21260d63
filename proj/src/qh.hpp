#pragma once

#include "module.hpp"

#include <optional>

namespace qhlab {

// Strict partial order on simple labels; transitive closure stored.
struct SimpleOrder {
    int n = 0;
    std::vector<std::vector<bool>> less_;

    static SimpleOrder empty(int n);
    static SimpleOrder chain(int n);           // 0 < 1 < ... < n-1
    static SimpleOrder reversed_chain(int n);  // n-1 < ... < 0
    // Pairs (a, b) meaning a < b; closure computed, antisymmetry checked.
    static SimpleOrder from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

    bool lt(int a, int b) const { return less_[a][b]; }
    bool leq(int a, int b) const { return a == b || less_[a][b]; }
    bool comparable(int a, int b) const { return a == b || less_[a][b] || less_[b][a]; }
    // Maximal within the given label set.
    std::vector<int> maximal(const std::vector<int>& labels) const;
    SimpleOrder restrict_to(const std::vector<int>& keep) const;  // reindexed
    std::vector<std::pair<int, int>> cover_pairs() const;         // all strict pairs
};

// (l, l') < (m, m') iff l <= m and l' <= m', strictly somewhere; pair (l, l')
// is indexed l * o2.n + l'.
SimpleOrder tensor_order(const SimpleOrder& o, const SimpleOrder& o2);
SimpleOrder direct_sum_order(const SimpleOrder& o, const SimpleOrder& o2);
// Labels of a below labels of b (triangular/species vertex stacking).
SimpleOrder stacked_order(const SimpleOrder& lower, const SimpleOrder& upper);

Module standard_module(const AlgebraPtr& a, const SimpleOrder& order, int label);
// Dual of the standard module over the opposite algebra (the implementation
// route for costandard modules).
Module costandard_module(const AlgebraPtr& a, const SimpleOrder& order, int label);
// Direct construction inside the injective envelope (cross-check oracle).
Module costandard_module_direct(const AlgebraPtr& a, const SimpleOrder& order, int label);

struct DeltaSystem {
    AlgebraPtr alg;
    SimpleOrder order;
    std::vector<Module> delta;
    std::vector<Module> nabla;
};

DeltaSystem build_delta_system(const AlgebraPtr& a, const SimpleOrder& order);

struct Filtration {
    // Labels of the standard subquotients, listed bottom (submodule) first.
    std::vector<int> labels_bottom_up;
};

enum class FiltKind { Delta, Nabla };

std::optional<Filtration> has_delta_filtration(const Module& m, const DeltaSystem& ds,
                                               FiltKind kind = FiltKind::Delta,
                                               uint64_t seed = 0);

struct QhVerdict {
    bool qh = false;
    std::vector<int> end_dims;       // dim End(Delta(l)) per label
    std::vector<int> top_mults;      // [Delta(l) : L_l]
    std::optional<Filtration> filt;  // of the regular module
    std::string reason;
};

// Definition-route decider: End(Delta) = k for all simples and A in filt(Delta).
QhVerdict is_quasi_hereditary(const AlgebraPtr& a, const SimpleOrder& order,
                              uint64_t seed = 0);

struct ChainLayer {
    std::string label_name;  // class peeled at this layer
    int ideal_dim = 0;
    int quotient_dim = 0;
};

struct HeredityChain {
    bool ok = false;
    std::vector<ChainLayer> layers;
    std::string failure;  // first failing layer description when !ok
};

// Ideal-chain decider: recursive heredity ideals J = AeA over maximal classes,
// exploring all maximal classes on failure.
HeredityChain heredity_chain(const AlgebraPtr& a, const SimpleOrder& order);

bool is_directed(const AlgebraPtr& a, const SimpleOrder& order);

}  // namespace qhlab
