#pragma once

#include "algebra.hpp"
#include "quiver.hpp"

namespace qhlab {

struct RelationTerm {
    Rat coeff;
    Path path;
};

// Linear combination of parallel paths (same source, same target).
using Relation = std::vector<RelationTerm>;

struct PresentationSpec {
    Quiver quiver;
    std::vector<Relation> relations;
    int degree_bound = 1;  // d: truncation degree certificate
};

struct BoundQuiverAlgebra {
    AlgebraPtr algebra;
    std::vector<Path> basis_paths;  // basis_paths[k] is the path behind basis element k
    PresentationSpec spec;
};

// Quotient of the span of paths of length <= d by the ideal generated by the
// relations inside kQ/J^{d+1}. Verifies that every path of length exactly d
// dies in the ideal (TruncationNotSaturated otherwise), so the result equals
// the bound quiver algebra whenever the relation ideal is admissible.
// Idempotents are the trivial paths, labels the vertices.
BoundQuiverAlgebra bound_quiver_algebra(const PresentationSpec& spec,
                                        const std::string& name = "A");

// Path algebra kQ of an acyclic quiver (no relations, d = longest path + 1).
BoundQuiverAlgebra path_algebra(const Quiver& q, const std::string& name = "kQ");

void validate_relation(const Quiver& q, const Relation& r);

}  // namespace qhlab
