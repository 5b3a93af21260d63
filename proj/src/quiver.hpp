#pragma once

#include "errors.hpp"

#include <string>
#include <vector>

namespace qhlab {

struct Arrow {
    std::string label;
    int source = 0;  // vertices are 1..n
    int target = 0;
};

struct Quiver {
    int n_vertices = 0;
    std::vector<Arrow> arrows;

    int arrow_index(const std::string& label) const;  // -1 when absent
    bool is_acyclic() const;
    // Directed in the species sense: every arrow goes from a smaller vertex
    // to a larger one.
    bool arrows_ascend() const;
    bool arrows_descend() const;
    void validate() const;
};

// A path stored in traversal order: arrows[0] is traversed first.
// In composition notation p = a_k ... a_1 this is (a_1, ..., a_k).
struct Path {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;  // indices into quiver.arrows, traversal order

    int length() const { return (int)arrows.size(); }
    bool is_trivial() const { return arrows.empty(); }
    bool operator==(const Path& o) const {
        return source == o.source && target == o.target && arrows == o.arrows;
    }
};

Path trivial_path(int vertex);

// Composition "p after q": traverse q, then p. Requires source(p)=target(q).
Path compose(const Quiver& q, const Path& p, const Path& after);

// Maximal vertex visited by p.
int max_vertex(const Path& p, const Quiver& q);

// All vertices visited, in traversal order (source first).
std::vector<int> visited_vertices(const Path& p, const Quiver& q);

// All paths of length <= max_len, trivial paths included, ordered by length
// then lexicographically on the traversal-order label sequence.
std::vector<Path> enumerate_paths(const Quiver& q, int max_len);

std::string path_to_string(const Quiver& q, const Path& p);

}  // namespace qhlab
