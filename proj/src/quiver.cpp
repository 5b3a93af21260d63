#include "quiver.hpp"

#include <algorithm>
#include <set>

namespace qhlab {

int Quiver::arrow_index(const std::string& label) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].label == label) return (int)i;
    return -1;
}

void Quiver::validate() const {
    std::set<std::string> seen;
    for (const auto& a : arrows) {
        if (a.source < 1 || a.source > n_vertices || a.target < 1 || a.target > n_vertices)
            fail(ErrorKind::Semantic, "arrow " + a.label + " references vertex out of range");
        if (!seen.insert(a.label).second)
            fail(ErrorKind::Semantic, "duplicate arrow label " + a.label);
    }
}

bool Quiver::is_acyclic() const {
    // DFS cycle detection on vertices.
    std::vector<int> state((size_t)n_vertices + 1, 0);
    std::vector<std::vector<int>> out((size_t)n_vertices + 1);
    for (const auto& a : arrows) out[a.source].push_back(a.target);
    std::vector<int> stack;
    for (int s = 1; s <= n_vertices; ++s) {
        if (state[s] != 0) continue;
        // iterative DFS
        std::vector<std::pair<int, size_t>> frames{{s, 0}};
        state[s] = 1;
        while (!frames.empty()) {
            auto& [v, idx] = frames.back();
            if (idx < out[v].size()) {
                int w = out[v][idx++];
                if (state[w] == 1) return false;
                if (state[w] == 0) {
                    state[w] = 1;
                    frames.push_back({w, 0});
                }
            } else {
                state[v] = 2;
                frames.pop_back();
            }
        }
    }
    return true;
}

bool Quiver::arrows_ascend() const {
    return std::all_of(arrows.begin(), arrows.end(),
                       [](const Arrow& a) { return a.source < a.target; });
}

bool Quiver::arrows_descend() const {
    return std::all_of(arrows.begin(), arrows.end(),
                       [](const Arrow& a) { return a.source > a.target; });
}

Path trivial_path(int vertex) {
    Path p;
    p.source = p.target = vertex;
    return p;
}

Path compose(const Quiver& q, const Path& p, const Path& after) {
    if (after.source != p.target)
        fail(ErrorKind::Semantic, "paths not composable");
    Path r;
    r.source = p.source;
    r.target = after.target;
    r.arrows = p.arrows;
    r.arrows.insert(r.arrows.end(), after.arrows.begin(), after.arrows.end());
    (void)q;
    return r;
}

int max_vertex(const Path& p, const Quiver& q) {
    int m = p.source;
    for (int ai : p.arrows) m = std::max(m, q.arrows[ai].target);
    return m;
}

std::vector<int> visited_vertices(const Path& p, const Quiver& q) {
    std::vector<int> v{p.source};
    for (int ai : p.arrows) v.push_back(q.arrows[ai].target);
    return v;
}

std::vector<Path> enumerate_paths(const Quiver& q, int max_len) {
    std::vector<Path> result;
    for (int v = 1; v <= q.n_vertices; ++v) result.push_back(trivial_path(v));

    auto label_seq = [&](const Path& p) {
        std::vector<std::string> s;
        for (int ai : p.arrows) s.push_back(q.arrows[ai].label);
        return s;
    };

    std::vector<Path> frontier = result;  // length 0
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Path> next;
        for (const auto& p : frontier)
            for (size_t ai = 0; ai < q.arrows.size(); ++ai)
                if (q.arrows[ai].source == p.target) {
                    Path np = p;
                    np.arrows.push_back((int)ai);
                    np.target = q.arrows[ai].target;
                    next.push_back(std::move(np));
                }
        std::sort(next.begin(), next.end(), [&](const Path& a, const Path& b) {
            return label_seq(a) < label_seq(b);
        });
        result.insert(result.end(), next.begin(), next.end());
        if (next.empty()) break;
        frontier = std::move(next);
    }
    return result;
}

std::string path_to_string(const Quiver& q, const Path& p) {
    if (p.is_trivial()) return "e" + std::to_string(p.source);
    // composition notation: last traversed arrow written first
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        if (!s.empty()) s += "*";
        s += q.arrows[*it].label;
    }
    return s;
}

}  // namespace qhlab
