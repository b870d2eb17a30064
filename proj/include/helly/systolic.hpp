#pragma once

#include <string>
#include <vector>

#include "helly/base.hpp"
#include "helly/graph.hpp"

namespace helly {

struct LargenessReport {
    int k = 0;
    bool k_large = true;
    std::vector<int> witness;  // shortest induced cycle of length in [4, k-1]
};

namespace detail {

// Depth-first search for an induced cycle of length exactly m through v0,
// canonical form: v0 is the smallest vertex, second < last (direction), all
// extensions ascending, so the first hit is lexicographically least.
inline bool induced_cycle_from(const FiniteGraph& g, int v0, int m,
                               std::vector<int>& path, long long& nodes,
                               const Budget& budget) {
    int t = static_cast<int>(path.size());
    if (t == m) return path[1] < path.back();  // direction canonicalization
    bool closing = t == m - 1;
    for (int u : g.neighbors(path.back())) {
        if (u <= v0) continue;
        if (++nodes > budget.max_nodes) throw BudgetExceeded(nodes);
        bool ok = true;
        for (int i = 1; ok && i < t; ++i) ok = u != path[i];
        // induced: no adjacency except to the predecessor, and to v0 only
        // when u is the closing vertex
        for (int i = 1; ok && i + 1 < t; ++i) ok = !g.adjacent(u, path[i]);
        if (ok && t >= 2 && g.adjacent(u, v0) != closing) ok = false;
        if (!ok) continue;
        path.push_back(u);
        if (induced_cycle_from(g, v0, m, path, nodes, budget)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace detail

// Whether the graph has no induced cycle of length 4..k-1. When it does, the
// witness is the lexicographically least induced cycle of the shortest
// offending length.
inline LargenessReport is_k_large(const FiniteGraph& g, int k,
                                  const Budget& budget = {}) {
    if (k < 4) throw Error("k-largeness needs k >= 4");
    LargenessReport rep;
    rep.k = k;
    long long nodes = 0;
    for (int m = 4; m <= k - 1 && m <= g.n(); ++m) {
        for (int v0 = 0; v0 < g.n(); ++v0) {
            std::vector<int> path{v0};
            if (detail::induced_cycle_from(g, v0, m, path, nodes, budget)) {
                rep.k_large = false;
                rep.witness = path;
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace helly
