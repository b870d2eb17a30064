#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "helly/automorphism.hpp"
#include "helly/base.hpp"
#include "helly/view.hpp"

namespace helly {

inline Clique normalized_clique(Clique c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

inline bool is_clique(const GraphView& view, const Clique& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (!view.adjacent(c[i], c[j])) return false;
    return true;
}

inline Clique apply_to_clique(const Automorphism& g, const Clique& c) {
    Clique out;
    out.reserve(c.size());
    for (const Vertex& v : c) out.push_back(g.apply(v));
    return normalized_clique(std::move(out));
}

// Vertices adjacent to every vertex of c (and not in c), ascending.
inline std::vector<Vertex> common_neighbors(const GraphView& view,
                                            const Clique& c) {
    std::vector<Vertex> out;
    if (c.empty()) return out;
    for (const Vertex& u : view.neighbors(c[0])) {
        if (std::binary_search(c.begin(), c.end(), u)) continue;
        bool ok = true;
        for (std::size_t i = 1; ok && i < c.size(); ++i)
            ok = view.adjacent(u, c[i]);
        if (ok) out.push_back(u);
    }
    return out;
}

// Grows `seed` to an inclusion-maximal clique among vertices admitted by
// `accept`, scanning candidates in ascending order and re-collecting after
// every successful extension. Deterministic: the result depends only on the
// seed, the predicate and the view.
inline Clique maximal_clique_extend(
    const GraphView& view, Clique seed,
    const std::function<bool(const Clique&, const Vertex&)>& accept) {
    Clique c = normalized_clique(std::move(seed));
    bool grew = true;
    while (grew) {
        grew = false;
        for (const Vertex& u : common_neighbors(view, c)) {
            if (!accept(c, u)) continue;
            c.insert(std::upper_bound(c.begin(), c.end(), u), u);
            grew = true;
            break;
        }
    }
    return c;
}

}  // namespace helly
