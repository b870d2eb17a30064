#pragma once

#include <limits>
#include <tuple>
#include <vector>

#include "helly/base.hpp"
#include "helly/rational.hpp"

namespace helly {

// A weighted digraph for mean-cycle computations. Weights are doubled
// half-integers and must be nonnegative. Parallel edges collapse to the
// lightest one; self-loops are allowed.
struct WeightedDigraph {
    int n = 0;
    std::vector<std::tuple<int, int, Dist2>> edges;  // (from, to, weight2)
};

// Minimum mean weight of a directed cycle, exact, in original (undoubled)
// units. Karp's dynamic program over walk lengths: with D_k(v) the lightest
// k-edge walk ending at v (any start), the answer is
// min_v max_k (D_n(v) - D_k(v)) / (n - k). A simple cycle through at most
// n vertices always attains it. Throws if the digraph has no cycle.
inline Rat min_mean_cycle(const WeightedDigraph& g) {
    const int n = g.n;
    if (n <= 0) throw Error("digraph needs at least one vertex");
    for (auto [u, v, w] : g.edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error("edge endpoint out of range");
        if (w < 0) throw Error("weights must be nonnegative");
    }
    const Dist2 inf = std::numeric_limits<Dist2>::max();
    std::vector<std::vector<Dist2>> d(n + 1, std::vector<Dist2>(n, inf));
    d[0].assign(n, 0);
    for (int k = 1; k <= n; ++k)
        for (auto [u, v, w] : g.edges)
            if (d[k - 1][u] != inf)
                d[k][v] = std::min(d[k][v], d[k - 1][u] + w);

    bool has_cycle = false;
    Rat best(0);
    for (int v = 0; v < n; ++v) {
        if (d[n][v] == inf) continue;
        Rat worst(0);
        bool first = true;
        for (int k = 0; k < n; ++k) {
            if (d[k][v] == inf) continue;
            Rat r(d[n][v] - d[k][v], n - k);
            if (first || r > worst) worst = r, first = false;
        }
        if (!has_cycle || worst < best) best = worst;
        has_cycle = true;
    }
    if (!has_cycle) throw Error("digraph has no directed cycle");
    return best / 2;  // weights were doubled
}

}  // namespace helly
