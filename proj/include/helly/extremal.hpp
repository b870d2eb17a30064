#pragma once

#include <algorithm>
#include <memory>
#include <vector>

#include "helly/base.hpp"
#include "helly/graph.hpp"
#include "helly/view.hpp"

namespace helly {

// An extremal function on a finite graph: f(x) = max_y (d(x,y) - f(y)) for
// every vertex x. These are exactly the points of the injective hull; the
// integer-valued ones are the vertices of the Helly hull, the half-integer
// ones the vertices of its first subdivision. Values are stored doubled.
using ExtremalValues = std::vector<Dist2>;

inline Dist2 doubled_dist(const FiniteGraph& g, int u, int v) {
    return 2 * static_cast<Dist2>(g.dist(u, v));
}

inline bool is_extremal(const FiniteGraph& g, const ExtremalValues& f) {
    int n = g.n();
    for (int x = 0; x < n; ++x) {
        if (f[x] < 0) return false;
        bool tight = false;  // y = x contributes gap -f(x), tight iff f(x) = 0
        for (int y = 0; y < n; ++y) {
            Dist2 gap = doubled_dist(g, x, y) - f[y];
            if (gap > f[x]) return false;  // infeasible pair
            if (gap == f[x]) tight = true;
        }
        if (!tight) return false;
    }
    return true;
}

// All extremal functions with values in (1/den)*Z, den in {1,2}, in ascending
// lexicographic order of value vectors. DFS assigns vertices in ascending
// order. Two exact prunes keep the search near the solution set: running
// value intervals for every unassigned vertex (two-sided slack plus the
// 1-Lipschitz bound, which every extremal function satisfies), and a
// tightness-capability test: an assigned vertex u with no tight partner yet
// must still have some unassigned y whose interval can reach d(u,y) - f(u),
// since intervals only shrink as the prefix grows. Leaves are re-verified.
// Throws BudgetExceeded (with the count found so far) past max_nodes.
inline std::vector<ExtremalValues> enumerate_extremal(const FiniteGraph& g,
                                                      int den,
                                                      const Budget& budget = {}) {
    if (den != 1 && den != 2) throw Error("denominator must be 1 or 2");
    if (g.n() > budget.max_vertices)
        throw Error("graph exceeds max_vertices budget");
    const int n = g.n();
    const Dist2 step = 2 / den;
    std::vector<Dist2> d2(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) d2[u * n + v] = doubled_dist(g, u, v);
    std::vector<ExtremalValues> found;
    ExtremalValues f(n, 0);
    std::vector<Dist2> lo(n, 0), hi(n);
    for (int v = 0; v < n; ++v) hi[v] = 2 * static_cast<Dist2>(g.eccentricity(v));
    std::vector<char> tight(n, 0);
    long long nodes = 0;

    auto dfs = [&](auto&& self, int k) -> void {
        if (k == n) {
            if (is_extremal(g, f)) found.push_back(f);
            return;
        }
        const Dist2 vlo = lo[k] + (step - lo[k] % step) % step;
        const Dist2 vhi = hi[k] - hi[k] % step;
        for (Dist2 v = vlo; v <= vhi; v += step) {
            if (++nodes > budget.max_nodes)
                throw BudgetExceeded(static_cast<long long>(found.size()));
            f[k] = v;
            std::vector<int> made_tight;
            if (v == 0) {
                tight[k] = 1;
                made_tight.push_back(k);
            }
            for (int u = 0; u < k; ++u) {
                if (f[u] + v != d2[u * n + k]) continue;
                if (!tight[u]) {
                    tight[u] = 1;
                    made_tight.push_back(u);
                }
                if (!tight[k]) {
                    tight[k] = 1;
                    made_tight.push_back(k);
                }
            }
            std::vector<std::pair<int, std::pair<Dist2, Dist2>>> shrunk;
            bool ok = true;
            for (int y = k + 1; y < n; ++y) {
                Dist2 d = d2[k * n + y];
                Dist2 nl = std::max({lo[y], d - v, v - d});
                Dist2 nh = std::min(hi[y], v + d);
                if (nl != lo[y] || nh != hi[y]) {
                    shrunk.push_back({y, {lo[y], hi[y]}});
                    lo[y] = nl;
                    hi[y] = nh;
                }
                if (nl > nh) {
                    ok = false;
                    break;
                }
            }
            for (int u = 0; ok && u <= k; ++u) {
                if (tight[u]) continue;
                bool possible = false;
                for (int y = k + 1; y < n && !possible; ++y) {
                    Dist2 want = d2[u * n + y] - f[u];
                    possible = want >= lo[y] && want <= hi[y];
                }
                ok = possible;
            }
            if (ok) self(self, k + 1);
            for (auto it = shrunk.rbegin(); it != shrunk.rend(); ++it) {
                lo[it->first] = it->second.first;
                hi[it->first] = it->second.second;
            }
            for (int u : made_tight) tight[u] = 0;
        }
        f[k] = 0;
    };
    dfs(dfs, 0);
    return found;
}

inline ExtremalValues vertex_distance_function(const FiniteGraph& g, int v) {
    ExtremalValues f(g.n());
    for (int x = 0; x < g.n(); ++x) f[x] = doubled_dist(g, v, x);
    return f;
}

// A graph is Helly exactly when its integer extremal functions are the vertex
// distance functions d_v themselves, i.e. the graph equals its Helly hull.
inline bool is_helly(const FiniteGraph& g, const Budget& budget = {}) {
    return static_cast<int>(enumerate_extremal(g, 1, budget).size()) == g.n();
}

struct HullResult {
    std::shared_ptr<FiniteGraph> graph;
    std::vector<ExtremalValues> points;  // hull vertex -> extremal values
    std::vector<int> embedding;          // input vertex -> hull vertex
    int edge_len2;                       // doubled edge length of the result
};

namespace detail {
inline Dist2 linf2(const ExtremalValues& a, const ExtremalValues& b) {
    Dist2 m = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::llabs(a[i] - b[i]));
    return m;
}

inline HullResult graph_on_extremals(const FiniteGraph& g, int den,
                                     const Budget& budget) {
    HullResult r;
    r.points = enumerate_extremal(g, den, budget);
    r.edge_len2 = 2 / den;
    std::vector<std::pair<int, int>> edges;
    int m = static_cast<int>(r.points.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (linf2(r.points[i], r.points[j]) <= r.edge_len2)
                edges.emplace_back(i, j);
    r.graph = std::make_shared<FiniteGraph>(m, std::move(edges));
    for (int v = 0; v < g.n(); ++v) {
        auto it = std::lower_bound(r.points.begin(), r.points.end(),
                                   vertex_distance_function(g, v));
        r.embedding.push_back(static_cast<int>(it - r.points.begin()));
    }
    return r;
}
}  // namespace detail

// Smallest Helly graph containing g isometrically: vertices are the integer
// extremal functions, edges join functions at sup distance <= 1.
inline HullResult helly_hull(const FiniteGraph& g, const Budget& budget = {}) {
    return detail::graph_on_extremals(g, 1, budget);
}

// First subdivision: half-integer extremal functions, edges at sup distance
// <= 1/2. One subdivision edge has doubled length 1.
inline HullResult subdivision(const FiniteGraph& g, const Budget& budget = {}) {
    return detail::graph_on_extremals(g, 2, budget);
}

// The clique of a hull point: all vertices z with d(x,z) <= ceil(f(x)) for
// every x. Nonempty and a clique whenever the graph is Helly.
inline std::vector<int> clique_of_point(const FiniteGraph& g,
                                        const ExtremalValues& f) {
    std::vector<int> out;
    for (int z = 0; z < g.n(); ++z) {
        bool in = true;
        for (int x = 0; in && x < g.n(); ++x) {
            Dist2 ceil2 = f[x] + (f[x] & 1);  // round half-integers up
            in = doubled_dist(g, x, z) <= ceil2;
        }
        if (in) out.push_back(z);
    }
    if (out.empty()) throw NotHelly();
    return out;
}

}  // namespace helly
