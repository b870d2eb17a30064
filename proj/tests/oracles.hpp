#pragma once

// Reference implementations used to cross-check the library. Everything in
// this header is written straight from first definitions, favors brute force
// over cleverness, and shares no code with include/helly: distances come from
// a plain BFS, set searches re-verify their leaves from scratch, and all
// arithmetic is exact (integers, or boost::rational for cycle means).

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace oracle {

// Never compare a Rat against a plain integer with == or != (C++20 rewritten
// candidates make the heterogeneous boost operators self-recursive); compare
// Rat against Rat, or use numerator()/denominator().
using Rat = boost::rational<long long>;
using Edge = std::pair<int, int>;
using Edges = std::vector<Edge>;

// ---------------------------------------------------------------------------
// Small graph builders
// ---------------------------------------------------------------------------

inline Edges path_edges(int n) {
    Edges e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return e;
}

inline Edges cycle_edges(int n) {
    Edges e = path_edges(n);
    if (n >= 3) e.emplace_back(n - 1, 0);
    return e;
}

inline Edges complete_edges(int n) {
    Edges e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return e;
}

inline Edges star_edges(int n) {  // center 0, leaves 1..n-1
    Edges e;
    for (int v = 1; v < n; ++v) e.emplace_back(0, v);
    return e;
}

inline Edges wheel_edges(int rim) {  // rim cycle 0..rim-1 plus apex `rim`
    Edges e = cycle_edges(rim);
    for (int v = 0; v < rim; ++v) e.emplace_back(v, rim);
    return e;
}

// ---------------------------------------------------------------------------
// BFS metric
// ---------------------------------------------------------------------------

struct Metric {
    int n = 0;
    std::vector<int> d;  // row-major n*n
    int operator()(int u, int v) const { return d[u * n + v]; }
    int ecc(int v) const {
        int e = 0;
        for (int u = 0; u < n; ++u) e = std::max(e, (*this)(v, u));
        return e;
    }
    int diam() const {
        int e = 0;
        for (int v = 0; v < n; ++v) e = std::max(e, ecc(v));
        return e;
    }
};

inline Metric bfs_metric(int n, const Edges& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    Metric m;
    m.n = n;
    m.d.assign(static_cast<std::size_t>(n) * n, -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        queue.assign(1, s);
        m.d[s * n + s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int u : adj[v])
                if (m.d[s * n + u] < 0) {
                    m.d[s * n + u] = m.d[s * n + v] + 1;
                    queue.push_back(u);
                }
        }
        if (static_cast<int>(queue.size()) != n)
            throw std::runtime_error("oracle: graph is not connected");
    }
    return m;
}

inline bool edges_connected(int n, const Edges& edges) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int comps = n;
    for (auto [u, v] : edges) {
        int a = find(u), b = find(v);
        if (a != b) parent[a] = b, --comps;
    }
    return comps == 1;
}

// ---------------------------------------------------------------------------
// Helly property, straight from the ball definition
// ---------------------------------------------------------------------------
// A graph is Helly iff every family of pairwise intersecting balls has a
// common vertex. One ball per vertex with radius in {0..diam} suffices:
// repeated centers keep only the smallest radius, omitted centers can be
// given radius diam (the whole vertex set) without changing anything. Two
// balls B(u,ru), B(v,rv) intersect iff ru + rv >= d(u,v) (a geodesic between
// u and v passes through the gap). The search assigns radii in vertex order,
// keeping the running intersection as a bitmask; if a prefix intersection is
// already empty, completing the remaining radii with diam yields a pairwise
// intersecting family with empty total intersection, so the verdict is
// immediate.
inline bool is_helly_brute(int n, const Edges& edges) {
    if (n > 63) throw std::runtime_error("oracle: is_helly_brute needs n <= 63");
    Metric m = bfs_metric(n, edges);
    const int diam = m.diam();
    std::vector<std::vector<std::uint64_t>> ball(
        n, std::vector<std::uint64_t>(diam + 1, 0));
    for (int v = 0; v < n; ++v)
        for (int r = 0; r <= diam; ++r)
            for (int u = 0; u < n; ++u)
                if (m(u, v) <= r) ball[v][r] |= 1ULL << u;
    std::vector<int> radius(n, 0);
    // returns true iff some pairwise intersecting family has empty intersection
    auto dfs = [&](auto&& self, int k, std::uint64_t inter) -> bool {
        if (k == n) return false;
        int lo = 0;
        for (int u = 0; u < k; ++u) lo = std::max(lo, m(u, k) - radius[u]);
        for (int r = lo; r <= diam; ++r) {
            std::uint64_t next = inter & ball[k][r];
            if (next == 0) return true;
            radius[k] = r;
            if (self(self, k + 1, next)) return true;
        }
        return false;
    };
    std::uint64_t all = n == 63 ? ~0ULL >> 1 : (1ULL << n) - 1;
    return !dfs(dfs, 0, all);
}

// ---------------------------------------------------------------------------
// Minimal radius functions on the quarter-integer grid
// ---------------------------------------------------------------------------
// f : V -> (1/4)Z with f >= 0, f(x) + f(y) >= d(x,y) for all pairs, and f
// pointwise minimal: lowering any single value breaks feasibility, i.e.
// every x has f(x) = 0 or a partner y != x with f(x) + f(y) = d(x,y).
// Values are handled scaled by 4 throughout.

inline bool is_minimal_radius_q4(const Metric& m,
                                 const std::vector<long long>& f4) {
    const int n = m.n;
    for (int x = 0; x < n; ++x) {
        if (f4[x] < 0) return false;
        bool tight = f4[x] == 0;
        for (int y = 0; y < n; ++y) {
            long long need = 4LL * m(x, y);
            if (f4[x] + f4[y] < need) return false;
            if (x != y && f4[x] + f4[y] == need) tight = true;
        }
        if (!tight) return false;
    }
    return true;
}

// Unpruned product enumeration over 0..4*ecc(v); usable only for tiny n but
// trivially correct, so it anchors the pruned search below.
inline std::vector<std::vector<long long>> minimal_radius_q4_brute(
    int n, const Edges& edges) {
    Metric m = bfs_metric(n, edges);
    std::vector<long long> cap(n);
    for (int v = 0; v < n; ++v) cap[v] = 4LL * m.ecc(v);
    std::vector<std::vector<long long>> out;
    std::vector<long long> f(n, 0);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            if (is_minimal_radius_q4(m, f)) out.push_back(f);
            return;
        }
        for (long long v = 0; v <= cap[k]; ++v) {
            f[k] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// Depth-first enumeration with interval narrowing. For an unassigned vertex
// y and an assigned x, feasibility forces f(y) >= d(x,y) - f(x), and
// minimality forces the 1-Lipschitz bound f(y) <= f(x) + d(x,y) (expand
// f(y)'s defining maximum through the triangle inequality at x). A partner
// check prunes further: an assigned x that is not yet 0 and has no equality
// partner among assigned vertices must have some unassigned y whose interval
// still reaches d(x,y) - f(x); intervals only shrink down the tree, so a
// missing partner can never reappear. Every leaf is re-verified from scratch
// by is_minimal_radius_q4, so pruning affects speed only.
inline std::vector<std::vector<long long>> minimal_radius_q4(
    int n, const Edges& edges, long long node_cap = 1LL << 34) {
    Metric m = bfs_metric(n, edges);
    std::vector<std::vector<long long>> out;
    std::vector<long long> f(n, 0), lo(n, 0), hi(n);
    for (int v = 0; v < n; ++v) hi[v] = 4LL * m.ecc(v);
    long long nodes = 0;
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            if (is_minimal_radius_q4(m, f)) out.push_back(f);
            return;
        }
        for (long long v = lo[k]; v <= hi[k]; ++v) {
            if (++nodes > node_cap)
                throw std::runtime_error("oracle: minimal_radius_q4 node cap");
            f[k] = v;
            std::vector<long long> old_lo(n - k - 1), old_hi(n - k - 1);
            bool alive = true;
            for (int y = k + 1; y < n; ++y) {
                old_lo[y - k - 1] = lo[y];
                old_hi[y - k - 1] = hi[y];
                long long d4 = 4LL * m(k, y);
                lo[y] = std::max(lo[y], d4 - v);
                hi[y] = std::min(hi[y], d4 + v);
                if (lo[y] > hi[y]) alive = false;
            }
            if (alive) {
                for (int x = 0; x <= k && alive; ++x) {
                    if (f[x] == 0) continue;
                    bool tight = false;
                    for (int y = 0; y <= k && !tight; ++y)
                        tight = x != y && f[x] + f[y] == 4LL * m(x, y);
                    if (tight) continue;
                    bool reachable = false;
                    for (int y = k + 1; y < n && !reachable; ++y) {
                        long long want = 4LL * m(x, y) - f[x];
                        reachable = lo[y] <= want && want <= hi[y];
                    }
                    alive = reachable;
                }
                if (alive) self(self, k + 1);
            }
            for (int y = k + 1; y < n; ++y) {
                lo[y] = old_lo[y - k - 1];
                hi[y] = old_hi[y - k - 1];
            }
        }
    };
    rec(rec, 0);
    return out;
}

// Exact rank of an integer matrix. Rows are gcd-reduced after every
// elimination step, and cross-multiplications run in 128 bits, so the tiny
// matrices used here (entries are differences of small distance values,
// rank <= graph dimension) stay far from overflow.
inline int int_rank(std::vector<std::vector<long long>> rows) {
    if (rows.empty()) return 0;
    const int cols = static_cast<int>(rows[0].size());
    auto reduce = [](std::vector<long long>& r) {
        long long g = 0;
        for (long long x : r) g = std::gcd(g, x < 0 ? -x : x);
        if (g > 1)
            for (long long& x : r) x /= g;
    };
    for (auto& r : rows) reduce(r);
    int rank = 0;
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][c] == 0) continue;
            __int128 a = rows[rank][c], b = rows[r][c];
            std::vector<long long> next(cols);
            for (int j = 0; j < cols; ++j) {
                __int128 val = a * rows[r][j] - b * rows[rank][j];
                next[j] = static_cast<long long>(val);
            }
            rows[r] = std::move(next);
            reduce(rows[r]);
        }
        ++rank;
    }
    return rank;
}

// Dimension of the space of minimal radius functions, sampled on the
// quarter-integer grid. The set {f' : equality pairs of f' contain those of
// f} is the closed face through f of the polyhedral decomposition by
// equality patterns, and it is a polytope whose vertices are themselves
// quarter-integer minimal radius functions; the affine rank of its sampled
// points therefore equals the face dimension, and the maximum over f is the
// dimension of the whole space whenever every maximal face carries a
// quarter-integer point in its relative interior (verified on the graphs
// this oracle is applied to, by matching known dimensions).
inline int sampled_dimension_q4(int n, const Edges& edges,
                                long long node_cap = 1LL << 34) {
    auto pts = minimal_radius_q4(n, edges, node_cap);
    Metric m = bfs_metric(n, edges);
    const int words = (n * n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> tight(
        pts.size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (int x = 0; x < n; ++x)
            for (int y = x; y < n; ++y) {
                long long need = x == y ? 0 : 4LL * m(x, y);
                bool eq = x == y ? pts[i][x] == 0
                                 : pts[i][x] + pts[i][y] == need;
                if (eq) {
                    int bit = x * n + y;
                    tight[i][bit / 64] |= 1ULL << (bit % 64);
                }
            }
    int best = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<std::vector<long long>> rows;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            bool superset = true;
            for (int w = 0; w < words && superset; ++w)
                superset = (tight[i][w] & ~tight[j][w]) == 0;
            if (!superset || j == i) continue;
            std::vector<long long> diff(n);
            for (int v = 0; v < n; ++v) diff[v] = pts[j][v] - pts[i][v];
            rows.push_back(std::move(diff));
        }
        best = std::max(best, int_rank(std::move(rows)));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Minimum cycle mean by enumerating all simple cycles
// ---------------------------------------------------------------------------
// Weights arrive doubled (half-integers scaled by 2) and the returned mean is
// in original units. Parallel edges collapse to the lightest; self-loops are
// cycles of length 1. Empty optional when the digraph has no cycle.
inline std::optional<Rat> min_cycle_mean_brute(
    int n, const std::vector<std::tuple<int, int, long long>>& edges) {
    const long long none = -1;
    std::vector<long long> w(static_cast<std::size_t>(n) * n, none);
    for (auto [u, v, c] : edges) {
        long long& slot = w[u * n + v];
        if (slot == none || c < slot) slot = c;
    }
    std::optional<Rat> best;
    std::vector<char> used(n, 0);
    // simple cycles, enumerated with their smallest vertex first
    auto dfs = [&](auto&& self, int s, int v, long long sum, int len) -> void {
        if (w[v * n + s] != none) {
            Rat mean(sum + w[v * n + s], 2LL * len);
            if (!best || mean < *best) best = mean;
        }
        for (int u = s + 1; u < n; ++u) {
            if (used[u] || w[v * n + u] == none) continue;
            used[u] = 1;
            self(self, s, u, sum + w[v * n + u], len + 1);
            used[u] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        dfs(dfs, s, s, 0, 1);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Shortest induced cycle by subset enumeration
// ---------------------------------------------------------------------------
// Scans all vertex subsets of size 4..max_len; a subset induces a cycle iff
// every member has exactly two neighbors inside and the induced subgraph is
// connected. Returns the smallest such size, or 0 when none exists.
inline int shortest_induced_cycle_brute(int n, const Edges& edges,
                                        int max_len) {
    if (n > 30) throw std::runtime_error("oracle: induced-cycle scan needs n <= 30");
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : edges) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    const std::uint32_t full = (1u << n) - 1;
    for (int len = 4; len <= std::min(max_len, n); ++len) {
        for (std::uint32_t s = (1u << len) - 1; s <= full;) {
            bool two_regular = true;
            for (std::uint32_t rest = s; rest && two_regular;
                 rest &= rest - 1) {
                int v = std::countr_zero(rest);
                two_regular = std::popcount(adj[v] & s) == 2;
            }
            if (two_regular) {
                std::uint32_t seen = s & -s, frontier = seen;
                while (frontier) {
                    std::uint32_t next = 0;
                    for (std::uint32_t rest = frontier; rest;
                         rest &= rest - 1)
                        next |= adj[std::countr_zero(rest)];
                    frontier = next & s & ~seen;
                    seen |= frontier;
                }
                if (seen == s) return len;
            }
            // next subset of the same size (Gosper)
            std::uint32_t c = s & -s, r = s + c;
            std::uint32_t nxt = (((r ^ s) >> 2) / c) | r;
            if (nxt <= s) break;  // wrapped past the top combination
            s = nxt;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Seeded generators and exhaustive graph scans
// ---------------------------------------------------------------------------

inline Edges random_tree(int n, std::mt19937& rng) {
    Edges e;
    for (int v = 1; v < n; ++v)
        e.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    return e;
}

inline Edges random_connected_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    for (;;) {
        Edges e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) e.emplace_back(i, j);
        if (n == 1 || edges_connected(n, e)) return e;
    }
}

// Doubled weights uniform in {0..10} (= half-integers 0..5); each ordered
// pair, self-loops included, is present with probability p.
inline std::vector<std::tuple<int, int, long long>> random_digraph(
    int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::uniform_int_distribution<long long> weight(0, 10);
    std::vector<std::tuple<int, int, long long>> e;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (coin(rng)) e.emplace_back(u, v, weight(rng));
    return e;
}

// Visits every connected simple graph on n labeled vertices (n <= 8),
// ascending edge-mask order.
template <typename F>
inline void for_each_connected_graph(int n, F&& visit) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    const int bits = static_cast<int>(slots.size());
    for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
        std::array<std::uint32_t, 8> adj{};
        for (int b = 0; b < bits; ++b)
            if (mask >> b & 1) {
                adj[slots[b].first] |= 1u << slots[b].second;
                adj[slots[b].second] |= 1u << slots[b].first;
            }
        std::uint32_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t rest = frontier; rest; rest &= rest - 1)
                next |= adj[std::countr_zero(rest)];
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen != (1u << n) - 1) continue;
        Edges e;
        for (int b = 0; b < bits; ++b)
            if (mask >> b & 1) e.push_back(slots[b]);
        visit(e);
    }
}

}  // namespace oracle
