#pragma once

#include <optional>
#include <string>
#include <vector>

#include "helly/automorphism.hpp"
#include "helly/base.hpp"
#include "helly/clique.hpp"
#include "helly/rational.hpp"
#include "helly/view.hpp"

namespace helly {

// Transverse distance of two cliques: n such that all cross distances are
// >= n, some vertex of sigma is at distance exactly n from all of tau, and
// some vertex of tau is at distance exactly n from all of sigma. Not every
// pair of cliques has one; nullopt when the witnesses are missing.
inline std::optional<Dist2> transverse_distance(const GraphView& view,
                                                const Clique& s,
                                                const Clique& t) {
    if (s.empty() || t.empty()) return std::nullopt;
    Dist2 n = -1;
    for (const Vertex& x : s)
        for (const Vertex& y : t) {
            Dist2 d = view.dist2(x, y);
            if (n < 0 || d < n) n = d;
        }
    auto all_at = [&](const Vertex& x, const Clique& c) {
        for (const Vertex& y : c)
            if (view.dist2(x, y) != n) return false;
        return true;
    };
    bool wit_s = false, wit_t = false;
    for (const Vertex& x : s) wit_s = wit_s || all_at(x, t);
    for (const Vertex& y : t) wit_t = wit_t || all_at(y, s);
    if (!wit_s || !wit_t) return std::nullopt;
    return n;
}

struct CheckResult {
    bool ok = true;
    std::string reason;
    static CheckResult fail(std::string r) { return {false, std::move(r)}; }
};

namespace detail {

inline CheckResult check_cliques_disjoint(const GraphView& view,
                                          const std::vector<Clique>& path) {
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i].empty()) return CheckResult::fail("empty clique");
        if (!is_clique(view, path[i]))
            return CheckResult::fail("entry " + std::to_string(i) +
                                     " is not a clique");
        for (std::size_t j = i + 1; j < path.size(); ++j)
            for (const Vertex& v : path[i])
                if (std::binary_search(path[j].begin(), path[j].end(), v))
                    return CheckResult::fail("cliques " + std::to_string(i) +
                                             " and " + std::to_string(j) +
                                             " share a vertex");
    }
    return {};
}

// A single added vertex that keeps both neighbor transverse distances equal
// to L certifies non-maximality; conversely any larger valid clique yields
// such a vertex, because the original witnesses survive the extension.
inline std::optional<Vertex> maximality_violation(const GraphView& view,
                                                  const Clique& prev,
                                                  const Clique& cur,
                                                  const Clique& next,
                                                  Dist2 L2) {
    for (const Vertex& u : common_neighbors(view, cur)) {
        Clique bigger = cur;
        bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), u), u);
        if (transverse_distance(view, bigger, prev) == L2 &&
            transverse_distance(view, bigger, next) == L2)
            return u;
    }
    return std::nullopt;
}

}  // namespace detail

// Full clique-path check: pairwise disjoint cliques, transverse distance
// (j-i)*L between entries i < j, and interior cliques maximal for their
// neighbor conditions.
inline CheckResult is_clique_path(const GraphView& view,
                                  const std::vector<Clique>& path, Dist2 L2) {
    if (L2 <= 0) return CheckResult::fail("L must be positive");
    if (path.size() < 2) return CheckResult::fail("need at least two cliques");
    if (auto r = detail::check_cliques_disjoint(view, path); !r.ok) return r;
    int n = static_cast<int>(path.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (transverse_distance(view, path[i], path[j]) !=
                static_cast<Dist2>(j - i) * L2)
                return CheckResult::fail(
                    "transverse distance of entries " + std::to_string(i) +
                    "," + std::to_string(j) + " is not (j-i)L");
    for (int i = 1; i + 1 < n; ++i)
        if (auto u = detail::maximality_violation(view, path[i - 1], path[i],
                                                  path[i + 1], L2))
            return CheckResult::fail("entry " + std::to_string(i) +
                                     " is not maximal");
    return {};
}

// Local check: every three consecutive cliques form an L-clique-path.
inline CheckResult is_local_clique_path(const GraphView& view,
                                        const std::vector<Clique>& path,
                                        Dist2 L2) {
    if (L2 <= 0) return CheckResult::fail("L must be positive");
    if (path.size() < 2) return CheckResult::fail("need at least two cliques");
    if (path.size() == 2) {
        if (auto r = detail::check_cliques_disjoint(view, path); !r.ok)
            return r;
        if (transverse_distance(view, path[0], path[1]) != L2)
            return CheckResult::fail("consecutive transverse distance not L");
        return {};
    }
    for (std::size_t i = 0; i + 2 < path.size(); ++i) {
        std::vector<Clique> triple(path.begin() + i, path.begin() + i + 3);
        if (auto r = is_clique_path(view, triple, L2); !r.ok) {
            r.reason = "triple at " + std::to_string(i) + ": " + r.reason;
            return r;
        }
    }
    return {};
}

namespace detail {

// Spine construction: repeatedly pick (ascending-first) a penultimate
// two-vertex clique from Helly ball intersections, then maximalize the
// interior cliques against their neighbors inside the geodesic interval
// between the chosen end vertices.
inline std::vector<Clique> build_unit_spine(const GraphView& view,
                                            const Clique& s, const Clique& t,
                                            Dist2 U, int steps) {
    if (steps <= 1) return {s, t};
    // witnesses realizing the transverse distance on each side
    auto witness = [&](const Clique& a, const Clique& b, Dist2 r2) {
        for (const Vertex& x : a) {
            bool ok = true;
            for (const Vertex& y : b) ok = ok && view.dist2(x, y) == r2;
            if (ok) return x;
        }
        throw NotTransverse("transverse witness disappeared");
    };
    Dist2 total = static_cast<Dist2>(steps) * U;
    Vertex x0 = witness(s, t, total), xn = witness(t, s, total);

    std::vector<std::pair<Vertex, Dist2>> balls;
    for (const Vertex& v : s) balls.emplace_back(v, total - U);
    balls.emplace_back(xn, U);
    auto xs = view.intersect_balls(balls);
    if (xs.empty()) throw EmptyIntersection();
    Vertex x = xs.front();

    balls.clear();
    for (const Vertex& v : t) balls.emplace_back(v, U);
    balls.emplace_back(x0, total - U);
    balls.emplace_back(x, U);
    auto ys = view.intersect_balls(balls);
    if (ys.empty()) throw EmptyIntersection();
    Vertex y = ys.front();

    Clique mid = normalized_clique({x, y});
    std::vector<Clique> path = build_unit_spine(view, s, mid, U, steps - 1);
    path.push_back(t);
    return path;
}

// One fixpoint maximalization sweep over the interior of a path whose ends
// stay fixed. Candidates are confined to the geodesic interval between x0
// and xn, which every admissible extension satisfies anyway.
inline void maximalize_interior(const GraphView& view,
                                std::vector<Clique>& path, Dist2 L2) {
    int n = static_cast<int>(path.size()) - 1;
    if (n < 2) return;
    Dist2 total = static_cast<Dist2>(n) * L2;
    Vertex x0 = path.front().front(), xn = path.back().front();
    for (const Vertex& v : path.front())
        if (transverse_distance(view, {v}, path.back()) == total) {
            x0 = v;  // first witness at the exact path length
            break;
        }
    for (const Vertex& v : path.back())
        if (transverse_distance(view, {v}, path.front()) == total) {
            xn = v;
            break;
        }
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 1; i < n; ++i) {
            Clique before = path[i];
            path[i] = maximal_clique_extend(
                view, path[i], [&](const Clique& c, const Vertex& u) {
                    if (view.dist2(x0, u) != static_cast<Dist2>(i) * L2 ||
                        view.dist2(u, xn) != static_cast<Dist2>(n - i) * L2)
                        return false;
                    Clique bigger = c;
                    bigger.insert(
                        std::upper_bound(bigger.begin(), bigger.end(), u), u);
                    return transverse_distance(view, bigger, path[i - 1]) ==
                               L2 &&
                           transverse_distance(view, bigger, path[i + 1]) ==
                               L2;
                });
            grew = grew || path[i] != before;
        }
    }
}

}  // namespace detail

// Builds an L-clique-path from sigma to tau per the existence construction:
// a unit-step spine from Helly ball intersections, subsampled to step L,
// then interior maximalization. The result is always re-verified.
inline std::vector<Clique> build_clique_path(const GraphView& view, Clique s,
                                             Clique t, Dist2 L2) {
    s = normalized_clique(std::move(s));
    t = normalized_clique(std::move(t));
    if (L2 <= 0 || L2 % view.edge_len2() != 0)
        throw NotTransverse("L must be a positive multiple of the edge length");
    if (!is_clique(view, s) || !is_clique(view, t))
        throw NotTransverse("input is not a clique");
    auto td = transverse_distance(view, s, t);
    if (!td) throw NotTransverse("cliques have no transverse distance");
    if (*td == 0 || *td % L2 != 0)
        throw NotTransverse("transverse distance is not a positive multiple of L");
    int n = static_cast<int>(*td / L2);
    int unit_steps = static_cast<int>(*td / view.edge_len2());

    std::vector<Clique> fine = detail::build_unit_spine(
        view, s, t, view.edge_len2(), unit_steps);
    std::vector<Clique> path;
    int stride = static_cast<int>(L2 / view.edge_len2());
    for (int i = 0; i <= n; ++i) path.push_back(fine[i * stride]);
    detail::maximalize_interior(view, path, L2);

    if (auto r = is_clique_path(view, path, L2); !r.ok)
        throw Error("constructed path failed verification: " + r.reason);
    return path;
}

// Checks the local-to-global statement on a concrete window: the path must
// be a local L-clique-path, and then all pairwise clique distances must be
// at least |i-j|*L.
inline CheckResult verify_local_to_global(const GraphView& view,
                                          const std::vector<Clique>& path,
                                          Dist2 L2) {
    if (auto r = is_local_clique_path(view, path, L2); !r.ok) return r;
    for (std::size_t i = 0; i < path.size(); ++i)
        for (std::size_t j = i + 1; j < path.size(); ++j) {
            Dist2 need = static_cast<Dist2>(j - i) * L2;
            for (const Vertex& x : path[i])
                for (const Vertex& y : path[j])
                    if (view.dist2(x, y) < need)
                        return CheckResult::fail(
                            "clique distance " + std::to_string(i) + "," +
                            std::to_string(j) + " below (j-i)L");
        }
    return {};
}

// A verified invariant axis: g^a translates the clique family by one step,
// the base vertex moves along a geodesic, and a window of the family is a
// local L-clique-path. Implies g is hyperbolic with translation length
// L / (2a) doubled, i.e. tlen(g) = (L2/2)/a in graph units.
struct AxisCertificate {
    int a = 1;
    Dist2 L2 = 0;
    Vertex base;
    int period = 1;
    std::vector<Clique> window;  // sigma_0 .. sigma_W with sigma_k = g^{ak} sigma_0
    Rat translation_length() const { return Rat(L2, 2) / a; }
};

// Re-verifies a certificate on `window` steps: exact displacement growth and
// the local clique-path conditions for the g^a-translates of sigma_0.
inline bool verify_axis(const GraphView& view, const Automorphism& g,
                        const AxisCertificate& cert, int window) {
    if (cert.L2 <= 0 || cert.a <= 0 || cert.window.empty()) return false;
    Automorphism h = g.power(cert.a);
    Vertex x = cert.base;
    for (int k = 1; k <= window; ++k) {
        x = h.apply(x);
        if (view.dist2(cert.base, x) != static_cast<Dist2>(k) * cert.L2)
            return false;
    }
    std::vector<Clique> path{cert.window.front()};
    for (int k = 1; k <= window; ++k)
        path.push_back(apply_to_clique(h, path.back()));
    return is_local_clique_path(view, path, cert.L2).ok;
}

// Searches for an invariant axis of g: ascending powers a, bases in
// ascending distance-then-lex order, exact displacement growth over the
// window, then an equivariant maximal clique around the base. Returns
// nullopt when every attempt fails within budget (g may be elliptic).
inline std::optional<AxisCertificate> invariant_clique_path(
    const GraphView& view, const Automorphism& g, const Budget& budget = {}) {
    std::vector<Vertex> bases;
    if (view.is_king()) {
        Vertex origin(view.dim(), 0);
        if (view.is_boxed()) {
            for (int i = 0; i < view.dim(); ++i)
                origin[i] = view.box_lo()[i];
            bases = view.vertices();
        } else {
            bases = view.ball(origin, 4 * view.edge_len2());
            std::stable_sort(bases.begin(), bases.end(),
                             [&](const Vertex& a, const Vertex& b) {
                                 return view.dist2(origin, a) <
                                        view.dist2(origin, b);
                             });
        }
    } else {
        bases = view.vertices();
    }

    long long nodes = 0;
    for (int a = 1; a <= budget.a_max; ++a) {
        Automorphism h = g.power(a);
        for (const Vertex& x : bases) {
            if (++nodes > budget.max_nodes) return std::nullopt;
            Dist2 L2 = view.dist2(x, h.apply(x));
            if (L2 == 0) return std::nullopt;  // fixed vertex: g is elliptic
            bool linear = true;
            Vertex y = x;
            for (int k = 1; k <= budget.window && linear; ++k) {
                y = h.apply(y);
                linear = view.dist2(x, y) == static_cast<Dist2>(k) * L2;
            }
            if (!linear) continue;

            // Equivariant maximalization: grow sigma keeping the transverse
            // distance to every h-translate in the window at k*L. (The
            // inverse-side conditions are equivalent since h is an isometry
            // and transverse distance is symmetric.)
            Clique sigma = maximal_clique_extend(
                view, {x}, [&](const Clique& c, const Vertex& u) {
                    Clique bigger = c;
                    bigger.insert(
                        std::upper_bound(bigger.begin(), bigger.end(), u), u);
                    Clique img = bigger;
                    for (int k = 1; k <= budget.window; ++k) {
                        img = apply_to_clique(h, img);
                        if (transverse_distance(view, bigger, img) !=
                            static_cast<Dist2>(k) * L2)
                            return false;
                    }
                    return true;
                });

            AxisCertificate cert;
            cert.a = a;
            cert.L2 = L2;
            cert.base = x;
            cert.period = 1;
            cert.window.push_back(sigma);
            for (int k = 1; k <= budget.window; ++k)
                cert.window.push_back(apply_to_clique(h, cert.window.back()));
            if (is_local_clique_path(view, cert.window, L2).ok) return cert;
        }
    }
    return std::nullopt;
}

}  // namespace helly
