#pragma once

// Generators shared by the randomized tests: these construct library objects
// (automorphism pools, spines, clique pairs), while all independent
// verification logic stays in oracles.hpp.

#include <helly/action.hpp>
#include <helly/clique.hpp>
#include <helly/cliquepath.hpp>
#include <helly/view.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace testutil {

// Every automorphism of a boxed king view: a signed permutation matrix leaves
// exactly one valid offset per row (0 for a +1 entry, the matching side-top
// for a -1 entry), and rows may only draw on axes of equal length.
inline std::vector<helly::Automorphism> box_automorphisms(
    const helly::GraphView& box) {
    const int d = box.dim();
    std::vector<long long> side(d);
    for (int i = 0; i < d; ++i) side[i] = box.box_hi()[i] - box.box_lo()[i];
    std::vector<int> perm(d);
    for (int i = 0; i < d; ++i) perm[i] = i;
    std::vector<helly::Automorphism> out;
    do {
        bool compatible = true;
        for (int i = 0; i < d; ++i)
            compatible = compatible && side[i] == side[perm[i]];
        if (!compatible) continue;
        for (int signs = 0; signs < (1 << d); ++signs) {
            std::vector<std::vector<long long>> m(
                d, std::vector<long long>(d, 0));
            std::vector<long long> b(d, 0);
            for (int i = 0; i < d; ++i) {
                bool neg = signs >> i & 1;
                m[i][perm[i]] = neg ? -1 : 1;
                b[i] = neg ? box.box_lo()[i] + box.box_hi()[perm[i]]
                           : box.box_lo()[i] - box.box_lo()[perm[i]];
            }
            auto a = helly::Automorphism::affine(std::move(m), std::move(b));
            a.validate_on(box);
            out.push_back(std::move(a));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Grows the interior cliques of `path` in random order while every extension
// keeps transverse distance L2 to both neighbors, until no clique can grow.
inline void maximalize_interior_randomly(const helly::GraphView& view,
                                         std::vector<helly::Clique>& path,
                                         helly::Dist2 L2, std::mt19937& rng) {
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> order;
        for (int i = 1; i + 1 < static_cast<int>(path.size()); ++i)
            order.push_back(i);
        std::shuffle(order.begin(), order.end(), rng);
        for (int i : order) {
            auto candidates = helly::common_neighbors(view, path[i]);
            std::shuffle(candidates.begin(), candidates.end(), rng);
            for (const helly::Vertex& u : candidates) {
                helly::Clique bigger = path[i];
                bigger.insert(
                    std::upper_bound(bigger.begin(), bigger.end(), u), u);
                if (helly::transverse_distance(view, bigger, path[i - 1]) ==
                        L2 &&
                    helly::transverse_distance(view, bigger, path[i + 1]) ==
                        L2) {
                    path[i] = std::move(bigger);
                    grew = true;
                    break;
                }
            }
        }
    }
}

// Random spine in the king plane: every step has sup length L and consecutive
// steps add up to sup length 2L. The maximalized result is returned only when
// it passes the local conditions; spines that curl back fail them and yield
// nullopt.
inline std::optional<std::vector<helly::Clique>> random_plane_local_path(
    const helly::GraphView& view, long long L, int len, std::mt19937& rng) {
    const int d = view.dim();
    std::uniform_int_distribution<long long> coord(-L * len, L * len);
    std::uniform_int_distribution<long long> step(-L, L);
    helly::Vertex x(d);
    for (int i = 0; i < d; ++i) x[i] = coord(rng);
    std::vector<helly::Clique> path{{x}};
    helly::Vertex prev;
    for (int k = 0; k < len; ++k) {
        helly::Vertex v(d);
        for (int tries = 0;; ++tries) {
            if (tries > 200) return std::nullopt;
            long long m = 0;
            for (int i = 0; i < d; ++i) {
                v[i] = step(rng);
                m = std::max(m, std::llabs(v[i]));
            }
            if (m != L) continue;
            if (!prev.empty()) {
                long long s = 0;
                for (int i = 0; i < d; ++i)
                    s = std::max(s, std::llabs(prev[i] + v[i]));
                if (s != 2 * L) continue;
            }
            break;
        }
        for (int i = 0; i < d; ++i) x[i] += v[i];
        if (!view.contains(x)) return std::nullopt;
        path.push_back({x});
        prev = v;
    }
    maximalize_interior_randomly(view, path, 2 * L, rng);
    if (!helly::is_local_clique_path(view, path, 2 * L).ok) return std::nullopt;
    return path;
}

// Random local path in a finite view: a geodesic spine between two vertices
// at distance len * L, then random maximalization. nullopt when no vertex
// pair is far enough or the result fails the local conditions.
inline std::optional<std::vector<helly::Clique>> random_finite_local_path(
    const helly::GraphView& view, long long L, int len, std::mt19937& rng) {
    const helly::FiniteGraph& g = view.graph();
    std::vector<std::pair<int, int>> far;
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v)
            if (g.dist(u, v) == len * L) far.emplace_back(u, v);
    if (far.empty()) return std::nullopt;
    auto [u, v] = far[std::uniform_int_distribution<std::size_t>(
        0, far.size() - 1)(rng)];
    std::vector<helly::Clique> path{{{u}}};
    int at = u;
    for (int k = 1; k <= len; ++k) {
        std::vector<int> nexts;
        for (int w : g.neighbors(at))
            if (g.dist(w, v) == g.dist(at, v) - 1) nexts.push_back(w);
        at = nexts[std::uniform_int_distribution<std::size_t>(
            0, nexts.size() - 1)(rng)];
        for (int skip = 1; skip < L; ++skip) {
            std::vector<int> closer;
            for (int w : g.neighbors(at))
                if (g.dist(w, v) == g.dist(at, v) - 1) closer.push_back(w);
            at = closer[std::uniform_int_distribution<std::size_t>(
                0, closer.size() - 1)(rng)];
        }
        path.push_back({{at}});
    }
    maximalize_interior_randomly(view, path, 2 * L, rng);
    if (!helly::is_local_clique_path(view, path, 2 * L).ok) return std::nullopt;
    return path;
}

// A transverse clique pair in a king view at doubled distance D2, built from
// two anchors D2 apart and grown while both uniform witnesses survive.
inline std::pair<helly::Clique, helly::Clique> transverse_pair(
    const helly::GraphView& view, helly::Dist2 D2, std::mt19937& rng) {
    const int d = view.dim();
    const long long D = D2 / 2;
    helly::Vertex x(d, 0), y(d, 0);
    std::vector<long long> lo = view.is_boxed()
                                    ? view.box_lo()
                                    : std::vector<long long>(d, -D - 4);
    std::vector<long long> hi = view.is_boxed()
                                    ? view.box_hi()
                                    : std::vector<long long>(d, D + 4);
    int axis = std::uniform_int_distribution<int>(0, d - 1)(rng);
    for (int i = 0; i < d; ++i) {
        if (i == axis && hi[i] - lo[i] >= D) {
            long long base = std::uniform_int_distribution<long long>(
                lo[i], hi[i] - D)(rng);
            x[i] = base;
            y[i] = base + D;
        } else {
            long long span = std::min<long long>(hi[i] - lo[i], D - 1);
            long long base = std::uniform_int_distribution<long long>(
                lo[i], hi[i] - span)(rng);
            x[i] = base;
            y[i] = base + std::uniform_int_distribution<long long>(0, span)(rng);
        }
    }
    helly::Clique s{x}, t{y};
    auto grow = [&](helly::Clique& mine, const helly::Clique& other,
                    const helly::Vertex& other_witness) {
        // candidates must be re-collected after every insertion: a common
        // neighbor of the old clique need not be adjacent to the new member
        bool grew = true;
        while (grew) {
            grew = false;
            auto candidates = helly::common_neighbors(view, mine);
            std::shuffle(candidates.begin(), candidates.end(), rng);
            for (const helly::Vertex& u : candidates) {
                if (view.dist2(u, other_witness) != D2) continue;
                bool far_enough = true;
                for (const helly::Vertex& t2 : other)
                    far_enough = far_enough && view.dist2(u, t2) >= D2;
                if (!far_enough) continue;
                helly::Clique bigger = mine;
                bigger.insert(
                    std::upper_bound(bigger.begin(), bigger.end(), u), u);
                if (helly::transverse_distance(view, bigger, other) == D2) {
                    mine = std::move(bigger);
                    grew = true;
                    break;
                }
            }
        }
    };
    grow(s, t, y);
    grow(t, s, x);
    return {s, t};
}

// Letters of an action word resolved against the two generator lists; the
// product applies the rightmost letter first.
inline helly::Automorphism compose_word(
    const helly::GraphView& view,
    const std::vector<helly::Automorphism>& G,
    const std::vector<helly::Automorphism>& H,
    const std::vector<std::pair<std::string, int>>& word) {
    helly::Automorphism w =
        view.is_king()
            ? helly::Automorphism::identity_affine(view.dim())
            : helly::Automorphism::identity_permutation(view.graph());
    for (const auto& [label, idx] : word)
        w = w.compose(label == "G" ? G.at(idx) : H.at(idx));
    return w;
}

}  // namespace testutil
