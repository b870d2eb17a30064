#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "helly/automorphism.hpp"
#include "helly/base.hpp"
#include "helly/clique.hpp"
#include "helly/cliquepath.hpp"
#include "helly/dimension.hpp"
#include "helly/extremal.hpp"
#include "helly/minmeancycle.hpp"
#include "helly/rational.hpp"
#include "helly/view.hpp"

namespace helly {

enum class Verdict { Elliptic, Hyperbolic, Unknown };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Elliptic: return "elliptic";
        case Verdict::Hyperbolic: return "hyperbolic";
        default: return "unknown";
    }
}

// Doubled distances d(x, g^n x) for n = 0..n_max.
inline std::vector<Dist2> displacement_sequence(const GraphView& view,
                                                const Automorphism& g,
                                                const Vertex& x, int n_max) {
    std::vector<Dist2> out{0};
    Vertex y = x;
    for (int n = 1; n <= n_max; ++n) {
        y = g.apply(y);
        out.push_back(view.dist2(x, y));
    }
    return out;
}

// Minimum mean weight of the digraph w(i,j) = d(x_i, g x_j) over the given
// points. Equals the translation length when the points span a cell whose
// interior meets a g-axis; an upper bound for it in general.
inline Rat translation_length(const GraphView& view, const Automorphism& g,
                              const std::vector<Vertex>& points) {
    if (points.empty()) throw Error("translation_length needs points");
    WeightedDigraph d;
    d.n = static_cast<int>(points.size());
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j)
            d.edges.emplace_back(i, j,
                                 view.dist2(points[i], g.apply(points[j])));
    return min_mean_cycle(d);
}

struct FixedCliqueResult {
    ExtremalValues function;  // invariant half-integer extremal function
    std::vector<int> clique;  // its clique, a g-stabilized clique of the graph
};

// For an elliptic permutation automorphism: the invariant half-integer
// extremal function with minimal maximum value (ties broken lexicographically)
// and its clique. Throws SubdivisionInsufficient when no invariant
// half-integer extremal function exists.
inline FixedCliqueResult fixed_clique_of_elliptic(const FiniteGraph& g,
                                                  const Automorphism& aut,
                                                  const Budget& budget = {}) {
    std::optional<ExtremalValues> best;
    for (const ExtremalValues& f : enumerate_extremal(g, 2, budget)) {
        bool invariant = true;
        for (int v = 0; invariant && v < g.n(); ++v)
            invariant = f[aut.perm()[v]] == f[v];
        if (!invariant) continue;
        if (!best) {
            best = f;
            continue;
        }
        Dist2 bm = *std::max_element(best->begin(), best->end());
        Dist2 fm = *std::max_element(f.begin(), f.end());
        if (fm < bm || (fm == bm && f < *best)) best = f;
    }
    if (!best) throw SubdivisionInsufficient();
    return {*best, clique_of_point(g, *best)};
}

struct Classification {
    Verdict verdict = Verdict::Unknown;
    Clique clique;                                 // stabilized (elliptic)
    std::optional<std::vector<Rat>> fixed_point;   // king views
    std::optional<ExtremalValues> fixed_function;  // finite views
    std::optional<AxisCertificate> axis;           // hyperbolic certificate
    std::string note;

    Rat translation_length() const {
        return axis ? axis->translation_length() : Rat(0);
    }
};

namespace detail {

// The clique of the hull point p in a king view: lattice vertices strictly
// within sup distance 1 of p (p given as exact rationals).
inline Clique king_point_clique(const GraphView& view,
                                const std::vector<Rat>& p) {
    int d = view.dim();
    std::vector<long long> lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
        // integers z with |z - p_i| < 1
        Rat a = p[i] - 1, b = p[i] + 1;
        lo[i] = a.numerator() / a.denominator() - 2;
        hi[i] = b.numerator() / b.denominator() + 2;
    }
    Clique out;
    Vertex cur(lo.begin(), lo.end());
    for (;;) {
        bool in = view.contains(cur);
        for (int i = 0; in && i < d; ++i) {
            Rat diff = Rat(cur[i]) - p[i];
            if (diff < 0) diff = -diff;
            in = diff < 1;
        }
        if (in) out.push_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[i] == hi[i]) cur[i] = lo[i], --i;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

// Half-integer fixed points of every listed map, as vertices of the doubled
// (subdivision) lattice, scanned over a window (exhaustive on boxes). The
// certified flag reports whether the scan provably saw the whole fixed set.
inline std::vector<Vertex> king_fixed_points(const GraphView& view,
                                             const std::vector<Automorphism>& gens,
                                             const Budget& budget,
                                             bool* certified) {
    GraphView sub = view.subdivided();
    std::vector<Vertex> pts;
    if (sub.is_boxed()) {
        pts = sub.vertices();
        *certified = true;
    } else {
        Vertex origin(sub.dim(), 0);
        pts = sub.ball(origin, 2 * budget.window);
        *certified = false;  // refined below
    }
    std::vector<Automorphism> sub_gens;
    for (const auto& g : gens) sub_gens.push_back(g.rescaled_double());
    std::vector<Vertex> out;
    for (const Vertex& q : pts) {
        bool fixed = true;
        for (const auto& g : sub_gens)
            if (g.apply(q) != q) {
                fixed = false;
                break;
            }
        if (fixed) out.push_back(q);
    }
    // A zero-dimensional common fixed space makes the window scan exact.
    if (!sub.is_boxed() && out.size() <= 1) *certified = true;
    return out;
}

inline std::optional<std::vector<Rat>> king_fixed_point(const Automorphism& g,
                                                        const Vertex& seed,
                                                        int cap = 256) {
    int r = g.order(cap);
    if (r == 0) return std::nullopt;
    int d = g.dim();
    std::vector<Rat> p(d, Rat(0));
    Vertex y = seed;
    for (int k = 0; k < r; ++k) {
        for (int i = 0; i < d; ++i) p[i] += Rat(y[i], r);
        y = g.apply(y);
    }
    return p;
}

}  // namespace detail

// Elliptic/hyperbolic classification. Ellipticity is detected first via a
// bounded-orbit check (always succeeds on finite views); otherwise an
// invariant-axis search runs with a doubling verification window. The
// fallback verdict is Unknown, never a guess.
inline Classification classify(const GraphView& view, const Automorphism& g,
                               const Budget& budget = {}) {
    Classification out;
    if (!view.is_king()) {
        if (!is_helly(view.graph(), budget)) throw NotHelly();
        auto fc = fixed_clique_of_elliptic(view.graph(), g, budget);
        out.verdict = Verdict::Elliptic;
        out.fixed_function = fc.function;
        for (int v : fc.clique) out.clique.push_back({v});
        return out;
    }

    g.validate_on(view);
    // bounded-orbit test: revisit of the seed orbit within the window
    Vertex seed(view.dim(), 0);
    if (view.is_boxed())
        for (int i = 0; i < view.dim(); ++i) seed[i] = view.box_lo()[i];
    {
        // On a box the orbit must revisit within volume+1 steps, so the test
        // is exact there; on the infinite lattice the cap is heuristic and a
        // miss only means we fall through to the axis search.
        long long cap = std::max(budget.window, 64);
        if (view.is_boxed()) {
            cap = 1;
            for (int i = 0; i < view.dim(); ++i)
                cap *= view.box_hi()[i] - view.box_lo()[i] + 1;
            ++cap;
        }
        Vertex y = seed;
        std::vector<Vertex> orbit{seed};
        bool revisit = false;
        for (long long k = 1; k <= cap && !revisit; ++k) {
            y = g.apply(y);
            revisit = std::find(orbit.begin(), orbit.end(), y) != orbit.end();
            orbit.push_back(y);
        }
        if (revisit) {
            // Prefer a half-integer fixed lattice point (lex-least); fall
            // back to the orbit average, whose denominator may be larger.
            std::optional<std::vector<Rat>> p;
            bool certified = false;
            auto fixed = detail::king_fixed_points(view, {g}, budget,
                                                   &certified);
            if (!fixed.empty()) {
                p.emplace();
                for (long long c : fixed.front()) p->emplace_back(c, 2);
            } else {
                p = detail::king_fixed_point(g, seed);
            }
            if (p) {
                Clique c = detail::king_point_clique(view, *p);
                if (!c.empty() && apply_to_clique(g, c) == c) {
                    out.verdict = Verdict::Elliptic;
                    out.clique = std::move(c);
                    out.fixed_point = std::move(p);
                    return out;
                }
            }
            out.note = "orbit is bounded but no stabilized clique was found";
            return out;
        }
    }

    for (int round = 0; round < 2; ++round) {
        Budget b = budget;
        b.window <<= round;
        if (auto cert = invariant_clique_path(view, g, b)) {
            out.verdict = Verdict::Hyperbolic;
            out.axis = std::move(cert);
            return out;
        }
    }
    out.note = "no bounded orbit and no axis certificate within budget";
    return out;
}

}  // namespace helly
