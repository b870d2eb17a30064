#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "helly/automorphism.hpp"
#include "helly/base.hpp"
#include "helly/clique.hpp"
#include "helly/cliquepath.hpp"
#include "helly/extremal.hpp"
#include "helly/isometry.hpp"
#include "helly/rational.hpp"
#include "helly/view.hpp"

namespace helly {

// An element of a finitely generated automorphism group together with its
// canonical positive word (generator indices, rightmost applied first).
// Words come from a breadth-first closure, so they are shortest and
// lexicographically least among shortest.
struct GroupElement {
    Automorphism map;
    std::vector<int> word;
};

// A group of automorphisms all of whose elements are elliptic, with the
// half-integer fixed data used by the hyperbolicity engine. King-view fixed
// points are stored in doubled (subdivision) coordinates.
struct EllipticGroup {
    std::vector<Automorphism> gens;
    std::vector<GroupElement> elements;  // BFS closure, identity first
    bool closed = true;                  // closure completed under the cap
    std::vector<Vertex> fixed_points;    // king: invariant half-integer points
    std::vector<ExtremalValues> fixed_functions;  // finite views
    bool fixed_certified = true;  // exhaustive (box/finite) vs window scan

    const GroupElement* find(const Automorphism& a) const {
        for (const auto& e : elements)
            if (e.map == a) return &e;
        return nullptr;
    }
};

namespace detail {

inline constexpr int kClosureCap = 2048;

inline std::vector<GroupElement> group_closure(
    const std::vector<Automorphism>& gens, const Automorphism& id,
    bool* closed) {
    std::vector<GroupElement> out{{id, {}}};
    std::map<std::vector<long long>, int> seen{{id.encode(), 0}};
    *closed = true;
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
            GroupElement next;
            next.map = out[head].map.compose(gens[i]);
            auto key = next.map.encode();
            if (seen.count(key)) continue;
            if (static_cast<int>(out.size()) >= kClosureCap) {
                *closed = false;
                return out;
            }
            next.word = out[head].word;
            next.word.push_back(i);
            seen.emplace(std::move(key), static_cast<int>(out.size()));
            out.push_back(std::move(next));
        }
    }
    return out;
}

}  // namespace detail

// Builds the elliptic group for a generator list: verifies each generator is
// elliptic (via classify) and collects the invariant half-integer data.
inline EllipticGroup make_elliptic_group(const GraphView& view,
                                         std::vector<Automorphism> gens,
                                         const Budget& budget = {}) {
    if (gens.empty()) throw Error("a group needs at least one generator");
    EllipticGroup grp;
    for (const auto& g : gens) {
        Classification c = classify(view, g, budget);
        if (c.verdict != Verdict::Elliptic)
            throw Error("generator is not elliptic");
    }
    Automorphism id = gens[0].is_affine()
                          ? Automorphism::identity_affine(gens[0].dim())
                          : Automorphism::identity_permutation(view.graph());
    grp.elements = detail::group_closure(gens, id, &grp.closed);
    if (view.is_king()) {
        grp.fixed_points = detail::king_fixed_points(view, gens, budget,
                                                     &grp.fixed_certified);
    } else {
        for (const ExtremalValues& f :
             enumerate_extremal(view.graph(), 2, budget)) {
            bool inv = true;
            for (const auto& g : gens)
                for (int v = 0; inv && v < view.graph().n(); ++v)
                    inv = f[g.perm()[v]] == f[v];
            if (inv) grp.fixed_functions.push_back(f);
        }
        grp.fixed_certified = true;
    }
    grp.gens = std::move(gens);
    return grp;
}

struct FixedSetDistance {
    Dist2 L2 = 0;  // doubled distance between the fixed sets
    // witnesses: subdivision-lattice points (king) or extremal functions
    Vertex x, y;
    std::optional<ExtremalValues> fx, fy;
    bool certified = true;
};

// Doubled distance between the half-integer fixed sets of two elliptic
// groups, with realizing witnesses. Throws SubdivisionInsufficient when a
// group has no half-integer fixed point in reach.
inline FixedSetDistance fixed_set_distance(const GraphView& view,
                                           const EllipticGroup& G,
                                           const EllipticGroup& H) {
    FixedSetDistance out;
    if (view.is_king()) {
        if (G.fixed_points.empty() || H.fixed_points.empty())
            throw SubdivisionInsufficient();
        bool first = true;
        for (const Vertex& p : G.fixed_points)
            for (const Vertex& q : H.fixed_points) {
                Dist2 d = 0;
                for (std::size_t i = 0; i < p.size(); ++i)
                    d = std::max(d, std::llabs(p[i] - q[i]));
                if (first || d < out.L2) {
                    out.L2 = d;
                    out.x = p;
                    out.y = q;
                    first = false;
                }
            }
        out.certified = G.fixed_certified && H.fixed_certified;
        return out;
    }
    if (G.fixed_functions.empty() || H.fixed_functions.empty())
        throw SubdivisionInsufficient();
    bool first = true;
    for (const ExtremalValues& f : G.fixed_functions)
        for (const ExtremalValues& g : H.fixed_functions) {
            Dist2 d = 0;
            for (std::size_t i = 0; i < f.size(); ++i)
                d = std::max(d, std::llabs(f[i] - g[i]));
            if (first || d < out.L2) {
                out.L2 = d;
                out.fx = f;
                out.fy = g;
                first = false;
            }
        }
    return out;
}

// One step of an alternating product: indices into the element lists of G
// and H, so the step map is G.elements[g].map o H.elements[h].map.
struct OrbitStep {
    int g = 0, h = 0;
};

struct GeodesicOrbit {
    std::vector<OrbitStep> steps;        // s_1 .. s_n
    std::vector<Automorphism> prefixes;  // id, s_1, s_1 s_2, ...
    std::vector<Vertex> points;          // x, s_1 x, s_1 s_2 x, ...
};

// Finds products s_k = g_k h_k such that x, s_1 x, s_1 s_2 x, ... move away
// at exactly 2L per step (so they lie on a geodesic). Depth-first with
// backtracking over the deduplicated product alphabet, deterministic order.
// Throws SearchExhausted if no full-depth sequence exists, BudgetExceeded on
// the node cap. Maps must be given in the coordinates of `view`.
inline GeodesicOrbit geodesic_orbit_search(
    const GraphView& view, const std::vector<GroupElement>& Gel,
    const std::vector<GroupElement>& Hel, const Vertex& x, Dist2 L2, int n,
    const Budget& budget = {}) {
    if (L2 <= 0) throw Error("geodesic orbit search needs L > 0");
    const Dist2 step2 = 2 * L2;
    struct Letter {
        OrbitStep st;
        Automorphism map;
    };
    std::vector<Letter> alphabet;
    {
        std::map<std::vector<long long>, bool> seen;
        for (int gi = 0; gi < static_cast<int>(Gel.size()); ++gi) {
            if (static_cast<int>(Gel[gi].word.size()) > budget.max_word_len)
                continue;
            for (int hi = 0; hi < static_cast<int>(Hel.size()); ++hi) {
                if (static_cast<int>(Hel[hi].word.size()) > budget.max_word_len)
                    continue;
                Automorphism s = Gel[gi].map.compose(Hel[hi].map);
                if (seen.emplace(s.encode(), true).second)
                    alphabet.push_back({{gi, hi}, std::move(s)});
            }
        }
    }

    GeodesicOrbit orbit;
    orbit.prefixes.push_back(Gel[0].map.is_identity()
                                 ? Gel[0].map
                                 : Gel[0].map.compose(Gel[0].map.inverse()));
    orbit.points.push_back(x);
    long long nodes = 0;

    auto dfs = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        for (const Letter& let : alphabet) {
            if (++nodes > budget.max_nodes) throw BudgetExceeded(nodes);
            Automorphism w = orbit.prefixes.back().compose(let.map);
            Vertex y = w.apply(x);
            if (view.dist2(x, y) != static_cast<Dist2>(depth + 1) * step2)
                continue;
            orbit.steps.push_back(let.st);
            orbit.prefixes.push_back(std::move(w));
            orbit.points.push_back(std::move(y));
            if (self(self, depth + 1)) return true;
            orbit.steps.pop_back();
            orbit.prefixes.pop_back();
            orbit.points.pop_back();
        }
        return false;
    };
    if (!dfs(dfs, 0))
        throw SearchExhausted("no geodesic orbit of depth " +
                              std::to_string(n));
    return orbit;
}

// A complete verdict about an action: an elliptic stabilized clique, or a
// verified hyperbolic element with its word, or Unknown with a note.
struct ActionOutcome {
    Verdict verdict = Verdict::Unknown;
    Clique clique;  // original-view coordinates
    std::vector<std::pair<std::string, int>> word;
    std::optional<AxisCertificate> axis;  // subdivision view for king inputs
    Rat tlen{0};
    Dist2 L2 = 0;
    int depth = 0;
    std::string note;
};

namespace detail {

inline void append_word(std::vector<std::pair<std::string, int>>& out,
                        const std::string& label,
                        const std::vector<int>& word) {
    for (int i : word) out.emplace_back(label, i);
}

// Word of W = s_1..s_j (s_1..s_i)^-1 as a positive word: the prefix part,
// the middle letters, then the inverses of the prefix letters resolved
// through the group closures. Empty on a failed inverse lookup.
inline std::vector<std::pair<std::string, int>> conjugate_word(
    const EllipticGroup& G, const EllipticGroup& H,
    const std::vector<OrbitStep>& steps, int i, int j) {
    std::vector<std::pair<std::string, int>> w;
    for (int k = 0; k < j; ++k) {
        append_word(w, "G", G.elements[steps[k].g].word);
        append_word(w, "H", H.elements[steps[k].h].word);
    }
    for (int k = i - 1; k >= 0; --k) {
        const GroupElement* hi =
            H.find(H.elements[steps[k].h].map.inverse());
        const GroupElement* gi =
            G.find(G.elements[steps[k].g].map.inverse());
        if (!hi || !gi) return {};
        append_word(w, "H", hi->word);
        append_word(w, "G", gi->word);
    }
    return w;
}

inline std::vector<long long> clique_key(const Clique& c) {
    std::vector<long long> k{static_cast<long long>(c.size())};
    for (const Vertex& v : c) k.insert(k.end(), v.begin(), v.end());
    return k;
}

}  // namespace detail

// The two-group engine: distance between fixed sets, then either a common
// fixed point (elliptic) or a geodesic orbit whose pigeonhole repetition
// yields a candidate hyperbolic element, verified by an invariant axis.
inline ActionOutcome find_hyperbolic_element(const GraphView& view,
                                             const EllipticGroup& G,
                                             const EllipticGroup& H,
                                             const Budget& budget = {}) {
    ActionOutcome out;
    FixedSetDistance fsd = fixed_set_distance(view, G, H);
    out.L2 = fsd.L2;

    if (fsd.L2 == 0) {
        out.verdict = Verdict::Elliptic;
        if (view.is_king()) {
            std::vector<Rat> p;
            for (long long c : fsd.x) p.emplace_back(c, 2);
            out.clique = detail::king_point_clique(view, p);
        } else {
            for (int v : clique_of_point(view.graph(), *fsd.fx))
                out.clique.push_back({v});
        }
        for (const auto& gens : {G.gens, H.gens})
            for (const auto& g : gens)
                if (apply_to_clique(g, out.clique) != out.clique) {
                    out.verdict = Verdict::Unknown;
                    out.note = "common fixed point clique is not stabilized";
                    return out;
                }
        return out;
    }

    // Work in subdivision coordinates on king views so half-integer
    // witnesses are vertices.
    GraphView wview = view.is_king() ? view.subdivided() : view;
    auto lift = [&](const Automorphism& a) {
        return view.is_king() ? a.rescaled_double() : a;
    };
    std::vector<GroupElement> Gel, Hel;
    for (const auto& e : G.elements) Gel.push_back({lift(e.map), e.word});
    for (const auto& e : H.elements) Hel.push_back({lift(e.map), e.word});

    const Dist2 step2 = 2 * fsd.L2;
    const int n = budget.window;
    GeodesicOrbit orbit;
    try {
        orbit = geodesic_orbit_search(wview, Gel, Hel, fsd.x, fsd.L2, n,
                                      budget);
    } catch (const SearchExhausted& e) {
        out.note = e.what();
        return out;
    } catch (const BudgetExceeded& e) {
        out.note = e.what();
        return out;
    }
    out.depth = n;

    // Maximal clique family along the orbit, confined to the geodesic
    // interval, as in the local-to-global construction.
    std::vector<Clique> sigma;
    for (const Vertex& p : orbit.points) sigma.push_back({p});
    const Vertex &x0 = orbit.points.front(), &xn = orbit.points.back();
    bool grew = true;
    while (grew) {
        grew = false;
        for (int k = 1; k + 1 < static_cast<int>(sigma.size()); ++k) {
            Clique before = sigma[k];
            sigma[k] = maximal_clique_extend(
                wview, sigma[k], [&](const Clique& c, const Vertex& u) {
                    if (wview.dist2(x0, u) != static_cast<Dist2>(k) * step2 ||
                        wview.dist2(u, xn) !=
                            static_cast<Dist2>(n - k) * step2)
                        return false;
                    Clique bigger = c;
                    bigger.insert(
                        std::upper_bound(bigger.begin(), bigger.end(), u), u);
                    return transverse_distance(wview, bigger, sigma[k - 1]) ==
                               step2 &&
                           transverse_distance(wview, bigger, sigma[k + 1]) ==
                               step2;
                });
            grew = grew || sigma[k] != before;
        }
    }

    // Pigeonhole on (s_i^-1 x, s_{i+1} x, pulled-back clique triple),
    // over the indices whose clique triple lies in the maximalized interior.
    std::map<std::vector<long long>, int> keys;
    for (int i = 1; i + 1 <= n - 1; ++i) {
        // s_i = W_{i-1}^-1 W_i and s_{i+1} = W_i^-1 W_{i+1}, so both
        // s_i^-1 x and s_{i+1} x are W_i^-1 images of orbit points.
        Automorphism winv = orbit.prefixes[i].inverse();
        Vertex a = winv.apply(orbit.points[i - 1]);
        Vertex c = winv.apply(orbit.points[i + 1]);
        std::vector<long long> key;
        key.insert(key.end(), a.begin(), a.end());
        key.insert(key.end(), c.begin(), c.end());
        for (int t = -1; t <= 1; ++t) {
            Clique pulled = apply_to_clique(winv, sigma[i + t]);
            auto ck = detail::clique_key(pulled);
            key.insert(key.end(), ck.begin(), ck.end());
        }
        auto [it, inserted] = keys.emplace(std::move(key), i);
        if (inserted) continue;
        int i0 = it->second, j0 = i;
        Automorphism g =
            orbit.prefixes[j0].compose(orbit.prefixes[i0].inverse());
        Budget vb = budget;
        if (auto cert = invariant_clique_path(wview, g, vb)) {
            out.verdict = Verdict::Hyperbolic;
            out.axis = std::move(cert);
            out.tlen = out.axis->translation_length();
            out.word = detail::conjugate_word(G, H, orbit.steps, i0, j0);
            if (out.word.empty())
                out.note = "word omitted: inverse outside closure cap";
            return out;
        }
    }
    out.note = "pigeonhole found no verifiable repetition in the window";
    return out;
}

// Classifies the action of the group generated by `gens`: hyperbolic as soon
// as a generator or a pairwise product is, elliptic when a common stabilized
// clique exists, Unknown otherwise. Words refer to generator indices.
inline ActionOutcome decide_action(const GraphView& view,
                                   const std::vector<Automorphism>& gens,
                                   const Budget& budget = {}) {
    ActionOutcome out;
    if (gens.empty()) throw Error("decide_action needs generators");

    for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
        Classification c;
        try {
            c = classify(view, gens[i], budget);
        } catch (const SubdivisionInsufficient& e) {
            out.note = "generator " + std::to_string(i) + ": " + e.what();
            return out;
        }
        if (c.verdict == Verdict::Hyperbolic) {
            out.verdict = Verdict::Hyperbolic;
            out.axis = c.axis;
            out.tlen = c.translation_length();
            out.word = {{"G", i}};
            return out;
        }
        if (c.verdict == Verdict::Unknown) {
            out.note = "generator " + std::to_string(i) + ": " + c.note;
            return out;
        }
    }

    for (int i = 0; i < static_cast<int>(gens.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(gens.size()); ++j) {
            ActionOutcome pair;
            try {
                EllipticGroup Gi =
                    make_elliptic_group(view, {gens[i]}, budget);
                EllipticGroup Gj =
                    make_elliptic_group(view, {gens[j]}, budget);
                pair = find_hyperbolic_element(view, Gi, Gj, budget);
            } catch (const SubdivisionInsufficient& e) {
                out.note = e.what();
                return out;
            }
            if (pair.verdict == Verdict::Hyperbolic) {
                // Both factors are cyclic here, so every letter names the
                // single local generator; relabel to the global indices.
                std::vector<std::pair<std::string, int>> w;
                for (const auto& letter : pair.word)
                    w.emplace_back("G", letter.first == "G" ? i : j);
                pair.word = std::move(w);
                return pair;
            }
            if (pair.verdict == Verdict::Unknown) {
                out.note = "pair (" + std::to_string(i) + "," +
                           std::to_string(j) + "): " + pair.note;
                return out;
            }
        }

    // Every pair elliptic: look for a clique stabilized by all generators.
    try {
        EllipticGroup all = make_elliptic_group(view, gens, budget);
        if (view.is_king()) {
            for (const Vertex& q : all.fixed_points) {
                std::vector<Rat> p;
                for (long long c : q) p.emplace_back(c, 2);
                Clique c = detail::king_point_clique(view, p);
                bool ok = !c.empty();
                for (const auto& g : gens)
                    ok = ok && apply_to_clique(g, c) == c;
                if (ok) {
                    out.verdict = Verdict::Elliptic;
                    out.clique = std::move(c);
                    return out;
                }
            }
        } else if (!all.fixed_functions.empty()) {
            const ExtremalValues* best = &all.fixed_functions[0];
            for (const auto& f : all.fixed_functions) {
                Dist2 bm = *std::max_element(best->begin(), best->end());
                Dist2 fm = *std::max_element(f.begin(), f.end());
                if (fm < bm || (fm == bm && f < *best)) best = &f;
            }
            out.verdict = Verdict::Elliptic;
            for (int v : clique_of_point(view.graph(), *best))
                out.clique.push_back({v});
            return out;
        }
    } catch (const Error& e) {
        out.note = e.what();
        return out;
    }
    out.note = "pairwise elliptic but no common stabilized clique was found";
    return out;
}

}  // namespace helly
