#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <vector>

#include "helly/base.hpp"
#include "helly/extremal.hpp"
#include "helly/fm.hpp"
#include "helly/graph.hpp"

namespace helly {

// Tight pairs of an extremal function: unordered {x,y} (x <= y, x == y
// allowed) with f(x) + f(y) = d(x,y). Extremality makes every vertex appear
// in at least one pair.
inline std::vector<std::pair<int, int>> equality_pairs(const FiniteGraph& g,
                                                       const ExtremalValues& f) {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < g.n(); ++x)
        for (int y = x; y < g.n(); ++y)
            if (f[x] + f[y] == doubled_dist(g, x, y)) out.emplace_back(x, y);
    return out;
}

namespace detail {

// Components of the graph on tight pairs, with a sign per vertex: the pair
// {x,y} imposes h(x) = -h(y), a loop imposes h(x) = 0. A component is "free"
// when the signs are consistent and no loop forces it to zero; free
// components are exactly the bipartite loop-free ones, and their count is
// the dimension of {h : h(x)+h(y)=0 on all pairs}.
struct SignComponents {
    std::vector<int> comp;    // vertex -> component id
    std::vector<int> sign;    // vertex -> +1/-1 within its component
    std::vector<bool> rigid;  // component forced to zero
    std::vector<bool> covered;  // vertex appears in some pair
    int free_count = 0;

    SignComponents(int n, const std::vector<std::pair<int, int>>& pairs) {
        parent_.resize(n);
        parity_.assign(n, 0);
        for (int v = 0; v < n; ++v) parent_[v] = v;
        std::vector<bool> zero(n, false);
        covered.assign(n, false);
        for (auto [x, y] : pairs) {
            covered[x] = covered[y] = true;
            if (x == y) {
                zero[x] = true;
                continue;
            }
            auto [rx, px] = find(x);
            auto [ry, py] = find(y);
            if (rx == ry) {
                if (px == py) zero[rx] = true;  // odd relation: forced to 0
            } else {
                parent_[ry] = rx;
                parity_[ry] = px ^ py ^ 1;
            }
        }
        comp.assign(n, -1);
        sign.assign(n, 1);
        std::vector<int> root_id(n, -1);
        for (int v = 0; v < n; ++v) {
            auto [r, p] = find(v);
            if (root_id[r] < 0) {
                root_id[r] = static_cast<int>(rigid.size());
                rigid.push_back(false);
            }
            comp[v] = root_id[r];
            sign[v] = p ? -1 : 1;
            if (zero[r]) rigid[comp[v]] = true;
        }
        // propagate zero marks that landed on non-root vertices
        for (int v = 0; v < n; ++v)
            if (zero[v]) rigid[comp[v]] = true;
        for (bool rg : rigid)
            if (!rg) ++free_count;
    }

  private:
    std::pair<int, int> find(int v) {
        if (parent_[v] == v) return {v, 0};
        auto [r, p] = find(parent_[v]);
        parent_[v] = r;
        parity_[v] ^= p;
        return {r, parity_[v]};
    }
    std::vector<int> parent_;
    std::vector<int> parity_;
};

}  // namespace detail

// Number of bipartite, loop-free components of the tight-pair graph of f.
// This is the dimension of the cell of the injective hull containing f.
inline int cell_rank(const FiniteGraph& g, const ExtremalValues& f) {
    detail::SignComponents sc(g.n(), equality_pairs(g, f));
    return sc.free_count;
}

namespace detail {

// Search over tangent directions into the set of extremal functions at f.
// A direction h is admissible when h(x)+h(y) >= 0 for every tight pair and
// every vertex keeps at least one tight partner, so that f + eps*h stays
// extremal for small eps > 0. Admissible directions sharing a tight set
// form a face whose dimension is the free sign-component count of that set,
// and h itself witnesses that no further pair is forced to equality there.
//
// Every face has an admissible representative with values 0 or +-2^i and
// gap-free exponents: the sign of h(x)+h(y) on two free parameters depends
// only on their signs and the order of their magnitudes, so generic
// parameter values can be remapped onto powers of two introduced in
// first-use order. The DFS enumerates exactly those representatives, with
// the same two exact prunes as the extremal enumeration (running lower
// bounds from assigned partners, and untight vertices must keep a reachable
// partner). Each distinct tight set met at a leaf is accepted once its
// strict system is confirmed feasible by Fourier-Motzkin elimination over
// the free sign-component parameters.
class DirectionSearch {
  public:
    DirectionSearch(const FiniteGraph& g, const ExtremalValues& f,
                    const Budget& budget)
        : n_(g.n()), budget_(budget), pairs_(equality_pairs(g, f)) {
        m_ = static_cast<int>(pairs_.size());
        partners_.assign(n_, {});
        has_loop_.assign(n_, false);
        for (auto [x, y] : pairs_) {
            if (x == y) {
                has_loop_[x] = true;
            } else {
                partners_[x].push_back(y);
                partners_[y].push_back(x);
            }
        }
    }

    int run() {
        h_.assign(n_, 0);
        lo_.assign(n_, std::numeric_limits<long long>::min());
        tight_.assign(n_, 0);
        best_ = 0;
        dfs(0, -1);
        return best_;
    }

  private:
    using Bits = std::vector<std::uint64_t>;

    void dfs(int k, int maxp) {
        if (k == n_) {
            leaf();
            return;
        }
        std::vector<long long> domain{0};
        for (int j = 0; j <= std::min(maxp + 1, n_ - 1); ++j) {
            domain.push_back(1LL << j);
            domain.push_back(-(1LL << j));
        }
        for (long long v : domain) {
            if (++nodes_ > budget_.max_nodes) throw BudgetExceeded(nodes_);
            if (v < lo_[k]) continue;
            if (has_loop_[k] && v < 0) continue;
            h_[k] = v;
            int next_maxp = maxp;
            if (v != 0) {
                int p = 0;
                while ((1LL << p) != std::llabs(v)) ++p;
                next_maxp = std::max(next_maxp, p);
            }
            std::vector<int> made_tight;
            bool self_tight = (has_loop_[k] && v == 0);
            std::vector<std::pair<int, long long>> shrunk;
            for (int y : partners_[k]) {
                if (y > k) {
                    if (-v > lo_[y]) {
                        shrunk.push_back({y, lo_[y]});
                        lo_[y] = -v;
                    }
                } else if (h_[y] + v == 0) {
                    self_tight = true;
                    if (!tight_[y]) {
                        tight_[y] = 1;
                        made_tight.push_back(y);
                    }
                }
            }
            if (self_tight && !tight_[k]) {
                tight_[k] = 1;
                made_tight.push_back(k);
            }
            bool ok = true;
            for (int u = 0; ok && u <= k; ++u) {
                if (tight_[u]) continue;
                bool possible = false;
                for (int y : partners_[u]) {
                    if (y > k && -h_[u] >= lo_[y]) {
                        possible = true;
                        break;
                    }
                }
                ok = possible;
            }
            if (ok) dfs(k + 1, next_maxp);
            for (auto it = shrunk.rbegin(); it != shrunk.rend(); ++it)
                lo_[it->first] = it->second;
            for (int u : made_tight) tight_[u] = 0;
        }
        h_[k] = 0;
    }

    void leaf() {
        Bits t((m_ + 63) / 64, 0);
        std::vector<std::pair<int, int>> tp;
        for (int p = 0; p < m_; ++p) {
            auto [x, y] = pairs_[p];
            if (h_[x] + h_[y] == 0) {
                t[p / 64] |= 1ULL << (p % 64);
                tp.push_back(pairs_[p]);
            }
        }
        if (!seen_.insert(t).second) return;
        SignComponents sc(n_, tp);
        if (sc.free_count <= best_) return;
        if (confirm(t, sc)) best_ = sc.free_count;
    }

    // Fourier-Motzkin check that all non-tight pairs can be strictly
    // positive at once over the free component parameters; h itself is such
    // a point, so this validates the tight set as a genuine face.
    bool confirm(const Bits& t, const SignComponents& sc) {
        std::vector<int> var_of_comp(sc.rigid.size(), -1);
        int nvars = 0;
        for (std::size_t c = 0; c < sc.rigid.size(); ++c)
            if (!sc.rigid[c]) var_of_comp[c] = nvars++;
        FMSystem sys(nvars);
        for (int q = 0; q < m_; ++q) {
            if (t[q / 64] >> (q % 64) & 1) continue;
            std::vector<Rat> a(nvars, Rat(0));
            auto addv = [&](int v) {
                int c = sc.comp[v];
                if (!sc.rigid[c]) a[var_of_comp[c]] += Rat(sc.sign[v]);
            };
            addv(pairs_[q].first);
            addv(pairs_[q].second);
            sys.add(a, Rat(0), Rel::Gt);
        }
        return sys.feasible();
    }

    int n_, m_ = 0;
    Budget budget_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<std::vector<int>> partners_;
    std::vector<bool> has_loop_;
    std::vector<long long> h_, lo_;
    std::vector<char> tight_;
    std::set<Bits> seen_;
    long long nodes_ = 0;
    int best_ = 0;
};

}  // namespace detail

// Largest dimension of a subdivision cell whose closure contains f: the
// maximum number of free sign components over closed covering subsets of the
// tight pairs of f.
inline int local_dimension(const FiniteGraph& g, const ExtremalValues& f,
                           const Budget& budget = {}) {
    return detail::DirectionSearch(g, f, budget).run();
}

// Combinatorial dimension: maximum cell dimension over the whole injective
// hull. Every maximal cell's closure contains a half-integer extremal
// function, so scanning those functions' local dimensions is exhaustive.
inline int combinatorial_dimension(const FiniteGraph& g,
                                   const Budget& budget = {}) {
    int best = 0;
    for (const ExtremalValues& f : enumerate_extremal(g, 2, budget))
        best = std::max(best, local_dimension(g, f, budget));
    return best;
}

}  // namespace helly
