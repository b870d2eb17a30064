#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <vector>

#include "helly/base.hpp"
#include "helly/graph.hpp"

namespace helly {

// A uniform handle over the graphs the algorithms walk: either a materialized
// finite graph or a king lattice Z^d (optionally restricted to a box). The
// metric is always exposed doubled; edge_len2 is the doubled length of one
// edge (2 for a plain graph, 1 for a half-integer subdivision).
class GraphView {
  public:
    static GraphView finite(std::shared_ptr<const FiniteGraph> g,
                            int edge_len2 = 2) {
        GraphView v;
        v.fin_ = std::move(g);
        v.edge_len2_ = edge_len2;
        return v;
    }

    static GraphView king(int dim) {
        GraphView v;
        v.dim_ = dim;
        return v;
    }

    // Box with sides k_0..k_{d-1}: coordinates 0 <= x_i <= k_i - 1.
    static GraphView king_box(const std::vector<long long>& sides) {
        GraphView v;
        v.dim_ = static_cast<int>(sides.size());
        v.lo_ = std::vector<long long>(sides.size(), 0);
        for (long long k : sides) {
            if (k <= 0) throw Error("box sides must be positive");
            v.hi_.push_back(k - 1);
        }
        return v;
    }

    bool is_king() const { return !fin_; }
    bool is_boxed() const { return !lo_.empty(); }
    bool is_finite() const { return fin_ != nullptr || is_boxed(); }
    int dim() const { return dim_; }
    int edge_len2() const { return edge_len2_; }
    const FiniteGraph& graph() const { return *fin_; }
    const std::vector<long long>& box_lo() const { return lo_; }
    const std::vector<long long>& box_hi() const { return hi_; }

    // King lattice with doubled coordinates: original vertices become even
    // tuples, half-integer points odd ones, and one edge has doubled length 1.
    GraphView subdivided() const {
        if (!is_king()) throw Error("subdivided() needs a king view");
        GraphView v;
        v.dim_ = dim_;
        v.edge_len2_ = 1;
        for (long long c : lo_) v.lo_.push_back(2 * c);
        for (long long c : hi_) v.hi_.push_back(2 * c);
        return v;
    }

    bool contains(const Vertex& x) const {
        if (!is_king())
            return x.size() == 1 && x[0] >= 0 && x[0] < fin_->n();
        if (static_cast<int>(x.size()) != dim_) return false;
        for (int i = 0; i < dim_ && is_boxed(); ++i)
            if (x[i] < lo_[i] || x[i] > hi_[i]) return false;
        return true;
    }

    Dist2 dist2(const Vertex& x, const Vertex& y) const {
        if (is_king()) {
            long long m = 0;
            for (int i = 0; i < dim_; ++i)
                m = std::max(m, std::llabs(x[i] - y[i]));
            return edge_len2_ * m;
        }
        return static_cast<Dist2>(edge_len2_) *
               fin_->dist(static_cast<int>(x[0]), static_cast<int>(y[0]));
    }

    bool adjacent(const Vertex& x, const Vertex& y) const {
        return dist2(x, y) == edge_len2_;
    }

    // Neighbors in ascending lexicographic order.
    std::vector<Vertex> neighbors(const Vertex& x) const {
        std::vector<Vertex> out;
        if (is_king()) {
            Vertex off(dim_, -1);
            for (;;) {
                bool zero = true;
                for (long long c : off) zero &= (c == 0);
                if (!zero) {
                    Vertex y(dim_);
                    for (int i = 0; i < dim_; ++i) y[i] = x[i] + off[i];
                    if (contains(y)) out.push_back(std::move(y));
                }
                int i = dim_ - 1;
                while (i >= 0 && off[i] == 1) off[i--] = -1;
                if (i < 0) break;
                ++off[i];
            }
            return out;
        }
        for (int v : fin_->neighbors(static_cast<int>(x[0])))
            out.push_back({v});
        return out;
    }

    // Closed ball of doubled radius r2 around x, ascending. A half-integer
    // radius on an integer lattice collapses to the floor-radius ball.
    std::vector<Vertex> ball(const Vertex& x, Dist2 r2) const {
        if (r2 < 0) return {};
        long long steps = r2 / edge_len2_;
        std::vector<Vertex> out;
        if (is_king()) {
            Vertex lo(dim_), hi(dim_);
            for (int i = 0; i < dim_; ++i) {
                lo[i] = x[i] - steps;
                hi[i] = x[i] + steps;
                if (is_boxed()) {
                    lo[i] = std::max(lo[i], lo_[i]);
                    hi[i] = std::min(hi[i], hi_[i]);
                }
                if (lo[i] > hi[i]) return {};
            }
            enumerate_box(lo, hi, out);
            return out;
        }
        for (int v = 0; v < fin_->n(); ++v)
            if (fin_->dist(static_cast<int>(x[0]), v) <= steps)
                out.push_back({v});
        return out;
    }

    // Common intersection of closed balls, ascending. Exact box arithmetic on
    // king views; membership filtering on finite ones.
    std::vector<Vertex> intersect_balls(
        const std::vector<std::pair<Vertex, Dist2>>& balls) const {
        if (balls.empty()) throw Error("intersect_balls needs at least one ball");
        for (const auto& [c, r2] : balls)
            if (r2 < 0) return {};
        if (is_king()) {
            Vertex lo(dim_), hi(dim_);
            bool first = true;
            for (const auto& [c, r2] : balls) {
                long long steps = r2 / edge_len2_;
                for (int i = 0; i < dim_; ++i) {
                    long long a = c[i] - steps, b = c[i] + steps;
                    if (first) {
                        lo[i] = a;
                        hi[i] = b;
                    } else {
                        lo[i] = std::max(lo[i], a);
                        hi[i] = std::min(hi[i], b);
                    }
                }
                first = false;
            }
            for (int i = 0; i < dim_; ++i) {
                if (is_boxed()) {
                    lo[i] = std::max(lo[i], lo_[i]);
                    hi[i] = std::min(hi[i], hi_[i]);
                }
                if (lo[i] > hi[i]) return {};
            }
            std::vector<Vertex> out;
            enumerate_box(lo, hi, out);
            return out;
        }
        std::vector<Vertex> out;
        for (const Vertex& v : ball(balls[0].first, balls[0].second)) {
            bool in = true;
            for (std::size_t k = 1; in && k < balls.size(); ++k)
                in = dist2(v, balls[k].first) <= balls[k].second;
            if (in) out.push_back(v);
        }
        return out;
    }

    // All vertices of a finite view, ascending. Throws on infinite lattices.
    std::vector<Vertex> vertices() const {
        if (!is_finite()) throw Error("vertex enumeration needs a finite view");
        std::vector<Vertex> out;
        if (is_king()) {
            enumerate_box(lo_, hi_, out);
            return out;
        }
        for (int v = 0; v < fin_->n(); ++v) out.push_back({v});
        return out;
    }

  private:
    static void enumerate_box(const Vertex& lo, const Vertex& hi,
                              std::vector<Vertex>& out) {
        Vertex cur = lo;
        for (;;) {
            out.push_back(cur);
            int i = static_cast<int>(cur.size()) - 1;
            while (i >= 0 && cur[i] == hi[i]) cur[i] = lo[i], --i;
            if (i < 0) break;
            ++cur[i];
        }
    }

    std::shared_ptr<const FiniteGraph> fin_;
    int dim_ = 0;
    std::vector<long long> lo_, hi_;
    int edge_len2_ = 2;
};

}  // namespace helly
