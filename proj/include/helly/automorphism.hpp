#pragma once

#include <algorithm>
#include <vector>

#include "helly/base.hpp"
#include "helly/graph.hpp"
#include "helly/view.hpp"

namespace helly {

// A graph automorphism in one of two representations: a vertex permutation of
// a finite graph, or an affine map x -> Mx + b of a king lattice whose linear
// part M is a signed permutation matrix.
class Automorphism {
  public:
    static Automorphism permutation(std::vector<int> p, const FiniteGraph& g) {
        Automorphism a;
        int n = g.n();
        if (static_cast<int>(p.size()) != n)
            throw Error("permutation length does not match vertex count");
        std::vector<int> inv(n, -1);
        for (int v = 0; v < n; ++v) {
            if (p[v] < 0 || p[v] >= n || inv[p[v]] != -1)
                throw Error("not a permutation");
            inv[p[v]] = v;
        }
        for (auto [u, v] : g.edge_list())
            if (!g.adjacent(p[u], p[v]))
                throw Error("permutation does not preserve adjacency");
        a.perm_ = std::move(p);
        a.inv_ = std::move(inv);
        return a;
    }

    static Automorphism affine(std::vector<std::vector<long long>> m,
                               std::vector<long long> b) {
        Automorphism a;
        int d = static_cast<int>(m.size());
        if (d == 0 || static_cast<int>(b.size()) != d)
            throw Error("affine map needs square M and matching b");
        std::vector<int> col_used(d, 0);
        for (const auto& row : m) {
            if (static_cast<int>(row.size()) != d)
                throw Error("affine map needs square M and matching b");
            int nonzero = -1;
            for (int j = 0; j < d; ++j) {
                if (row[j] == 0) continue;
                if (row[j] != 1 && row[j] != -1)
                    throw Error("M must be a signed permutation matrix");
                if (nonzero >= 0) throw Error("M must be a signed permutation matrix");
                nonzero = j;
            }
            if (nonzero < 0 || col_used[nonzero]++)
                throw Error("M must be a signed permutation matrix");
        }
        a.affine_ = true;
        a.m_ = std::move(m);
        a.b_ = std::move(b);
        return a;
    }

    static Automorphism identity_affine(int dim) {
        std::vector<std::vector<long long>> m(dim,
                                              std::vector<long long>(dim, 0));
        for (int i = 0; i < dim; ++i) m[i][i] = 1;
        return affine(std::move(m), std::vector<long long>(dim, 0));
    }

    static Automorphism identity_permutation(const FiniteGraph& g) {
        std::vector<int> p(g.n());
        for (int v = 0; v < g.n(); ++v) p[v] = v;
        return permutation(std::move(p), g);
    }

    bool is_affine() const { return affine_; }
    int dim() const { return static_cast<int>(affine_ ? b_.size() : perm_.size()); }
    const std::vector<std::vector<long long>>& linear() const { return m_; }
    const std::vector<long long>& offset() const { return b_; }
    const std::vector<int>& perm() const { return perm_; }

    Vertex apply(const Vertex& x) const {
        if (!affine_) return {perm_[static_cast<int>(x[0])]};
        int d = dim();
        Vertex y(d, 0);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) y[i] += m_[i][j] * x[j];
            y[i] += b_[i];
        }
        return y;
    }

    Vertex apply_inv(const Vertex& x) const { return inverse().apply(x); }

    Automorphism inverse() const {
        Automorphism a;
        if (!affine_) {
            a.perm_ = inv_;
            a.inv_ = perm_;
            return a;
        }
        // M^-1 = M^T for a signed permutation; b' = -M^T b.
        int d = dim();
        a.affine_ = true;
        a.m_.assign(d, std::vector<long long>(d, 0));
        a.b_.assign(d, 0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) a.m_[i][j] = m_[j][i];
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) a.b_[i] -= a.m_[i][j] * b_[j];
        return a;
    }

    // this after other: x -> this(other(x)).
    Automorphism compose(const Automorphism& other) const {
        Automorphism a;
        if (!affine_) {
            int n = static_cast<int>(perm_.size());
            a.perm_.resize(n);
            a.inv_.resize(n);
            for (int v = 0; v < n; ++v) a.perm_[v] = perm_[other.perm_[v]];
            for (int v = 0; v < n; ++v) a.inv_[a.perm_[v]] = v;
            return a;
        }
        int d = dim();
        a.affine_ = true;
        a.m_.assign(d, std::vector<long long>(d, 0));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k)
                    a.m_[i][j] += m_[i][k] * other.m_[k][j];
        a.b_ = b_;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) a.b_[i] += m_[i][j] * other.b_[j];
        return a;
    }

    Automorphism power(long long k) const {
        Automorphism base = k >= 0 ? *this : inverse();
        if (k < 0) k = -k;
        Automorphism acc = affine_ ? identity_affine(dim())
                                   : trusted_identity(static_cast<int>(perm_.size()));
        for (; k > 0; --k) acc = acc.compose(base);
        return acc;
    }

    bool is_identity() const {
        if (!affine_) {
            for (int v = 0; v < static_cast<int>(perm_.size()); ++v)
                if (perm_[v] != v) return false;
            return true;
        }
        for (long long c : b_)
            if (c != 0) return false;
        int d = dim();
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (m_[i][j] != (i == j ? 1 : 0)) return false;
        return true;
    }

    // Smallest r in [1, cap] with g^r = id, or 0 if none.
    int order(int cap = 64) const {
        Automorphism acc = *this;
        for (int r = 1; r <= cap; ++r) {
            if (acc.is_identity()) return r;
            acc = acc.compose(*this);
        }
        return 0;
    }

    // Same map on the doubled-coordinate lattice of a subdivided king view.
    Automorphism rescaled_double() const {
        if (!affine_) throw Error("rescaling needs an affine map");
        std::vector<long long> b2 = b_;
        for (long long& c : b2) c *= 2;
        return affine(m_, std::move(b2));
    }

    // Checks the map is a self-bijection of the view: exhaustively for finite
    // graphs (done at construction), by corner closure for boxes.
    void validate_on(const GraphView& view) const {
        if (!affine_) {
            if (view.is_king()) throw Error("permutation map on a king view");
            return;
        }
        if (!view.is_king() || view.dim() != dim())
            throw Error("affine map does not match view dimension");
        if (!view.is_boxed()) return;
        int d = dim();
        for (long long mask = 0; mask < (1LL << d); ++mask) {
            Vertex corner(d);
            for (int i = 0; i < d; ++i)
                corner[i] = (mask >> i & 1) ? view.box_hi()[i] : view.box_lo()[i];
            if (!view.contains(apply(corner)))
                throw Error("affine map does not preserve the box");
        }
    }

    // Total order usable as a map key (deterministic across runs).
    std::vector<long long> encode() const {
        std::vector<long long> k;
        k.push_back(affine_ ? 1 : 0);
        if (!affine_) {
            for (int v : perm_) k.push_back(v);
            return k;
        }
        for (const auto& row : m_)
            for (long long c : row) k.push_back(c);
        for (long long c : b_) k.push_back(c);
        return k;
    }

    friend bool operator==(const Automorphism& a, const Automorphism& b) {
        return a.encode() == b.encode();
    }
    friend bool operator<(const Automorphism& a, const Automorphism& b) {
        return a.encode() < b.encode();
    }

  private:
    static Automorphism trusted_identity(int n) {
        Automorphism a;
        a.perm_.resize(n);
        a.inv_.resize(n);
        for (int v = 0; v < n; ++v) a.perm_[v] = a.inv_[v] = v;
        return a;
    }

    bool affine_ = false;
    std::vector<int> perm_, inv_;
    std::vector<std::vector<long long>> m_;
    std::vector<long long> b_;
};

inline Automorphism compose(const Automorphism& a, const Automorphism& b) {
    return a.compose(b);
}

}  // namespace helly
