#pragma once

#include <algorithm>
#include <queue>
#include <utility>
#include <vector>

#include "helly/base.hpp"

namespace helly {

// A finite connected undirected graph on vertices 0..n-1. Distances are plain
// edge counts here; the doubled-metric convention is applied by GraphView.
class FiniteGraph {
  public:
    FiniteGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
        if (n <= 0) throw Error("graph needs at least one vertex");
        adj_.assign(n_, {});
        adj_bits_.assign(n_, std::vector<bool>(n_, false));
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw Error("edge endpoint out of range");
            if (u == v) throw Error("self-loops are not allowed");
            if (adj_bits_[u][v]) continue;
            adj_bits_[u][v] = adj_bits_[v][u] = true;
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
        compute_distances();
    }

    int n() const { return n_; }

    bool adjacent(int u, int v) const { return adj_bits_[u][v]; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    int dist(int u, int v) const { return dist_[u][v]; }

    int eccentricity(int v) const {
        return *std::max_element(dist_[v].begin(), dist_[v].end());
    }

    int diameter() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, eccentricity(v));
        return d;
    }

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    const std::vector<std::vector<int>>& distance_matrix() const {
        return dist_;
    }

  private:
    void compute_distances() {
        dist_.assign(n_, std::vector<int>(n_, -1));
        for (int s = 0; s < n_; ++s) {
            dist_[s][s] = 0;
            std::queue<int> q;
            q.push(s);
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int v : adj_[u])
                    if (dist_[s][v] < 0) {
                        dist_[s][v] = dist_[s][u] + 1;
                        q.push(v);
                    }
            }
            for (int v = 0; v < n_; ++v)
                if (dist_[s][v] < 0) throw DisconnectedGraph();
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<bool>> adj_bits_;
    std::vector<std::vector<int>> dist_;
};

// Full distance matrix in edge counts; throws DisconnectedGraph.
inline std::vector<std::vector<int>> all_pairs_distances(const FiniteGraph& g) {
    return g.distance_matrix();
}

}  // namespace helly
