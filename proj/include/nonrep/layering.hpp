#pragma once

#include <deque>
#include <optional>

#include "nonrep/graph.hpp"

namespace nonrep {

// BFS layering: layer[v] = dist(v, root). Every edge spans at most one index.
struct Layering {
    std::vector<int> layer;
    int p = 0;  // max layer index
    int root = 0;

    std::vector<std::vector<int>> by_layer() const {
        std::vector<std::vector<int>> out(p + 1);
        for (int v = 0; v < static_cast<int>(layer.size()); ++v) out[layer[v]].push_back(v);
        return out;
    }
};

inline Layering bfs_layering(const Graph& g, int root) {
    require(g.valid_vertex(root), "bfs_layering: root out of range");
    Layering lay;
    lay.root = root;
    lay.layer.assign(g.n, -1);
    lay.layer[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        lay.p = std::max(lay.p, lay.layer[v]);
        for (int w : g.adj[v])
            if (lay.layer[w] == -1) {
                lay.layer[w] = lay.layer[v] + 1;
                queue.push_back(w);
            }
    }
    for (int v = 0; v < g.n; ++v)
        if (lay.layer[v] == -1)
            throw Error("bfs_layering: graph disconnected, vertex " + std::to_string(v) +
                        " unreachable from root " + std::to_string(root));
    return lay;
}

// BFS parent with lowest-id tie-breaking: the minimum-id neighbour one layer up.
inline int bfs_parent(const Graph& g, const Layering& lay, int v) {
    int best = -1;
    for (int w : g.adj[v])
        if (lay.layer[w] == lay.layer[v] - 1 && (best == -1 || w < best)) best = w;
    require(best != -1, "bfs_parent: no parent (not a BFS layering?)");
    return best;
}

// Arms for monotone-path agreement: layer-indexed, one vertex per layer.
struct ArmPair {
    std::vector<int> u_arm;
    std::vector<int> v_arm;
};

// Path (v = z_l, ..., z_0 = root), returned layer-indexed: result[i] = z_i.
// With arms given: once z_i equals an arm's layer-i vertex, the path follows
// that arm down to the root (u-arm preferred when both arms are met at once).
inline std::vector<int> monotone_path(const Graph& g, const Layering& lay, int v,
                                      const std::optional<ArmPair>& agree_with = std::nullopt) {
    require(g.valid_vertex(v), "monotone_path: vertex out of range");
    int l = lay.layer[v];
    std::vector<int> z(l + 1, -1);
    z[l] = v;
    for (int i = l; i > 0; --i) {
        if (agree_with) {
            const auto& u = agree_with->u_arm;
            const auto& w = agree_with->v_arm;
            if (i < static_cast<int>(u.size()) && z[i] == u[i]) {
                for (int j = i - 1; j >= 0; --j) z[j] = u[j];
                return z;
            }
            if (i < static_cast<int>(w.size()) && z[i] == w[i]) {
                for (int j = i - 1; j >= 0; --j) z[j] = w[j];
                return z;
            }
        }
        z[i - 1] = bfs_parent(g, lay, z[i]);
    }
    return z;
}

}  // namespace nonrep
