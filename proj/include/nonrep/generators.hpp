#pragma once

#include "nonrep/embedding.hpp"
#include "nonrep/layering.hpp"

namespace nonrep {

// Random plane triangulation: stack vertices into random internal faces, then
// diversify with random diagonal flips that keep the graph simple. The outer
// face stays the starting triangle (0, 1, 2).
inline RotationSystem gen_triangulation(int n, unsigned seed, int flips = 0) {
    require(n >= 3, "gen_triangulation: n >= 3");
    Rng rng(seed);
    std::vector<std::vector<int>> rot(n);
    rot[0] = {1, 2};
    rot[1] = {2, 0};
    rot[2] = {0, 1};
    std::vector<std::array<int, 3>> internal{{0, 2, 1}};  // traced corner order
    std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}};
    auto succ = [&](int v, int w) {
        auto& r = rot[v];
        int i = static_cast<int>(std::find(r.begin(), r.end(), w) - r.begin());
        return r[(i + 1) % r.size()];
    };
    for (int v = 3; v < n; ++v) {
        int fi = rng.below(static_cast<int>(internal.size()));
        auto [a, b, c] = internal[fi];
        rot[v] = {a, c, b};
        detail::insert_after(rot[a], c, v);
        detail::insert_after(rot[b], a, v);
        detail::insert_after(rot[c], b, v);
        internal[fi] = {a, b, v};
        internal.push_back({b, c, v});
        internal.push_back({c, a, v});
        edges.emplace_back(a, v);
        edges.emplace_back(b, v);
        edges.emplace_back(c, v);
    }
    auto adjacent = [&](int u, int v) {
        return std::find(rot[u].begin(), rot[u].end(), v) != rot[u].end();
    };
    for (int attempt = 0; attempt < flips; ++attempt) {
        auto& [u, v] = edges[rng.below(static_cast<int>(edges.size()))];
        if (u < 3 && v < 3) continue;  // outer triangle stays put
        int x = succ(v, u);            // apex left of u -> v
        int y = succ(u, v);            // apex left of v -> u
        if (x == y || adjacent(x, y)) continue;
        detail::insert_after(rot[x], v, y);
        detail::insert_after(rot[y], u, x);
        rot[u].erase(std::find(rot[u].begin(), rot[u].end(), v));
        rot[v].erase(std::find(rot[v].begin(), rot[v].end(), u));
        u = std::min(x, y);
        v = std::max(x, y);
    }
    RotationSystem rs;
    rs.graph = Graph(n);
    rs.rotation = std::move(rot);
    for (int u = 0; u < n; ++u)
        for (int w : rs.rotation[u])
            if (u < w) rs.graph.add_edge(u, w);
    rs.outer_face = detail::trace_from(rs, 0, 1);
    return rs;
}

// G_T: a rooted plane tree plus a cycle through each BFS layer in drawing
// order (single edge for layers of two, nothing below that). Layers are laid
// out on concentric circles around the root, so the rotation at a vertex runs
// parent, clockwise-previous, children, clockwise-next.
inline RotationSystem gen_tree_cycles(
    const Graph& tree, int root,
    const std::vector<std::vector<int>>* child_order = nullptr) {
    require(is_tree(tree), "gen_tree_cycles: input has a cycle or is disconnected");
    require(tree.valid_vertex(root), "gen_tree_cycles: root out of range");
    Layering lay = bfs_layering(tree, root);
    std::vector<std::vector<int>> children(tree.n);
    int child_total = 0;
    for (int v = 0; v < tree.n; ++v) {
        children[v] = child_order ? (*child_order)[v] : tree.adj[v];
        std::erase_if(children[v], [&](int w) { return lay.layer[w] != lay.layer[v] + 1; });
        if (!child_order) std::sort(children[v].begin(), children[v].end());
        child_total += static_cast<int>(children[v].size());
    }
    require(child_total == tree.n - 1, "gen_tree_cycles: child order misses children");
    std::vector<std::vector<int>> ring(lay.p + 1);
    ring[0] = {root};
    for (int i = 0; i < lay.p; ++i)
        for (int v : ring[i]) ring[i + 1].insert(ring[i + 1].end(), children[v].begin(), children[v].end());

    RotationSystem rs;
    rs.graph = Graph(tree.n);
    rs.rotation.resize(tree.n);
    for (const auto& [u, v] : tree.edges()) rs.graph.add_edge(u, v);
    for (int i = 0; i <= lay.p; ++i) {
        int q = static_cast<int>(ring[i].size());
        for (int j = 0; j < q; ++j) {
            int v = ring[i][j];
            auto& r = rs.rotation[v];
            if (i > 0) r.push_back(bfs_parent(tree, lay, v));
            if (q >= 3 || (q == 2 && j == 1)) r.push_back(ring[i][(j - 1 + q) % q]);
            r.insert(r.end(), children[v].begin(), children[v].end());
            if (q >= 3 || (q == 2 && j == 0)) r.push_back(ring[i][(j + 1) % q]);
        }
        if (q >= 3)
            for (int j = 0; j < q; ++j) rs.graph.add_edge(ring[i][j], ring[i][(j + 1) % q]);
        else if (q == 2)
            rs.graph.add_edge(ring[i][0], ring[i][1]);
    }
    int q_top = static_cast<int>(ring[lay.p].size());
    if (q_top >= 2)
        rs.outer_face = detail::trace_from(rs, ring[lay.p][0], ring[lay.p][1]);
    else if (lay.p >= 1)
        rs.outer_face = detail::trace_from(rs, bfs_parent(tree, lay, ring[lay.p][0]), ring[lay.p][0]);
    return rs;
}

// Lower-bound gadget: a 22-path dominated by adjacent x and y, each path
// vertex fully joined to its own copy of h. Abstract graph only.
inline Graph gen_lowerbound(const Graph& h) {
    constexpr int path_len = 22;
    int hn = h.n;
    Graph g(path_len + 2 + path_len * hn);
    int x = path_len, y = path_len + 1;
    g.add_edge(x, y);
    for (int i = 0; i < path_len; ++i) {
        if (i + 1 < path_len) g.add_edge(i, i + 1);
        g.add_edge(x, i);
        g.add_edge(y, i);
        int base = path_len + 2 + i * hn;
        for (int j = 0; j < hn; ++j) g.add_edge(i, base + j);
        for (const auto& [a, b] : h.edges()) g.add_edge(base + a, base + b);
    }
    return g;
}

inline Graph gen_path(int n) {
    require(n >= 1, "gen_path: n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph gen_cycle(int n) {
    require(n >= 3, "gen_cycle: n >= 3");
    Graph g = gen_path(n);
    g.add_edge(0, n - 1);
    return g;
}

// Uniform attachment: vertex i hangs off a uniformly random earlier vertex.
inline Graph gen_random_tree(int n, unsigned seed) {
    require(n >= 1, "gen_random_tree: n >= 1");
    Rng rng(seed);
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(rng.below(v), v);
    return g;
}

}  // namespace nonrep
