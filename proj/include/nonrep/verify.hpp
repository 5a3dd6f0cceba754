#pragma once

#include <optional>

#include "nonrep/graph.hpp"
#include "nonrep/layering.hpp"

namespace nonrep {

struct CheckReport {
    bool ok = true;
    std::string violation;
};

// Repetitively coloured path (v_1..v_2t): colours of the halves coincide.
struct Witness {
    std::vector<int> path;
    std::vector<int> half_colours;
};

inline std::optional<std::pair<int, int>> find_improper_edge(const Graph& g,
                                                             const std::vector<int>& col) {
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v && col[u] == col[v]) return std::make_pair(u, v);
    return std::nullopt;
}

inline bool is_proper(const Graph& g, const std::vector<int>& col) {
    return !find_improper_edge(g, col).has_value();
}

namespace detail {

// A repetitive path is two vertex-disjoint paths (x_1..x_t), (y_1..y_t) with
// colourwise-equal positions and an edge x_t ~ y_1; both halves are grown in
// lockstep, which prunes on colour agreement at every step. Equivalent to
// enumerating simple paths and testing the half split, but feasible on
// instances whose raw path count is astronomical.
struct PathPairSearch {
    const Graph& g;
    const std::vector<int>& col;
    int max_t;
    long long budget;
    long long nodes = 0;
    std::vector<char> used;
    std::vector<int> xs, ys;

    PathPairSearch(const Graph& g_, const std::vector<int>& col_, int max_t_, long long budget_)
        : g(g_), col(col_), max_t(max_t_), budget(budget_), used(g_.n, 0) {}

    bool active(int v) const { return col[v] >= 0; }

    bool dfs() {
        if (++nodes > budget) throw Error("find_repetitive_path: node budget exceeded");
        if (g.has_edge(xs.back(), ys.front())) return true;
        if (static_cast<int>(xs.size()) >= max_t) return false;
        for (int x2 : g.adj[xs.back()]) {
            if (used[x2] || !active(x2)) continue;
            for (int y2 : g.adj[ys.back()]) {
                if (used[y2] || y2 == x2 || col[y2] != col[x2]) continue;
                used[x2] = used[y2] = 1;
                xs.push_back(x2);
                ys.push_back(y2);
                if (dfs()) return true;
                xs.pop_back();
                ys.pop_back();
                used[x2] = used[y2] = 0;
            }
        }
        return false;
    }

    std::optional<Witness> run() {
        for (int x1 = 0; x1 < g.n; ++x1) {
            if (!active(x1)) continue;
            for (int y1 = 0; y1 < g.n; ++y1) {
                if (y1 == x1 || !active(y1) || col[y1] != col[x1]) continue;
                used[x1] = used[y1] = 1;
                xs = {x1};
                ys = {y1};
                if (dfs()) {
                    Witness w;
                    w.path = xs;
                    w.path.insert(w.path.end(), ys.begin(), ys.end());
                    for (int v : xs) w.half_colours.push_back(col[v]);
                    return w;
                }
                used[x1] = used[y1] = 0;
            }
        }
        return std::nullopt;
    }
};

}  // namespace detail

// Exhaustive and deterministic; vertices with colour < 0 are ignored (used by
// the incremental searches on partially coloured graphs). max_order = 0 means
// unbounded.
inline std::optional<Witness> find_repetitive_path(const Graph& g, const std::vector<int>& col,
                                                   int max_order = 0,
                                                   long long node_budget = 100'000'000) {
    require(static_cast<int>(col.size()) == g.n, "find_repetitive_path: colouring size mismatch");
    int max_t = max_order > 0 ? max_order / 2 : g.n / 2;
    if (max_t == 0) return std::nullopt;
    detail::PathPairSearch search(g, col, max_t, node_budget);
    return search.run();
}

inline bool is_nonrepetitive(const Graph& g, const std::vector<int>& col, int max_order = 0,
                             long long node_budget = 100'000'000) {
    return !find_repetitive_path(g, col, max_order, node_budget).has_value();
}

namespace detail {

struct ExactColourer {
    const Graph& g;
    int k;
    long long budget;
    long long nodes = 0;
    std::vector<int> col;

    ExactColourer(const Graph& g_, int k_, long long budget_)
        : g(g_), k(k_), budget(budget_), col(g_.n, -1) {}

    bool extend(int v, int used_max) {
        if (v == g.n) return true;
        if (++nodes > budget) throw Error("exact_pi: inconclusive (node budget exceeded)");
        int top = std::min(used_max + 1, k - 1);  // first occurrences ascending
        for (int c = 0; c <= top; ++c) {
            col[v] = c;
            bool clean = true;
            for (int w : g.adj[v])
                if (col[w] == c) clean = false;  // order-2 repetition
            if (clean) {
                PathPairSearch search(g, col, g.n / 2, budget - nodes);
                clean = !search.run().has_value();
                nodes += search.nodes;
            }
            if (clean && extend(v + 1, std::max(used_max, c))) return true;
            col[v] = -1;
        }
        return false;
    }
};

}  // namespace detail

inline std::optional<std::vector<int>> exact_nonrepetitive_colouring(
    const Graph& g, int k, long long node_budget = 400'000'000) {
    detail::ExactColourer colourer(g, k, node_budget);
    if (colourer.extend(0, -1)) return colourer.col;
    return std::nullopt;
}

// Minimum k admitting a nonrepetitive k-colouring, by exhaustive backtracking
// with incremental repetition checks and colour-symmetry breaking.
inline int exact_pi(const Graph& g, int max_colours = 0, int max_n = 16,
                    long long node_budget = 400'000'000) {
    require(g.n >= 1, "exact_pi: empty graph");
    require(g.n <= max_n, "exact_pi: graph too large for exact search (raise max_n)");
    int limit = max_colours > 0 ? max_colours : g.n;
    for (int k = 1; k <= limit; ++k)
        if (exact_nonrepetitive_colouring(g, k, node_budget)) return k;
    throw Error("exact_pi: inconclusive (max_colours exceeded)");
}

inline CheckReport verify_layering(const Graph& g, const Layering& lay) {
    if (static_cast<int>(lay.layer.size()) != g.n)
        return {false, "layering: size mismatch"};
    for (int v = 0; v < g.n; ++v)
        if (lay.layer[v] < 0 || lay.layer[v] > lay.p)
            return {false, "layering: index out of range at vertex " + std::to_string(v)};
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v && std::abs(lay.layer[u] - lay.layer[v]) > 1)
                return {false, "layering: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                   ") spans more than one layer"};
    return {};
}

inline CheckReport verify_separation(const Graph& g, const Separation& sep) {
    std::vector<char> in_left(g.n, 0), in_right(g.n, 0);
    for (int v : sep.left_part) {
        if (!g.valid_vertex(v)) return {false, "separation: id out of range"};
        in_left[v] = 1;
    }
    for (int v : sep.right_part) {
        if (!g.valid_vertex(v)) return {false, "separation: id out of range"};
        in_right[v] = 1;
    }
    for (int v = 0; v < g.n; ++v)
        if (!in_left[v] && !in_right[v])
            return {false, "separation: vertex " + std::to_string(v) + " in neither part"};
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) {
            if (u > v) continue;
            bool u_only_left = in_left[u] && !in_right[u];
            bool u_only_right = in_right[u] && !in_left[u];
            bool v_only_left = in_left[v] && !in_right[v];
            bool v_only_right = in_right[v] && !in_left[v];
            if ((u_only_left && v_only_right) || (u_only_right && v_only_left))
                return {false, "separation: edge (" + std::to_string(u) + ", " +
                                   std::to_string(v) + ") crosses the open sides"};
        }
    return {};
}

}  // namespace nonrep
