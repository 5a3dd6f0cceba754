#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace nonrep {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed files, bad CLI flags and the like; maps to exit code 2.
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// Literal overload first: hot loops must not pay for message construction.
inline void require(bool cond, const char* msg) {
    if (!cond) throw Error(msg);
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

// Deterministic seeded RNG. below() avoids uniform_int_distribution on
// purpose: its output is implementation-defined, mt19937's is not.
struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}
    int below(int n) { return static_cast<int>(gen() % static_cast<unsigned>(n)); }
};

// Simple undirected graph: no loops, no parallel edges, ids in [0, n).
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int vertices) : n(vertices), adj(vertices) {
        require(vertices >= 0, "graph: negative vertex count");
    }

    int edge_count() const { return m_; }

    bool valid_vertex(int v) const { return v >= 0 && v < n; }

    bool has_edge(int u, int v) const {
        if (!valid_vertex(u) || !valid_vertex(v)) return false;
        const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
        int other = adj[u].size() <= adj[v].size() ? v : u;
        return std::find(a.begin(), a.end(), other) != a.end();
    }

    void add_edge(int u, int v) {
        require(valid_vertex(u) && valid_vertex(v), "add_edge: vertex id out of range");
        require(u != v, "add_edge: self-loop");
        require(!has_edge(u, v), "add_edge: parallel edge");
        adj[u].push_back(v);
        adj[v].push_back(u);
        ++m_;
    }

    // Edges as (u, v) with u < v, sorted; canonical order for writers.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        es.reserve(m_);
        for (int u = 0; u < n; ++u)
            for (int v : adj[u])
                if (u < v) es.emplace_back(u, v);
        std::sort(es.begin(), es.end());
        return es;
    }

private:
    int m_ = 0;
};

// A separation (G1, G2): parts cover V(G), no edge between the open sides.
struct Separation {
    std::vector<int> left_part;   // V(G1), sorted
    std::vector<int> right_part;  // V(G2), sorted
};

struct SubgraphMap {
    std::vector<int> to_sub;    // original id -> sub id, -1 if absent
    std::vector<int> to_orig;   // sub id -> original id
};

inline std::pair<Graph, SubgraphMap> induced_subgraph(const Graph& g, const std::vector<int>& s) {
    SubgraphMap map;
    map.to_sub.assign(g.n, -1);
    for (int v : s) {
        require(g.valid_vertex(v), "induced_subgraph: id out of range");
        require(map.to_sub[v] == -1, "induced_subgraph: duplicate id in subset");
        map.to_sub[v] = 0;
    }
    for (int v = 0; v < g.n; ++v)
        if (map.to_sub[v] == 0) {
            map.to_sub[v] = static_cast<int>(map.to_orig.size());
            map.to_orig.push_back(v);
        }
    Graph sub(static_cast<int>(map.to_orig.size()));
    for (int v : map.to_orig)
        for (int w : g.adj[v])
            if (map.to_sub[w] != -1 && v < w) sub.add_edge(map.to_sub[v], map.to_sub[w]);
    return {std::move(sub), std::move(map)};
}

inline std::vector<int> component_of(const Graph& g, int start) {
    std::vector<char> seen(g.n, 0);
    std::vector<int> queue{start}, out;
    seen[start] = 1;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        out.push_back(v);
        for (int w : g.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    return static_cast<int>(component_of(g, 0).size()) == g.n;
}

inline bool is_tree(const Graph& g) {
    return g.n >= 1 && g.edge_count() == g.n - 1 && is_connected(g);
}

}  // namespace nonrep
