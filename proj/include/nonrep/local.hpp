#pragma once

#include <map>

#include "nonrep/embedding.hpp"
#include "nonrep/layering.hpp"
#include "nonrep/verify.hpp"

namespace nonrep {

// G_i = G[V_i + ... + V_{min(p, i+2k-1)}]: at most 2k consecutive layers.
// Indices start at 0 so layer-0 vertices have a covering slab per residue.
struct Slab {
    int index = 0;
    std::vector<int> vertices;  // ascending original ids
    Graph subgraph;
    SubgraphMap map;
};

inline std::vector<Slab> slabs(const Graph& g, const Layering& lay, int k) {
    require(k >= 1, "slabs: k >= 1");
    auto layers = lay.by_layer();
    std::vector<Slab> out;
    for (int i = 0; i <= lay.p; ++i) {
        Slab s;
        s.index = i;
        for (int l = i; l <= std::min(lay.p, i + 2 * k - 1); ++l)
            s.vertices.insert(s.vertices.end(), layers[l].begin(), layers[l].end());
        std::sort(s.vertices.begin(), s.vertices.end());
        auto [sub, map] = induced_subgraph(g, s.vertices);
        s.subgraph = std::move(sub);
        s.map = std::move(map);
        out.push_back(std::move(s));
    }
    return out;
}

struct SlabBudget {
    int exact_max_n = 14;      // exact minimal search up to this order
    int initial_colours = 4;   // greedy budget, doubled until success
    int max_colours = 4096;
    long long node_budget = 50'000'000;
};

namespace detail {

// Sequential greedy: each vertex takes the smallest colour that leaves the
// coloured prefix repetition-free, so the result is nonrepetitive as built.
inline std::optional<std::vector<int>> greedy_nonrepetitive(const Graph& g, int colours,
                                                            long long node_budget,
                                                            std::string* block_reason) {
    std::vector<int> col(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        bool placed = false;
        for (int c = 0; c < colours && !placed; ++c) {
            col[v] = c;
            auto witness = find_repetitive_path(g, col, 0, node_budget);
            if (!witness) {
                placed = true;
            } else if (block_reason) {
                *block_reason = "witness of order " + std::to_string(witness->path.size()) +
                                " blocks vertex " + std::to_string(v);
            }
        }
        if (!placed) {
            col[v] = -1;
            return std::nullopt;
        }
    }
    return col;
}

}  // namespace detail

// Nonrepetitive colouring of one slab: exact minimal search for small slabs,
// greedy with a doubling colour budget otherwise. Colour count is reported by
// the caller, not bounded.
inline std::vector<int> colour_slab(const Slab& slab, const SlabBudget& budget = {}) {
    const Graph& g = slab.subgraph;
    require(g.n >= 1, "colour_slab: empty slab");
    if (g.n <= budget.exact_max_n) {
        for (int k = 1; k <= g.n; ++k)
            if (auto col = exact_nonrepetitive_colouring(g, k, budget.node_budget)) return *col;
        throw Error("colour_slab: exact search failed");  // distinct colours always work
    }
    std::string block;
    for (int colours = budget.initial_colours; colours <= budget.max_colours; colours *= 2)
        if (auto col = detail::greedy_nonrepetitive(g, colours, budget.node_budget, &block))
            return *col;
    throw Error("colour_slab: colour budget exhausted (" + block + ")");
}

// psi(v) = (phi_0(v), ..., phi_{2k-1}(v)) with phi_j(v) = psi_i(v) for the
// unique i = j (mod 2k) whose slab contains v; -1 where no such slab exists
// (only possible for j beyond a low layer's window).
struct TupleColouring {
    int k = 0;
    std::vector<std::vector<int>> tuple;  // per vertex, length 2k
    std::vector<int> flat;                // injective on occurring tuples
    std::vector<int> slab_colours;        // per-slab colour counts, reported

    int colours_used() const {
        auto f = flat;
        std::sort(f.begin(), f.end());
        return static_cast<int>(std::unique(f.begin(), f.end()) - f.begin());
    }
};

inline TupleColouring product_colouring(const Graph& g, const Layering& lay, int k,
                                        const std::vector<Slab>& slab_list,
                                        const std::vector<std::vector<int>>& slab_cols) {
    require(slab_list.size() == slab_cols.size(), "product_colouring: size mismatch");
    TupleColouring out;
    out.k = k;
    out.tuple.assign(g.n, std::vector<int>(2 * k, -1));
    for (size_t s = 0; s < slab_list.size(); ++s) {
        const Slab& slab = slab_list[s];
        int j = slab.index % (2 * k);
        require(static_cast<int>(slab_cols[s].size()) == slab.subgraph.n,
                "product_colouring: slab colouring size mismatch");
        for (int v : slab.vertices) {
            // residue uniqueness: the window [layer-2k+1, layer] holds one
            // index per residue, so a second write here is a bug
            require(out.tuple[v][j] == -1, "product_colouring: residue covered twice");
            out.tuple[v][j] = slab_cols[s][slab.map.to_sub[v]];
        }
        int used = 0;
        for (int c : slab_cols[s]) used = std::max(used, c + 1);
        out.slab_colours.push_back(used);
    }
    for (int v = 0; v < g.n; ++v)
        for (int j = 0; j < 2 * k; ++j) {
            bool required = lay.layer[v] - ((lay.layer[v] - j) % (2 * k) + 2 * k) % (2 * k) >= 0;
            if (required && out.tuple[v][j] == -1)
                throw Error("product_colouring: missing (vertex, residue) cover");
        }
    out.flat.assign(g.n, -1);
    std::map<std::vector<int>, int> ids;
    for (int v = 0; v < g.n; ++v)
        out.flat[v] = ids.emplace(out.tuple[v], static_cast<int>(ids.size())).first->second;
    return out;
}

// Bounded-length pipeline: no repetitively coloured path of order <= 2k. Any
// such path lies in the slab indexed by its minimum layer, where repetition
// would contradict the slab colouring.
inline TupleColouring colour_local_planar(const RotationSystem& rs, int root, int k,
                                          const SlabBudget& budget = {}) {
    require(k >= 1, "colour_local_planar: k >= 1");
    require(rs.graph.valid_vertex(root), "colour_local_planar: root out of range");
    Layering lay = bfs_layering(rs.graph, root);
    auto slab_list = slabs(rs.graph, lay, k);
    std::vector<std::vector<int>> cols;
    cols.reserve(slab_list.size());
    for (const Slab& s : slab_list) cols.push_back(colour_slab(s, budget));
    return product_colouring(rs.graph, lay, k, slab_list, cols);
}

}  // namespace nonrep
