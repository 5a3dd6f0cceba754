#pragma once

#include <functional>
#include <memory>
#include <numeric>

#include "nonrep/separator.hpp"
#include "nonrep/words.hpp"

namespace nonrep {

struct Fraction {
    int num = 1, den = 3;
};

// Balance parameter epsilon and per-layer boundary cap c; the planar pipeline
// runs with epsilon = 1/3, c = 2.
struct EngineParams {
    Fraction epsilon{1, 3};
    int c = 2;
};

struct LabelRecord {
    std::vector<int> depth, label;  // per vertex, both >= 1 once assigned
    int max_depth = 0;
    int c = 0;
};

struct EngineStats {
    long long oracle_calls = 0;
    long long contract_checks = 0;
    long long nodes = 0;
    int max_depth = 0;
};

using SeparatorOracle = std::function<Separation(const std::vector<int>&)>;

namespace detail {

struct LabelRecursion {
    const Graph& g;
    const Layering& lay;
    const SeparatorOracle& oracle;
    EngineParams params;
    LabelRecord& rec;
    EngineStats* stats;
    std::vector<char> in_left, in_right;

    LabelRecursion(const Graph& g_, const Layering& lay_, const SeparatorOracle& oracle_,
                   EngineParams params_, LabelRecord& rec_, EngineStats* stats_)
        : g(g_), lay(lay_), oracle(oracle_), params(params_), rec(rec_), stats(stats_),
          in_left(g_.n, 0), in_right(g_.n, 0) {}

    void compute(const std::vector<int>& b, int d) {
        if (b.empty()) return;
        if (stats) {
            ++stats->nodes;
            ++stats->oracle_calls;
        }
        Separation sep = oracle(b);

        std::fill(in_left.begin(), in_left.end(), 0);
        std::fill(in_right.begin(), in_right.end(), 0);
        for (int v : sep.left_part) in_left[v] = 1;
        for (int v : sep.right_part) in_right[v] = 1;
        for (int v = 0; v < g.n; ++v)
            require(in_left[v] || in_right[v], "oracle violated: parts do not cover V(G)");

        // separation contract, checked on every call, never trusted
        std::vector<int> boundary_b, open_left_b, open_right_b;
        for (int v : b) {
            if (in_left[v] && in_right[v]) boundary_b.push_back(v);
            else if (in_left[v]) open_left_b.push_back(v);
            else open_right_b.push_back(v);
        }
        std::vector<int> per_layer(lay.p + 1, 0);
        for (int v : boundary_b)
            require(++per_layer[lay.layer[v]] <= params.c,
                    "oracle violated: layer holds more than c boundary vertices of B");
        long long bn = static_cast<long long>(b.size());
        long long shrink_num = params.epsilon.den - params.epsilon.num;  // (1 - eps) numerator
        require(static_cast<long long>(open_left_b.size()) * params.epsilon.den <= shrink_num * bn,
                "oracle violated: open side exceeds (1-eps)|B| in B");
        require(static_cast<long long>(open_right_b.size()) * params.epsilon.den <= shrink_num * bn,
                "oracle violated: open side exceeds (1-eps)|B| in B");
        if (stats) stats->contract_checks += 3;

        // depth now, labels injective per layer, ascending vertex id
        std::fill(per_layer.begin(), per_layer.end(), 0);
        for (int v : boundary_b) {  // boundary_b ascends because b does
            require(rec.depth[v] == 0, "recursive_labels: vertex labelled twice");
            rec.depth[v] = d;
            rec.label[v] = ++per_layer[lay.layer[v]];
            rec.max_depth = std::max(rec.max_depth, d);
        }
        if (stats) stats->max_depth = std::max(stats->max_depth, rec.max_depth);

        compute(open_left_b, d + 1);
        compute(open_right_b, d + 1);
    }
};

}  // namespace detail

// COMPUTE(V(G), 1): split B along the oracle's separation, stamp the boundary
// with the current depth and per-layer labels 1..c, recurse on the open sides.
inline LabelRecord recursive_labels(const Graph& g, const Layering& lay,
                                    const SeparatorOracle& oracle, const EngineParams& params,
                                    EngineStats* stats = nullptr) {
    require(params.c >= 1, "recursive_labels: c >= 1");
    require(params.epsilon.num >= 1 && params.epsilon.num < params.epsilon.den,
            "recursive_labels: epsilon in (0,1)");
    LabelRecord rec;
    rec.depth.assign(g.n, 0);
    rec.label.assign(g.n, 0);
    rec.c = params.c;
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    detail::LabelRecursion run(g, lay, oracle, params, rec, stats);
    run.compute(all, 1);
    for (int v = 0; v < g.n; ++v)
        require(rec.depth[v] >= 1, "recursive_labels: vertex never labelled");
    return rec;
}

// Vertex colour (pattern, depth, label) with an injective flat encoding.
struct StructuredColouring {
    std::vector<int> pattern, depth, label, flat;
    int sigma = 0, c = 0, max_depth = 0;

    int colours_used() const {
        std::vector<int> f = flat;
        std::sort(f.begin(), f.end());
        return static_cast<int>(std::unique(f.begin(), f.end()) - f.begin());
    }
};

inline StructuredColouring assemble_colouring(const Layering& lay, const WalkCertificate& cert,
                                              const LabelRecord& labels) {
    require(cert.sequence.length() >= lay.p + 1,
            "assemble_colouring: certificate shorter than the layering");
    int n = static_cast<int>(lay.layer.size());
    StructuredColouring col;
    col.sigma = cert.sequence.sigma;
    col.c = labels.c;
    col.max_depth = labels.max_depth;
    col.pattern.resize(n);
    col.flat.resize(n);
    col.depth = labels.depth;
    col.label = labels.label;
    for (int v = 0; v < n; ++v) {
        col.pattern[v] = cert.sequence.symbols[lay.layer[v]];
        col.flat[v] = (col.pattern[v] * col.c + (col.label[v] - 1)) * col.max_depth +
                      (col.depth[v] - 1);
    }
    return col;
}

// Whole-graph separation when |B| <= 2, balanced lollipop otherwise.
inline SeparatorOracle lollipop_oracle(std::shared_ptr<LollipopSearch> search) {
    return [search](const std::vector<int>& b) {
        int n = search->embedding().graph.n;
        if (b.size() <= 2) {
            Separation sep;
            sep.left_part.resize(n);
            std::iota(sep.left_part.begin(), sep.left_part.end(), 0);
            sep.right_part = sep.left_part;
            return sep;
        }
        auto mask = vertex_mask(n, b);
        auto found = search->find_balanced(mask, static_cast<int>(b.size()));
        return search->separation(found.lollipop, mask);
    };
}

// Median split for path graphs (vertex ids along the path). Used to exercise
// the recursion separately from the planar separator; c = 1 suffices.
inline SeparatorOracle median_path_oracle(const Graph& g) {
    return [n = g.n](const std::vector<int>& b) {
        Separation sep;
        if (b.size() <= 2) {
            sep.left_part.resize(n);
            std::iota(sep.left_part.begin(), sep.left_part.end(), 0);
            sep.right_part = sep.left_part;
            return sep;
        }
        int median = b[(b.size() - 1) / 2];
        for (int v = 0; v <= median; ++v) sep.left_part.push_back(v);
        for (int v = median; v < n; ++v) sep.right_part.push_back(v);
        return sep;
    };
}

struct PlanarColouring {
    StructuredColouring colouring;
    EngineStats engine_stats;
    SeparatorStats separator_stats;
    int layers = 0;  // p of the triangulation's layering
};

// Full planar pipeline: triangulate, layer from the root, generate the walk
// certificate, recurse with the lollipop oracle (eps = 1/3, c = 2), restrict
// to the input graph. With sigma = 4 the colour count is at most
// 8 (1 + log_{3/2} n).
inline PlanarColouring colour_planar(const RotationSystem& rs, int root, int t_max = 6) {
    require(rs.graph.valid_vertex(root), "colour_planar: root out of range");
    PlanarColouring out;
    int n = rs.graph.n;
    if (n <= 3) {  // trivially nonrepetitive with distinct colours
        out.colouring.sigma = n;
        out.colouring.c = 1;
        out.colouring.max_depth = 1;
        out.colouring.pattern.resize(n);
        out.colouring.flat.resize(n);
        std::iota(out.colouring.pattern.begin(), out.colouring.pattern.end(), 0);
        std::iota(out.colouring.flat.begin(), out.colouring.flat.end(), 0);
        out.colouring.depth.assign(n, 1);
        out.colouring.label.assign(n, 1);
        return out;
    }
    RotationSystem tri = triangulate(rs);
    Layering lay = bfs_layering(tri.graph, root);
    WalkCertificate cert = generate_walk_certified(lay.p + 1, 4, t_max);
    auto search = std::make_shared<LollipopSearch>(tri, lay, &out.separator_stats);
    LabelRecord labels = recursive_labels(tri.graph, lay, lollipop_oracle(search),
                                          EngineParams{{1, 3}, 2}, &out.engine_stats);
    out.colouring = assemble_colouring(lay, cert, labels);
    out.layers = lay.p;
    return out;
}

// Pattern-only colouring of a tree: colour = certificate symbol of the BFS
// layer. At most sigma colours.
inline std::vector<int> colour_tree(const Graph& tree, int root, const WalkCertificate& cert) {
    require(is_tree(tree), "colour_tree: input is not a tree");
    Layering lay = bfs_layering(tree, root);
    require(cert.sequence.length() >= lay.p + 1, "colour_tree: certificate too short");
    std::vector<int> col(tree.n);
    for (int v = 0; v < tree.n; ++v) col[v] = cert.sequence.symbols[lay.layer[v]];
    return col;
}

}  // namespace nonrep
