#pragma once

#include <optional>

#include "nonrep/graph.hpp"

namespace nonrep {

// Plane embedding as a rotation system: clockwise neighbour order per vertex
// plus a designated outer face. Convention fixed project-wide: the face traced
// from a directed edge (a -> b) by next(a -> b) = (b, successor of a in the
// rotation of b) lies to the LEFT of (a -> b), and the outer face's traced
// listing is its clockwise listing.
struct RotationSystem {
    Graph graph;
    std::vector<std::vector<int>> rotation;
    std::vector<int> outer_face;  // clockwise vertex cycle; empty iff no edges
};

using FaceWalk = std::vector<int>;  // vertex walk; directed edges are consecutive pairs, cyclic

namespace detail {

inline int rot_index(const RotationSystem& rs, int v, int w) {
    const auto& r = rs.rotation[v];
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i] == w) return i;
    return -1;
}

// Successor of w in the clockwise rotation of v.
inline int rot_successor(const RotationSystem& rs, int v, int w) {
    int i = rot_index(rs, v, w);
    if (i == -1)
        throw Error("inconsistent rotation at directed edge (" + std::to_string(w) + " -> " +
                    std::to_string(v) + ")");
    const auto& r = rs.rotation[v];
    return r[(i + 1) % r.size()];
}

// Walk of the face to the left of (a -> b), starting with vertex a.
inline FaceWalk trace_from(const RotationSystem& rs, int a, int b) {
    FaceWalk walk;
    int x = a, y = b;
    do {
        walk.push_back(x);
        int z = rot_successor(rs, y, x);
        x = y;
        y = z;
    } while (!(x == a && y == b));
    return walk;
}

inline void insert_after(std::vector<int>& rot, int after, int x) {
    for (auto it = rot.begin(); it != rot.end(); ++it)
        if (*it == after) {
            rot.insert(it + 1, x);
            return;
        }
    throw Error("insert_after: anchor neighbour not found");
}

}  // namespace detail

// Every directed edge belongs to exactly one traced face.
inline std::vector<FaceWalk> trace_faces(const RotationSystem& rs) {
    const Graph& g = rs.graph;
    require(static_cast<int>(rs.rotation.size()) == g.n, "trace_faces: rotation size mismatch");
    std::vector<std::vector<char>> seen(g.n);
    for (int v = 0; v < g.n; ++v) seen[v].assign(rs.rotation[v].size(), 0);
    std::vector<FaceWalk> faces;
    for (int a = 0; a < g.n; ++a)
        for (int i = 0; i < static_cast<int>(rs.rotation[a].size()); ++i) {
            if (seen[a][i]) continue;
            int b = rs.rotation[a][i];
            FaceWalk walk;
            int x = a, y = b;
            do {
                int yi = detail::rot_index(rs, x, y);
                if (yi == -1)
                    throw Error("inconsistent rotation at directed edge (" + std::to_string(x) +
                                " -> " + std::to_string(y) + ")");
                if (seen[x][yi]) throw Error("trace_faces: directed edge visited twice");
                seen[x][yi] = 1;
                walk.push_back(x);
                int z = detail::rot_successor(rs, y, x);
                x = y;
                y = z;
            } while (!(x == a && y == b));
            faces.push_back(std::move(walk));
        }
    return faces;
}

struct EmbeddingReport {
    bool ok = true;
    std::string violation;
};

inline EmbeddingReport check_embedding(const RotationSystem& rs) {
    const Graph& g = rs.graph;
    auto fail = [](std::string msg) { return EmbeddingReport{false, std::move(msg)}; };
    if (static_cast<int>(rs.rotation.size()) != g.n)
        return fail("rotation/adjacency mismatch: rotation table has wrong size");
    for (int v = 0; v < g.n; ++v) {
        auto a = g.adj[v], r = rs.rotation[v];
        std::sort(a.begin(), a.end());
        std::sort(r.begin(), r.end());
        if (a != r)
            return fail("rotation/adjacency mismatch at vertex " + std::to_string(v));
    }
    std::vector<FaceWalk> faces;
    try {
        faces = trace_faces(rs);
    } catch (const Error& e) {
        return fail(e.what());
    }
    // Euler per component (components with no edges sit inside some face).
    std::vector<int> comp(g.n, -1);
    int comps = 0;
    for (int v = 0; v < g.n; ++v)
        if (comp[v] == -1) {
            for (int w : component_of(g, v)) comp[w] = comps;
            ++comps;
        }
    std::vector<long long> nc(comps, 0), mc(comps, 0), fc(comps, 0);
    for (int v = 0; v < g.n; ++v) {
        nc[comp[v]] += 1;
        mc[comp[v]] += g.adj[v].size();
    }
    for (const auto& f : faces) fc[comp[f[0]]] += 1;
    for (int c = 0; c < comps; ++c) {
        if (mc[c] == 0) continue;
        if (nc[c] - mc[c] / 2 + fc[c] != 2)
            return fail("not planar embedding: Euler relation fails (n=" + std::to_string(nc[c]) +
                        " m=" + std::to_string(mc[c] / 2) + " f=" + std::to_string(fc[c]) + ")");
    }
    // Outer face must be one of the traced faces, listed edge-for-edge.
    if (g.edge_count() == 0) {
        if (!rs.outer_face.empty()) return fail("outer face nonempty in edgeless graph");
        return {};
    }
    if (rs.outer_face.size() < 2) return fail("outer face too short");
    try {
        FaceWalk traced = detail::trace_from(rs, rs.outer_face[0], rs.outer_face[1]);
        if (traced != rs.outer_face) return fail("outer face is not a traced face");
    } catch (const Error& e) {
        return fail(e.what());
    }
    return {};
}

namespace detail {

// after[i] holds the in-neighbour of walk[i] along the face walk.
inline int walk_prev(const FaceWalk& w, int i) {
    return w[(i + static_cast<int>(w.size()) - 1) % w.size()];
}

// Insert chord walk[i] -- walk[j] inside the face, splitting it in two.
// Returns {walk[i..j] , walk[j..i]} (both closed by the chord).
inline std::pair<FaceWalk, FaceWalk> apply_chord(RotationSystem& rs, const FaceWalk& w, int i,
                                                 int j) {
    int a = w[i], b = w[j];
    insert_after(rs.rotation[a], walk_prev(w, i), b);
    insert_after(rs.rotation[b], walk_prev(w, j), a);
    rs.graph.add_edge(a, b);
    FaceWalk f1(w.begin() + i, w.begin() + j + 1);
    FaceWalk f2(w.begin() + j, w.end());
    f2.insert(f2.end(), w.begin(), w.begin() + i + 1);
    return {std::move(f1), std::move(f2)};
}

inline bool chord_ok(const Graph& g, int a, int b) { return a != b && !g.has_edge(a, b); }

// Fan from the pivot at position pos: chords pivot -- w[pos+2..pos+L-2].
inline bool fan_valid(const Graph& g, const FaceWalk& w, int pos) {
    int L = static_cast<int>(w.size());
    int p = w[pos];
    std::vector<int> targets;
    for (int d = 2; d <= L - 2; ++d) {
        int t = w[(pos + d) % L];
        if (!chord_ok(g, p, t)) return false;
        targets.push_back(t);
    }
    std::sort(targets.begin(), targets.end());
    return std::adjacent_find(targets.begin(), targets.end()) == targets.end();
}

inline void apply_fan(RotationSystem& rs, FaceWalk w, int pos) {
    std::rotate(w.begin(), w.begin() + pos, w.end());  // pivot to front
    while (w.size() > 3) {
        auto [tri, rest] = apply_chord(rs, w, 0, 2);
        std::rotate(rest.begin(), rest.end() - 1, rest.end());  // pivot back to front
        w = std::move(rest);
    }
}

// Ear positions for a zig-zag triangulation, alternating walk ends.
inline std::optional<std::vector<std::pair<int, int>>> zigzag_chords(const Graph& g,
                                                                     const FaceWalk& w0) {
    FaceWalk w = w0;
    std::vector<std::pair<int, int>> chords;
    bool front = true;
    while (w.size() > 3) {
        int L = static_cast<int>(w.size());
        int c = front ? 1 : L - 2;  // vertex cut off by the ear
        int a = w[(c - 1 + L) % L], b = w[(c + 1) % L];
        if (!chord_ok(g, a, b)) return std::nullopt;
        for (auto& [x, y] : chords)
            if ((x == a && y == b) || (x == b && y == a)) return std::nullopt;
        chords.emplace_back(a, b);
        w.erase(w.begin() + c);
        front = !front;
    }
    return chords;
}

inline void apply_zigzag(RotationSystem& rs, FaceWalk w) {
    bool front = true;
    while (w.size() > 3) {
        int c = front ? 1 : static_cast<int>(w.size()) - 2;
        apply_chord(rs, w, c - 1, c + 1);
        w.erase(w.begin() + c);  // remaining face, same cyclic walk as the split's rest
        front = !front;
    }
}

// Connect components by bridges placed inside the outer face. Returns the
// directed representative edge of the outer face.
inline std::pair<int, int> connect_components(RotationSystem& rs) {
    Graph& g = rs.graph;
    if (g.edge_count() == 0) {  // build a star inside the (empty) outer region
        for (int v = 1; v < g.n; ++v) {
            rs.rotation[0].push_back(v);
            rs.rotation[v] = {0};
            g.add_edge(0, v);
        }
        return {0, 1};
    }
    std::pair<int, int> rep{rs.outer_face[0], rs.outer_face[1]};
    FaceWalk outer = rs.outer_face;
    while (true) {
        std::vector<char> reached(g.n, 0);
        for (int v : component_of(g, outer[0])) reached[v] = 1;
        int x = -1;
        for (int v = 0; v < g.n && x == -1; ++v)
            if (!reached[v]) x = v;
        if (x == -1) break;
        int y = *std::min_element(outer.begin(), outer.end());
        int iy = static_cast<int>(std::find(outer.begin(), outer.end(), y) - outer.begin());
        int a = walk_prev(outer, iy);
        insert_after(rs.rotation[y], a, x);
        if (rs.rotation[x].empty())
            rs.rotation[x] = {y};
        else
            insert_after(rs.rotation[x], *std::min_element(rs.rotation[x].begin(), rs.rotation[x].end()), y);
        g.add_edge(x, y);
        rep = {a, y};
        outer = trace_from(rs, a, y);
    }
    return rep;
}

}  // namespace detail

// Completes the embedded graph to a plane triangulation (every face a
// triangle, outer included). Input must be a valid embedding with n >= 3;
// disconnected inputs are first connected by bridges inside the outer face.
// Only edges are added, so the input is a spanning subgraph of the output.
inline RotationSystem triangulate(const RotationSystem& rs_in) {
    require(rs_in.graph.n >= 3, "triangulate: need n >= 3");
    if (auto rep = check_embedding(rs_in); !rep.ok)
        throw Error("triangulate: invalid embedding: " + rep.violation);
    RotationSystem rs = rs_in;
    auto rep_edge = detail::connect_components(rs);

    std::vector<FaceWalk> stack = trace_faces(rs);
    while (!stack.empty()) {
        FaceWalk w = std::move(stack.back());
        stack.pop_back();
        if (w.size() <= 3) continue;
        int L = static_cast<int>(w.size());
        int fan_pos = -1;
        for (int pos = 0; pos < L && fan_pos == -1; ++pos)
            if (detail::fan_valid(rs.graph, w, pos)) fan_pos = pos;
        if (fan_pos != -1) {
            detail::apply_fan(rs, std::move(w), fan_pos);
            continue;
        }
        if (detail::zigzag_chords(rs.graph, w)) {
            detail::apply_zigzag(rs, std::move(w));
            continue;
        }
        // Fan and zig-zag blocked (repeated vertices or existing chords):
        // split along the first admissible chord and retry the halves.
        bool split = false;
        for (int i = 0; i < L && !split; ++i)
            for (int d = 2; d <= L - 2 && !split; ++d) {
                int j = (i + d) % L;
                if (j < i) continue;
                if (!detail::chord_ok(rs.graph, w[i], w[j])) continue;
                auto [f1, f2] = detail::apply_chord(rs, w, i, j);
                stack.push_back(std::move(f1));
                stack.push_back(std::move(f2));
                split = true;
            }
        if (!split) throw Error("triangulate: face admits no chord");
    }

    rs.outer_face = detail::trace_from(rs, rep_edge.first, rep_edge.second);
    for (const auto& f : trace_faces(rs))
        require(f.size() == 3, "triangulate: non-triangular face survived");
    require(rs.graph.edge_count() == 3 * rs.graph.n - 6, "triangulate: edge count != 3n-6");
    return rs;
}

// Any neighbour order embeds a tree; the single face is the outer face.
inline RotationSystem embed_tree(const Graph& tree) {
    require(is_tree(tree), "embed_tree: input is not a tree");
    RotationSystem rs;
    rs.graph = tree;
    rs.rotation.resize(tree.n);
    for (int v = 0; v < tree.n; ++v) {
        rs.rotation[v] = tree.adj[v];
        std::sort(rs.rotation[v].begin(), rs.rotation[v].end());
    }
    if (tree.edge_count() > 0) rs.outer_face = detail::trace_from(rs, 0, rs.rotation[0][0]);
    return rs;
}

}  // namespace nonrep
