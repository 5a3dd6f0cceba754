#pragma once

#include <array>
#include <unordered_map>

#include "nonrep/embedding.hpp"
#include "nonrep/layering.hpp"
#include "nonrep/verify.hpp"

namespace nonrep {

// Two-armed boundary walk (u_0..u_k, [u_{k+1}], v_k..v_0) anchored at the
// BFS root, one vertex per layer per arm, closing at its top. Arms agree on a
// prefix and nowhere above it.
struct Lollipop {
    std::vector<int> u_arm;  // u_0..u_k
    std::vector<int> v_arm;  // v_0..v_k
    int top = -1;            // u_{k+1}; -1 for the two-arm form

    int height() const { return static_cast<int>(u_arm.size()) - 1; }
    bool has_top() const { return top >= 0; }

    int shared_prefix() const {
        int i = 0;
        while (i + 1 <= height() && u_arm[i + 1] == v_arm[i + 1]) ++i;
        return i;
    }

    Lollipop reversed() const { return Lollipop{v_arm, u_arm, top}; }

    // C_S: the walk with the shared prefix below shared_prefix() removed.
    std::vector<int> cycle() const {
        int sp = shared_prefix();
        std::vector<int> c(u_arm.begin() + sp, u_arm.end());
        if (has_top()) c.push_back(top);
        for (int i = height(); i > sp; --i) c.push_back(v_arm[i]);
        return c;
    }

    std::vector<int> walk() const {
        std::vector<int> w = u_arm;
        if (has_top()) w.push_back(top);
        for (int i = height(); i >= 0; --i) w.push_back(v_arm[i]);
        return w;
    }

    std::vector<int> vertices() const {
        std::vector<int> vs = u_arm;
        if (has_top()) vs.push_back(top);
        for (int i = shared_prefix() + 1; i <= height(); ++i) vs.push_back(v_arm[i]);
        return vs;
    }
};

struct SideStats {
    static constexpr uint8_t OnWalk = 0, Right = 1, Left = 2;
    std::vector<uint8_t> side;  // per vertex
    int r_B = 0, l_B = 0;       // counts within B
    int r_all = 0, l_all = 0;   // counts within V(G)

    std::vector<int> right_set() const { return collect(Right); }
    std::vector<int> left_set() const { return collect(Left); }

private:
    std::vector<int> collect(uint8_t s) const {
        std::vector<int> out;
        for (int v = 0; v < static_cast<int>(side.size()); ++v)
            if (side[v] == s) out.push_back(v);
        return out;
    }
};

enum class ImproveCase { C1a, C1b, C1c, C1d, C1e, C2a, C2b, C2c };

inline const char* improve_case_name(ImproveCase c) {
    static const char* names[] = {"1(a)", "1(b)", "1(c)", "1(d)", "1(e)", "2(a)", "2(b)", "2(c)"};
    return names[static_cast<int>(c)];
}

struct SeparatorStats {
    long long searches = 0;
    long long steps = 0;
    long long max_steps_single_search = 0;
    std::array<long long, 8> case_fired{};
};

namespace detail {

// Faces of a plane triangulation with directed-edge lookup and dual adjacency.
struct FaceIndex {
    int n = 0;
    std::vector<std::array<int, 3>> corners;                   // traced order
    std::unordered_map<long long, int> left_of;                // (a -> b) to face on its left
    std::unordered_map<long long, int> edge_ids;               // canonical edge to id
    std::vector<std::array<std::pair<int, int>, 3>> face_adj;  // (edge id, face across)

    long long dir_key(int a, int b) const { return static_cast<long long>(a) * n + b; }
    long long edge_key(int a, int b) const { return a < b ? dir_key(a, b) : dir_key(b, a); }

    int left(int a, int b) const {
        auto it = left_of.find(dir_key(a, b));
        require(it != left_of.end(), "face index: unknown directed edge");
        return it->second;
    }
    int right(int a, int b) const { return left(b, a); }
    int edge_id(int a, int b) const { return edge_ids.at(edge_key(a, b)); }

    int third_corner(int face, int a, int b) const {
        for (int v : corners[face])
            if (v != a && v != b) return v;
        throw Error("face index: degenerate face");
    }
};

inline FaceIndex build_face_index(const RotationSystem& rs) {
    FaceIndex idx;
    idx.n = rs.graph.n;
    auto faces = trace_faces(rs);
    for (const auto& f : faces) {
        require(f.size() == 3, "face index: input is not a triangulation");
        int id = static_cast<int>(idx.corners.size());
        idx.corners.push_back({f[0], f[1], f[2]});
        for (int i = 0; i < 3; ++i) idx.left_of[idx.dir_key(f[i], f[(i + 1) % 3])] = id;
    }
    for (const auto& [u, v] : rs.graph.edges())
        idx.edge_ids[idx.edge_key(u, v)] = static_cast<int>(idx.edge_ids.size());
    idx.face_adj.resize(idx.corners.size());
    for (int f = 0; f < static_cast<int>(idx.corners.size()); ++f)
        for (int i = 0; i < 3; ++i) {
            int a = idx.corners[f][i], b = idx.corners[f][(i + 1) % 3];
            idx.face_adj[f][i] = {idx.edge_id(a, b), idx.left(b, a)};
        }
    return idx;
}

}  // namespace detail

// Local search over lollipops on a fixed plane triangulation and BFS layering.
// The objective (r_B, -l(S), r(S)), maximised lexicographically subject to
// r_B <= (2/3)|B|, strictly increases at every improvement step.
class LollipopSearch {
public:
    LollipopSearch(const RotationSystem& rs, const Layering& lay, SeparatorStats* stats = nullptr)
        : rs_(rs), lay_(lay), stats_(stats), idx_(detail::build_face_index(rs)) {
        edge_stamp_.assign(idx_.edge_ids.size(), 0);
        face_stamp_.assign(idx_.corners.size(), 0);
        face_side_.assign(idx_.corners.size(), 0);
        vert_stamp_.assign(rs.graph.n, 0);
        walk_stamp_.assign(rs.graph.n, 0);
    }

    const RotationSystem& embedding() const { return rs_; }
    const Layering& layering() const { return lay_; }

    Lollipop initial() const {
        const Graph& g = rs_.graph;
        int r = lay_.root;
        require(!g.adj[r].empty(), "initial_lollipop: isolated root");
        int u1 = *std::min_element(g.adj[r].begin(), g.adj[r].end());
        int v1 = detail::rot_successor(rs_, r, u1);
        require(u1 != v1, "initial_lollipop: root of degree one");
        return Lollipop{{r, u1}, {r, v1}, -1};
    }

    // Side counts, recomputed from scratch for the given lollipop. The two
    // sides of C_S are flooded in lockstep and the scan stops when the
    // smaller one is complete; the other side's counts follow by complement.
    // Stamp arrays keep per-vertex side lookups valid until the next call.
    struct Counts {
        int r_B = 0, l_B = 0, r_all = 0, l_all = 0;
        int walk_size = 0, b_on_walk = 0;
    };

    Counts classify_counts(const Lollipop& s, const std::vector<char>& in_b, int b_size) const {
        auto cyc = s.cycle();
        int L = static_cast<int>(cyc.size());
        ++epoch_;
        for (int i = 0; i < L; ++i)
            edge_stamp_[idx_.edge_id(cyc[i], cyc[(i + 1) % L])] = epoch_;
        right_stack_.clear();
        left_stack_.clear();
        right_faces_.clear();
        left_faces_.clear();
        auto seed = [&](int f, uint8_t side) {
            if (face_stamp_[f] == epoch_) {
                require(face_side_[f] == side, "classify_sides: C_S is not a simple cycle");
                return;
            }
            face_stamp_[f] = epoch_;
            face_side_[f] = side;
            (side == SideStats::Right ? right_stack_ : left_stack_).push_back(f);
            (side == SideStats::Right ? right_faces_ : left_faces_).push_back(f);
        };
        for (int i = 0; i < L; ++i) {
            int a = cyc[i], b = cyc[(i + 1) % L];
            seed(idx_.right(a, b), SideStats::Right);
            seed(idx_.left(a, b), SideStats::Left);
        }
        auto expand = [&](std::vector<int>& stack, std::vector<int>& found) {
            int f = stack.back();
            stack.pop_back();
            for (auto [eid, other] : idx_.face_adj[f]) {
                if (edge_stamp_[eid] == epoch_) continue;
                if (face_stamp_[other] == epoch_) {
                    require(face_side_[other] == face_side_[f],
                            "classify_sides: side flood collision");
                    continue;
                }
                face_stamp_[other] = epoch_;
                face_side_[other] = face_side_[f];
                stack.push_back(other);
                found.push_back(other);
            }
        };
        while (!right_stack_.empty() && !left_stack_.empty()) {
            expand(right_stack_, right_faces_);
            expand(left_stack_, left_faces_);
        }
        bool right_done = right_stack_.empty();
        completed_ = right_done ? SideStats::Right : SideStats::Left;

        Counts c;
        auto walk = s.vertices();
        c.walk_size = static_cast<int>(walk.size());
        for (int v : walk) {
            walk_stamp_[v] = epoch_;
            if (in_b[v]) ++c.b_on_walk;
        }
        int done_all = 0, done_b = 0;
        for (int f : (right_done ? right_faces_ : left_faces_))
            for (int v : idx_.corners[f]) {
                if (vert_stamp_[v] == epoch_ || walk_stamp_[v] == epoch_) continue;
                vert_stamp_[v] = epoch_;
                ++done_all;
                if (in_b[v]) ++done_b;
            }
        int other_all = rs_.graph.n - done_all - c.walk_size;
        int other_b = b_size - done_b - c.b_on_walk;
        if (right_done) {
            c.r_all = done_all;
            c.r_B = done_b;
            c.l_all = other_all;
            c.l_B = other_b;
        } else {
            c.l_all = done_all;
            c.l_B = done_b;
            c.r_all = other_all;
            c.r_B = other_b;
        }
        return c;
    }

    // Valid until the next classify_counts call.
    uint8_t side_of(int v) const {
        if (walk_stamp_[v] == epoch_) return SideStats::OnWalk;
        bool in_done = vert_stamp_[v] == epoch_;
        if (completed_ == SideStats::Right)
            return in_done ? SideStats::Right : SideStats::Left;
        return in_done ? SideStats::Left : SideStats::Right;
    }

    SideStats classify(const Lollipop& s, const std::vector<char>& in_b) const {
        Counts c = classify_counts(s, in_b, mask_size(in_b));
        SideStats st;
        st.r_B = c.r_B;
        st.l_B = c.l_B;
        st.r_all = c.r_all;
        st.l_all = c.l_all;
        st.side.resize(rs_.graph.n);
        for (int v = 0; v < rs_.graph.n; ++v) st.side[v] = side_of(v);
        return st;
    }

    struct Step {
        Lollipop lollipop;
        Counts counts;
        ImproveCase fired;
    };

    // One improvement move; strictly increases the objective. Requires the
    // current lollipop unbalanced for B (l_B > (2/3)|B|) and feasible, with
    // side stamps current for s (classify_counts(s) was the last classify).
    Step improve(const Lollipop& s, const Counts& st, const std::vector<char>& in_b,
                 int b_size) const {
        require(3 * st.l_B > 2 * b_size, "improve_step: already balanced");
        require(3 * st.r_B <= 2 * b_size, "improve_step: infeasible input lollipop");
        int k = s.height();
        const auto& lay = lay_.layer;

        Lollipop c1, c2;
        bool two_candidates = false;
        ImproveCase fired;
        if (!s.has_top()) {
            int uk = s.u_arm[k], vk = s.v_arm[k];
            int f = idx_.left(uk, vk);  // the face (u_k, w, v_k) in clockwise order
            int w = idx_.third_corner(f, uk, vk);
            if (lay[w] == k + 1) {
                fired = ImproveCase::C1a;
                expect_left(w);
                c1 = Lollipop{s.u_arm, s.v_arm, w};
            } else if (w == s.u_arm[k - 1]) {
                fired = ImproveCase::C1b;
                require(s.u_arm[k - 1] != s.v_arm[k - 1], "improve_step: degenerate case 1(b)");
                c1 = Lollipop{chop(s.u_arm), chop(s.v_arm), vk};
            } else if (w == s.v_arm[k - 1]) {
                fired = ImproveCase::C1c;
                require(s.u_arm[k - 1] != s.v_arm[k - 1], "improve_step: degenerate case 1(c)");
                c1 = Lollipop{chop(s.u_arm), chop(s.v_arm), uk};
            } else if (lay[w] == k - 1) {
                fired = ImproveCase::C1d;
                expect_left(w);
                auto z = monotone_path(rs_.graph, lay_, w, ArmPair{s.u_arm, s.v_arm});
                c1 = Lollipop{chop(s.u_arm), z, uk};
                c2 = Lollipop{z, chop(s.v_arm), vk};
                two_candidates = true;
            } else if (lay[w] == k) {
                fired = ImproveCase::C1e;
                expect_left(w);
                auto z = monotone_path(rs_.graph, lay_, w, ArmPair{s.u_arm, s.v_arm});
                c1 = Lollipop{s.u_arm, z, -1};
                c2 = Lollipop{z, s.v_arm, -1};
                two_candidates = true;
            } else {
                throw Error("improve_step: no case applies (type 1), w layer " +
                            std::to_string(lay[w]));
            }
        } else {
            int uk = s.u_arm[k];
            int f = idx_.left(uk, s.top);  // the face (u_k, w, u_{k+1}) in clockwise order
            int w = idx_.third_corner(f, uk, s.top);
            if (lay[w] == k + 1) {
                fired = ImproveCase::C2a;
                expect_left(w);
                c1 = Lollipop{append(s.u_arm, w), append(s.v_arm, s.top), -1};
            } else if (w == s.v_arm[k]) {
                fired = ImproveCase::C2b;
                c1 = Lollipop{s.u_arm, s.v_arm, -1};
            } else if (lay[w] == k) {
                fired = ImproveCase::C2c;
                expect_left(w);
                auto z = monotone_path(rs_.graph, lay_, w, ArmPair{s.u_arm, s.v_arm});
                c1 = Lollipop{s.u_arm, z, -1};
                c2 = Lollipop{z, s.v_arm, s.top};
                two_candidates = true;
            } else {
                throw Error("improve_step: no case applies (type 2), w layer " +
                            std::to_string(lay[w]));
            }
        }

        validate(c1);
        Counts n1 = classify_counts(c1, in_b, b_size);
        Step chosen{std::move(c1), n1, fired};
        if (two_candidates) {
            validate(c2);
            Counts n2 = classify_counts(c2, in_b, b_size);
            bool ok1 = 3 * chosen.counts.r_B <= 2 * b_size;
            bool ok2 = 3 * n2.r_B <= 2 * b_size;
            require(ok1 || ok2, "improve_step: both split candidates infeasible");
            if (!ok1 || (ok2 && objective(n2) > objective(chosen.counts))) {
                chosen.lollipop = std::move(c2);
                chosen.counts = n2;
            } else {
                classify_counts(chosen.lollipop, in_b, b_size);  // refresh side stamps
            }
        }
        require(3 * chosen.counts.r_B <= 2 * b_size, "improve_step: result violates (1)");
        if (!(objective(chosen.counts) > objective(st)))
            throw Error("improve_step: objective did not strictly increase (case " +
                        std::string(improve_case_name(fired)) + ")");
        if (fired == ImproveCase::C1a || fired == ImproveCase::C2a)
            require(chosen.counts.r_B == st.r_B && chosen.counts.l_all == st.l_all - 1 &&
                        chosen.counts.r_all == st.r_all,
                    "improve_step: case (a) side accounting is off");
        if (fired == ImproveCase::C1b || fired == ImproveCase::C1c || fired == ImproveCase::C2b)
            require(chosen.counts.r_all == st.r_all + 1 && chosen.counts.l_all == st.l_all,
                    "improve_step: case (b)/(c) side accounting is off");
        if (stats_) ++stats_->case_fired[static_cast<int>(fired)];
        return chosen;
    }

    struct SearchResult {
        Lollipop lollipop;
        Counts counts;
        long long iterations = 0;
    };

    SearchResult find_balanced(const std::vector<char>& in_b, int b_size) const {
        require(b_size >= 3, "find_balanced_lollipop: need |B| >= 3");
        long long n1 = rs_.graph.n + 1;
        long long cap = n1 * n1 * n1;
        SearchResult r;
        r.lollipop = initial();
        r.counts = classify_counts(r.lollipop, in_b, b_size);
        require(r.counts.r_all == 0, "find_balanced_lollipop: initial right side not empty");
        while (3 * r.counts.l_B > 2 * b_size) {
            if (++r.iterations > cap) throw Error("find_balanced_lollipop: iteration cap exceeded");
            Step step = improve(r.lollipop, r.counts, in_b, b_size);
            r.lollipop = std::move(step.lollipop);
            r.counts = step.counts;
        }
        if (stats_) {
            ++stats_->searches;
            stats_->steps += r.iterations;
            stats_->max_steps_single_search =
                std::max(stats_->max_steps_single_search, r.iterations);
        }
        return r;
    }

    static int mask_size(const std::vector<char>& in_b) {
        int c = 0;
        for (char x : in_b) c += x ? 1 : 0;
        return c;
    }

    // G1 = S and everything right of it, G2 = S and everything left of it.
    Separation separation(const Lollipop& s, const std::vector<char>& in_b) const {
        classify_counts(s, in_b, mask_size(in_b));
        Separation sep;
        for (int v = 0; v < rs_.graph.n; ++v) {
            uint8_t side = side_of(v);
            if (side != SideStats::Right) sep.left_part.push_back(v);
            if (side != SideStats::Left) sep.right_part.push_back(v);
        }
        std::vector<int> per_layer(lay_.p + 2, 0);
        for (int v : s.vertices())
            require(++per_layer[lay_.layer[v]] <= 2, "to_separation: >2 boundary in one layer");
        auto rep = verify_separation(rs_.graph, sep);
        require(rep.ok, "to_separation: " + rep.violation);
        return sep;
    }

    void validate(const Lollipop& s) const {
        const Graph& g = rs_.graph;
        int k = s.height();
        require(k >= 1, "lollipop: height >= 1");
        require(static_cast<int>(s.v_arm.size()) == k + 1, "lollipop: arm length mismatch");
        require(s.u_arm[0] == lay_.root && s.v_arm[0] == lay_.root, "lollipop: arms not rooted");
        require(s.u_arm[k] != s.v_arm[k], "lollipop: arms meet at the top");
        for (int i = 0; i <= k; ++i) {
            require(lay_.layer[s.u_arm[i]] == i && lay_.layer[s.v_arm[i]] == i,
                    "lollipop: arm vertex in wrong layer");
            if (i > 0) {
                require(g.has_edge(s.u_arm[i - 1], s.u_arm[i]), "lollipop: u-arm not a path");
                require(g.has_edge(s.v_arm[i - 1], s.v_arm[i]), "lollipop: v-arm not a path");
            }
        }
        int sp = s.shared_prefix();
        for (int i = 0; i <= k; ++i)
            require((s.u_arm[i] == s.v_arm[i]) == (i <= sp), "lollipop: broken shared prefix");
        if (s.has_top()) {
            require(lay_.layer[s.top] == k + 1, "lollipop: top in wrong layer");
            require(g.has_edge(s.u_arm[k], s.top) && g.has_edge(s.top, s.v_arm[k]),
                    "lollipop: top not adjacent to both arms");
        } else {
            require(g.has_edge(s.u_arm[k], s.v_arm[k]), "lollipop: arm tops not adjacent");
        }
    }

    static std::tuple<int, int, int> objective(const Counts& c) {
        return {c.r_B, -c.l_all, c.r_all};
    }

private:
    static std::vector<int> chop(const std::vector<int>& arm) {
        return std::vector<int>(arm.begin(), arm.end() - 1);
    }
    static std::vector<int> append(std::vector<int> arm, int v) {
        arm.push_back(v);
        return arm;
    }
    void expect_left(int w) const {
        require(side_of(w) == SideStats::Left, "improve_step: face apex not on the left side");
    }

    const RotationSystem& rs_;
    const Layering& lay_;
    SeparatorStats* stats_;
    detail::FaceIndex idx_;
    mutable std::vector<int> edge_stamp_, face_stamp_, vert_stamp_, walk_stamp_;
    mutable std::vector<int> right_stack_, left_stack_, right_faces_, left_faces_;
    mutable std::vector<uint8_t> face_side_;
    mutable uint8_t completed_ = SideStats::Right;
    mutable int epoch_ = 0;
};

inline std::vector<char> vertex_mask(int n, const std::vector<int>& set) {
    std::vector<char> mask(n, 0);
    for (int v : set) {
        require(v >= 0 && v < n, "vertex set: id out of range");
        mask[v] = 1;
    }
    return mask;
}

inline Lollipop initial_lollipop(const RotationSystem& t, const Layering& lay) {
    return LollipopSearch(t, lay).initial();
}

inline SideStats classify_sides(const RotationSystem& t, const Layering& lay, const Lollipop& s,
                                const std::vector<int>& b) {
    return LollipopSearch(t, lay).classify(s, vertex_mask(t.graph.n, b));
}

inline Lollipop improve_step(const RotationSystem& t, const Layering& lay, const Lollipop& s,
                             const std::vector<int>& b) {
    LollipopSearch search(t, lay);
    auto mask = vertex_mask(t.graph.n, b);
    auto counts = search.classify_counts(s, mask, static_cast<int>(b.size()));
    return search.improve(s, counts, mask, static_cast<int>(b.size())).lollipop;
}

inline Lollipop find_balanced_lollipop(const RotationSystem& t, const Layering& lay,
                                       const std::vector<int>& b) {
    LollipopSearch search(t, lay);
    return search.find_balanced(vertex_mask(t.graph.n, b), static_cast<int>(b.size())).lollipop;
}

inline Separation to_separation(const RotationSystem& t, const Layering& lay, const Lollipop& s,
                                const std::vector<int>& b) {
    LollipopSearch search(t, lay);
    auto mask = vertex_mask(t.graph.n, b);
    auto counts = search.classify_counts(s, mask, static_cast<int>(b.size()));
    require(3 * counts.r_B <= 2 * static_cast<int>(b.size()) &&
                3 * counts.l_B <= 2 * static_cast<int>(b.size()),
            "to_separation: lollipop not balanced for B");
    return search.separation(s, mask);
}

}  // namespace nonrep
