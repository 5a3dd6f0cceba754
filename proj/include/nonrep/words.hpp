#pragma once

#include <optional>

#include "nonrep/graph.hpp"

namespace nonrep {

struct Sequence {
    std::vector<int> symbols;
    int sigma = 0;

    int length() const { return static_cast<int>(symbols.size()); }
};

// Certifies: every lazy walk (steps in {-1,0,+1}) of length 2t with t <= t_max
// whose halves carry equal symbols has identical index halves.
struct WalkCertificate {
    Sequence sequence;
    int t_max = 0;
};

// Prefix of the fixed point of 0 -> 012, 1 -> 02, 2 -> 1 (squarefree, ternary).
inline Sequence thue_word(int n) {
    require(n >= 0, "thue_word: negative length");
    std::vector<int> w{0};
    while (static_cast<int>(w.size()) < n) {
        std::vector<int> next;
        next.reserve(3 * w.size());
        for (int c : w) {
            if (c == 0) next.insert(next.end(), {0, 1, 2});
            else if (c == 1) next.insert(next.end(), {0, 2});
            else next.push_back(1);
        }
        w = std::move(next);
        if (w.size() > 4 * static_cast<size_t>(std::max(n, 1))) break;
    }
    w.resize(n);
    return {std::move(w), 3};
}

struct SquareWitness {
    int start = 0;
    int half = 0;  // s[start .. start+half) == s[start+half .. start+2*half)
};

inline std::optional<SquareWitness> find_square(const Sequence& s) {
    int n = s.length();
    for (int i = 0; i < n; ++i)
        for (int t = 1; i + 2 * t <= n; ++t) {
            bool eq = true;
            for (int j = 0; j < t && eq; ++j) eq = s.symbols[i + j] == s.symbols[i + t + j];
            if (eq) return SquareWitness{i, t};
        }
    return std::nullopt;
}

inline bool is_squarefree(const Sequence& s) { return !find_square(s).has_value(); }

namespace detail {

// Product-walk search. A repetitive lazy walk (i_1..i_2t) corresponds to a
// sequence of symbol-matched index pairs (i_r, i_{t+r}) with componentwise
// lazy steps, |i_{t+1} - i_t| <= 1, and some pair off-diagonal.
struct WalkSearch {
    const std::vector<int>& f;
    int n, t_max;
    std::vector<int> as, bs;
    std::optional<std::vector<int>> witness;

    WalkSearch(const Sequence& s, int t_max_)
        : f(s.symbols), n(s.length()), t_max(t_max_) {}

    bool matched(int a, int b) const { return f[a] == f[b]; }

    void found() {
        std::vector<int> walk = as;
        walk.insert(walk.end(), bs.begin(), bs.end());
        witness = std::move(walk);
    }

    bool dfs(int a, int b, bool offdiag) {
        as.push_back(a);
        bs.push_back(b);
        offdiag = offdiag || a != b;
        // coupling: the second half starts within one step of the first's end
        if (offdiag && std::abs(bs.front() - a) <= 1) {
            found();
            return true;
        }
        if (static_cast<int>(as.size()) < t_max) {
            static constexpr int step[9][2] = {{1, 1},  {1, 0},  {1, -1}, {0, 1}, {0, 0},
                                               {0, -1}, {-1, 1}, {-1, 0}, {-1, -1}};
            for (auto [da, db] : step) {
                int a2 = a + da, b2 = b + db;
                if (a2 < 0 || a2 >= n || b2 < 0 || b2 >= n || !matched(a2, b2)) continue;
                if (dfs(a2, b2, offdiag)) return true;
            }
        }
        as.pop_back();
        bs.pop_back();
        return false;
    }
};

}  // namespace detail

// Exhaustive over all lazy walks of length 2t, t <= t_max. Returns the first
// witness walk in a fixed deterministic order, or nullopt when none exists.
inline std::optional<std::vector<int>> find_repetitive_walk(const Sequence& s, int t_max) {
    require(t_max >= 1, "is_walk_nonrepetitive: t_max >= 1");
    detail::WalkSearch search(s, t_max);
    for (int a = 0; a < s.length(); ++a)
        for (int b = 0; b < s.length(); ++b) {
            if (!search.matched(a, b)) continue;
            if (search.dfs(a, b, false)) return search.witness;
        }
    return std::nullopt;
}

inline bool is_walk_nonrepetitive(const Sequence& s, int t_max) {
    return !find_repetitive_walk(s, t_max).has_value();
}

namespace detail {

// Unbounded-t violation test via connected components of the pair graph:
// a violating walk of some half-length exists iff a component of the
// symbol-matched pair graph contains an off-diagonal pair and two pairs
// (a1,b1), (at,bt) with |b1 - at| <= 1. When checking an extension whose
// prefix already passed, only components touching the new index can violate
// (edges between old pairs are unchanged), so the scan is seeded there.
struct StrongChecker {
    std::vector<int> visited;         // pair id -> call id
    std::vector<int> mark_a, mark_b;  // index -> component tag
    std::vector<int> queue, comp_a, comp_b;
    int call = 0, tag = 0;

    bool component_violates(const std::vector<int>& f, int len, int seed_a, int seed_b) {
        int root = seed_a * len + seed_b;
        if (f[seed_a] != f[seed_b] || visited[root] == call) return false;
        ++tag;
        queue.clear();
        comp_a.clear();
        comp_b.clear();
        bool offdiag = false;
        visited[root] = call;
        queue.push_back(root);
        while (!queue.empty()) {
            int id = queue.back();
            queue.pop_back();
            int a = id / len, b = id % len;
            offdiag = offdiag || a != b;
            comp_a.push_back(a);
            comp_b.push_back(b);
            for (int da = -1; da <= 1; ++da)
                for (int db = -1; db <= 1; ++db) {
                    if (da == 0 && db == 0) continue;
                    int a2 = a + da, b2 = b + db;
                    if (a2 < 0 || a2 >= len || b2 < 0 || b2 >= len) continue;
                    int id2 = a2 * len + b2;
                    if (f[a2] != f[b2] || visited[id2] == call) continue;
                    visited[id2] = call;
                    queue.push_back(id2);
                }
        }
        if (!offdiag) return false;
        for (int a : comp_a) mark_a[a] = tag;
        for (int b : comp_b) mark_b[b] = tag;
        for (int b = 0; b < len; ++b) {
            if (mark_b[b] != tag) continue;
            for (int a = std::max(0, b - 1); a <= std::min(len - 1, b + 1); ++a)
                if (mark_a[a] == tag) return true;
        }
        return false;
    }

    // full = true scans every component; otherwise only those meeting index len-1
    bool has_violation(const std::vector<int>& f, int len, bool full) {
        if (visited.size() < static_cast<size_t>(len) * len)
            visited.resize(static_cast<size_t>(len) * len, -1);
        if (mark_a.size() < static_cast<size_t>(len)) {
            mark_a.resize(len, -1);
            mark_b.resize(len, -1);
        }
        ++call;
        if (full) {
            for (int a = 0; a < len; ++a)
                for (int b = 0; b < len; ++b)
                    if (component_violates(f, len, a, b)) return true;
            return false;
        }
        int q = len - 1;
        for (int v = 0; v < len; ++v)
            if (component_violates(f, len, v, q) || component_violates(f, len, q, v)) return true;
        return false;
    }
};

inline std::optional<std::vector<int>> backtrack_walk_sequence(int n, int sigma,
                                                               long long node_budget) {
    std::vector<int> s;
    s.reserve(n);
    StrongChecker checker;
    std::vector<int> tried;  // next symbol to try at each position
    tried.push_back(0);
    long long nodes = 0;
    while (true) {
        int pos = static_cast<int>(s.size());
        if (pos == n) return s;
        bool advanced = false;
        for (int c = tried.back(); c < sigma; ++c) {
            if (++nodes > node_budget) return std::nullopt;
            if (pos > 0 && s.back() == c) continue;
            s.push_back(c);
            bool ok = true;
            // small squares ending here reject most candidates cheaply
            for (int t = 1; ok && t <= 8 && 2 * t <= pos + 1; ++t) {
                bool eq = true;
                for (int j = 0; j < t && eq; ++j)
                    eq = s[pos - 2 * t + 1 + j] == s[pos - t + 1 + j];
                ok = !eq;
            }
            if (ok) ok = !checker.has_violation(s, pos + 1, false);
            if (ok) {
                tried.back() = c + 1;
                tried.push_back(0);
                advanced = true;
                break;
            }
            s.pop_back();
        }
        if (advanced) continue;
        tried.pop_back();
        if (tried.empty()) return std::nullopt;  // space exhausted
        s.pop_back();
    }
}

}  // namespace detail

// Deterministic backtracking generator. The in-search check is the unbounded
// component test, so the returned sequence passes is_walk_nonrepetitive for
// every t_max, in particular the requested one. Falls back to sigma+1 and
// sigma+2 before giving up.
inline WalkCertificate generate_walk_certified(int n, int sigma, int t_max) {
    require(n >= 1, "generate_walk_certified: n >= 1");
    require(sigma >= 4, "generate_walk_certified: sigma >= 4");
    require(t_max >= 1, "generate_walk_certified: t_max >= 1");
    for (int trial_sigma = sigma; trial_sigma <= sigma + 2; ++trial_sigma) {
        auto s = detail::backtrack_walk_sequence(n, trial_sigma, 200'000);
        if (s) return WalkCertificate{Sequence{std::move(*s), trial_sigma}, t_max};
    }
    throw Error("generate_walk_certified: no certified sequence found");
}

}  // namespace nonrep
