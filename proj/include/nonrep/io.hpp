#pragma once

#include <fstream>
#include <sstream>

#include "nonrep/embedding.hpp"
#include "nonrep/engine.hpp"
#include "nonrep/words.hpp"

namespace nonrep {

namespace detail {

struct LineScanner {
    std::vector<std::string> lines;
    std::string name;

    static LineScanner from_text(const std::string& text, std::string name) {
        LineScanner sc;
        sc.name = std::move(name);
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) sc.lines.push_back(line);
        return sc;
    }

    [[noreturn]] void fail(size_t line_no, const std::string& msg) const {
        throw InputError(name + ":" + std::to_string(line_no + 1) + ": " + msg);
    }

    std::vector<long long> ints(size_t line_no, const std::string& line) const {
        std::istringstream in(line);
        std::vector<long long> out;
        long long x;
        while (in >> x) out.push_back(x);
        std::string trailing;
        in.clear();
        if (in >> trailing) fail(line_no, "unexpected token '" + trailing + "'");
        return out;
    }
};

}  // namespace detail

// Graph file (.g): "n m", then m lines "u v" with 0 <= u < v < n.
inline std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

inline Graph read_graph(const std::string& text, const std::string& name = "<graph>") {
    auto sc = detail::LineScanner::from_text(text, name);
    if (sc.lines.empty()) sc.fail(0, "missing header 'n m'");
    auto head = sc.ints(0, sc.lines[0]);
    if (head.size() != 2 || head[0] < 0 || head[1] < 0) sc.fail(0, "expected header 'n m'");
    Graph g(static_cast<int>(head[0]));
    size_t m = static_cast<size_t>(head[1]);
    if (sc.lines.size() < m + 1) sc.fail(sc.lines.size(), "fewer edge lines than m");
    for (size_t i = 1; i <= m; ++i) {
        auto e = sc.ints(i, sc.lines[i]);
        if (e.size() != 2) sc.fail(i, "expected edge 'u v'");
        if (e[0] < 0 || e[1] <= e[0] || e[1] >= g.n) sc.fail(i, "edge endpoints must satisfy 0 <= u < v < n");
        try {
            g.add_edge(static_cast<int>(e[0]), static_cast<int>(e[1]));
        } catch (const Error& err) {
            sc.fail(i, err.what());
        }
    }
    for (size_t i = m + 1; i < sc.lines.size(); ++i)
        if (!sc.ints(i, sc.lines[i]).empty()) sc.fail(i, "unexpected extra line");
    return g;
}

// Embedded graph (.pg): "n", then "v: w1 w2 ..." per vertex (clockwise
// rotation), then "outer: a b c ..." (clockwise outer face).
inline std::string write_embedding(const RotationSystem& rs) {
    std::ostringstream out;
    out << rs.graph.n << "\n";
    for (int v = 0; v < rs.graph.n; ++v) {
        out << v << ":";
        for (int w : rs.rotation[v]) out << " " << w;
        out << "\n";
    }
    out << "outer:";
    for (int v : rs.outer_face) out << " " << v;
    out << "\n";
    return out.str();
}

inline RotationSystem read_embedding(const std::string& text, const std::string& name = "<pg>") {
    auto sc = detail::LineScanner::from_text(text, name);
    if (sc.lines.empty()) sc.fail(0, "missing header 'n'");
    auto head = sc.ints(0, sc.lines[0]);
    if (head.size() != 1 || head[0] < 0) sc.fail(0, "expected header 'n'");
    int n = static_cast<int>(head[0]);
    if (static_cast<int>(sc.lines.size()) < n + 2) sc.fail(sc.lines.size(), "missing rotation or outer line");
    RotationSystem rs;
    rs.graph = Graph(n);
    rs.rotation.resize(n);
    auto parse_prefixed = [&](size_t line_no, const std::string& expect) {
        const std::string& line = sc.lines[line_no];
        auto colon = line.find(':');
        if (colon == std::string::npos) sc.fail(line_no, "expected '" + expect + ": ...'");
        std::string tag = line.substr(0, colon);
        if (tag != expect) sc.fail(line_no, "expected line tag '" + expect + "', got '" + tag + "'");
        return sc.ints(line_no, line.substr(colon + 1));
    };
    for (int v = 0; v < n; ++v) {
        auto ids = parse_prefixed(1 + v, std::to_string(v));
        for (long long w : ids) {
            if (w < 0 || w >= n) sc.fail(1 + v, "neighbour id out of range");
            rs.rotation[v].push_back(static_cast<int>(w));
        }
        auto sorted = rs.rotation[v];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            sc.fail(1 + v, "duplicate neighbour in rotation");
    }
    for (int v = 0; v < n; ++v)
        for (int w : rs.rotation[v]) {
            if (w == v) sc.fail(1 + v, "self-loop in rotation");
            if (v < w) {
                auto& back = rs.rotation[w];
                if (std::find(back.begin(), back.end(), v) == back.end())
                    sc.fail(1 + v, "rotation not symmetric: " + std::to_string(v) + " lists " +
                                       std::to_string(w) + " but not vice versa");
                try {
                    rs.graph.add_edge(v, w);
                } catch (const Error& err) {
                    sc.fail(1 + v, err.what());
                }
            }
        }
    auto outer = parse_prefixed(1 + n, "outer");
    for (long long v : outer) {
        if (v < 0 || v >= n) sc.fail(1 + n, "outer face id out of range");
        rs.outer_face.push_back(static_cast<int>(v));
    }
    return rs;
}

// Colouring (.col): "n C", then "v flat" or "v flat pattern depth label".
struct ColouringFile {
    int n = 0;
    int colours = 0;
    std::vector<int> flat;
    bool structured = false;
    std::vector<int> pattern, depth, label;
};

inline std::string write_colouring(const std::vector<int>& flat) {
    std::vector<int> distinct = flat;
    std::sort(distinct.begin(), distinct.end());
    int colours = static_cast<int>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
    std::ostringstream out;
    out << flat.size() << " " << colours << "\n";
    for (size_t v = 0; v < flat.size(); ++v) out << v << " " << flat[v] << "\n";
    return out.str();
}

inline std::string write_colouring(const StructuredColouring& col) {
    std::ostringstream out;
    out << col.flat.size() << " " << col.colours_used() << "\n";
    for (size_t v = 0; v < col.flat.size(); ++v)
        out << v << " " << col.flat[v] << " " << col.pattern[v] << " " << col.depth[v] << " "
            << col.label[v] << "\n";
    return out.str();
}

inline ColouringFile read_colouring(const std::string& text, const std::string& name = "<col>") {
    auto sc = detail::LineScanner::from_text(text, name);
    if (sc.lines.empty()) sc.fail(0, "missing header 'n C'");
    auto head = sc.ints(0, sc.lines[0]);
    if (head.size() != 2 || head[0] < 0) sc.fail(0, "expected header 'n C'");
    ColouringFile cf;
    cf.n = static_cast<int>(head[0]);
    cf.colours = static_cast<int>(head[1]);
    cf.flat.assign(cf.n, -1);
    if (static_cast<int>(sc.lines.size()) < cf.n + 1) sc.fail(sc.lines.size(), "missing vertex lines");
    for (int i = 1; i <= cf.n; ++i) {
        auto xs = sc.ints(i, sc.lines[i]);
        if (xs.size() != 2 && xs.size() != 5) sc.fail(i, "expected 'v flat [pattern depth label]'");
        int v = static_cast<int>(xs[0]);
        if (v < 0 || v >= cf.n) sc.fail(i, "vertex id out of range");
        if (cf.flat[v] != -1) sc.fail(i, "vertex listed twice");
        cf.flat[v] = static_cast<int>(xs[1]);
        if (xs.size() == 5) {
            if (i == 1) {
                cf.structured = true;
                cf.pattern.assign(cf.n, 0);
                cf.depth.assign(cf.n, 0);
                cf.label.assign(cf.n, 0);
            }
            if (!cf.structured) sc.fail(i, "mixed structured and flat lines");
            cf.pattern[v] = static_cast<int>(xs[2]);
            cf.depth[v] = static_cast<int>(xs[3]);
            cf.label[v] = static_cast<int>(xs[4]);
        } else if (cf.structured) {
            sc.fail(i, "mixed structured and flat lines");
        }
    }
    return cf;
}

// Subset (.set): one vertex id per line.
inline std::string write_set(const std::vector<int>& set) {
    std::ostringstream out;
    for (int v : set) out << v << "\n";
    return out.str();
}

inline std::vector<int> read_set(const std::string& text, const std::string& name = "<set>") {
    auto sc = detail::LineScanner::from_text(text, name);
    std::vector<int> out;
    for (size_t i = 0; i < sc.lines.size(); ++i) {
        auto xs = sc.ints(i, sc.lines[i]);
        if (xs.empty()) continue;
        if (xs.size() != 1 || xs[0] < 0) sc.fail(i, "expected one vertex id");
        out.push_back(static_cast<int>(xs[0]));
    }
    return out;
}

// Sequence (.seq): "length sigma", then the symbols on one line.
inline std::string write_sequence(const Sequence& s) {
    std::ostringstream out;
    out << s.length() << " " << s.sigma << "\n";
    for (int i = 0; i < s.length(); ++i) out << (i ? " " : "") << s.symbols[i];
    out << "\n";
    return out.str();
}

inline Sequence read_sequence(const std::string& text, const std::string& name = "<seq>") {
    auto sc = detail::LineScanner::from_text(text, name);
    if (sc.lines.size() < 2) sc.fail(sc.lines.size(), "expected header and symbol line");
    auto head = sc.ints(0, sc.lines[0]);
    if (head.size() != 2 || head[0] < 0 || head[1] <= 0) sc.fail(0, "expected header 'length sigma'");
    Sequence s;
    s.sigma = static_cast<int>(head[1]);
    for (long long x : sc.ints(1, sc.lines[1])) {
        if (x < 0 || x >= s.sigma) sc.fail(1, "symbol out of range");
        s.symbols.push_back(static_cast<int>(x));
    }
    if (s.length() != static_cast<int>(head[0])) sc.fail(1, "symbol count differs from header");
    return s;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path);
    out << text;
}

}  // namespace nonrep
