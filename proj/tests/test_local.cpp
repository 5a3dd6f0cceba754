#include <doctest.h>

#include "fixtures.hpp"
#include "nonrep/generators.hpp"
#include "nonrep/local.hpp"

using namespace nonrep;

TEST_CASE("slab construction") {
    SUBCASE("P6 with k = 1: slab 3 spans layers 3 and 4") {
        Graph g = gen_path(6);
        auto lay = bfs_layering(g, 0);
        auto list = slabs(g, lay, 1);
        CHECK(list.size() == 6);
        CHECK(list[3].vertices == std::vector<int>{3, 4});
        for (const auto& s : list) CHECK(s.subgraph.n <= 2);
    }
    SUBCASE("k beyond the depth: the i = 0 slab is the whole graph") {
        auto rs = gen_triangulation(12, 2, 24);
        auto lay = bfs_layering(rs.graph, 0);
        auto list = slabs(rs.graph, lay, lay.p + 1);
        CHECK(list[0].subgraph.n == rs.graph.n);
        CHECK(list[0].subgraph.edge_count() == rs.graph.edge_count());
    }
    SUBCASE("residue uniqueness and required coverage, exhaustively") {
        auto rs = gen_triangulation(40, 3, 80);
        auto lay = bfs_layering(rs.graph, 0);
        for (int k : {1, 2, 3}) {
            auto list = slabs(rs.graph, lay, k);
            for (int v = 0; v < rs.graph.n; ++v)
                for (int j = 0; j < 2 * k; ++j) {
                    int count = 0;
                    for (const auto& s : list)
                        if (s.index % (2 * k) == j && s.map.to_sub[v] != -1) ++count;
                    int top = lay.layer[v];
                    bool required = top - (((top - j) % (2 * k) + 2 * k) % (2 * k)) >= 0;
                    CHECK(count == (required ? 1 : 0));
                }
        }
    }
    SUBCASE("short paths are covered by the slab at their minimum layer") {
        auto rs = gen_triangulation(30, 5, 60);
        auto lay = bfs_layering(rs.graph, 0);
        int k = 2;
        auto list = slabs(rs.graph, lay, k);
        Rng rng(17);
        for (int trial = 0; trial < 200; ++trial) {  // sampled simple paths of order <= 2k
            std::vector<int> path{rng.below(rs.graph.n)};
            for (int step = 1; step < 2 * k; ++step) {
                const auto& nb = rs.graph.adj[path.back()];
                int next = nb[rng.below(static_cast<int>(nb.size()))];
                if (std::find(path.begin(), path.end(), next) != path.end()) break;
                path.push_back(next);
            }
            int min_layer = lay.p;
            for (int v : path) min_layer = std::min(min_layer, lay.layer[v]);
            for (int v : path) CHECK(list[min_layer].map.to_sub[v] != -1);
        }
    }
}

TEST_CASE("slab colouring") {
    SUBCASE("single vertex slab") {
        Graph g = gen_path(1);
        auto lay = bfs_layering(g, 0);
        auto list = slabs(g, lay, 1);
        CHECK(colour_slab(list[0]) == std::vector<int>{0});
    }
    SUBCASE("a P4 slab takes exactly 3 colours") {
        Graph g = gen_path(4);
        Slab s;
        s.vertices = {0, 1, 2, 3};
        auto [sub, map] = induced_subgraph(g, s.vertices);
        s.subgraph = std::move(sub);
        s.map = std::move(map);
        auto col = colour_slab(s);
        std::vector<int> distinct = col;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        CHECK(distinct.size() == 3);
        CHECK_FALSE(find_repetitive_path(s.subgraph, col).has_value());
    }
    SUBCASE("K4 needs 4 colours") {
        Slab s;
        s.vertices = {0, 1, 2, 3};
        auto [sub, map] = induced_subgraph(fixtures::k4().graph, s.vertices);
        s.subgraph = std::move(sub);
        s.map = std::move(map);
        auto col = colour_slab(s);
        std::sort(col.begin(), col.end());
        CHECK(col == std::vector<int>{0, 1, 2, 3});
    }
    SUBCASE("greedy path handles slabs past the exact cutoff") {
        auto rs = gen_triangulation(26, 8, 52);
        auto lay = bfs_layering(rs.graph, 0);
        auto list = slabs(rs.graph, lay, lay.p + 1);  // slab 0 = whole graph
        auto col = colour_slab(list[0]);
        CHECK_FALSE(find_repetitive_path(list[0].subgraph, col).has_value());
    }
}

TEST_CASE("tuple product colouring") {
    auto rs = gen_triangulation(20, 4, 40);
    auto lay = bfs_layering(rs.graph, 0);
    int k = 1;
    auto list = slabs(rs.graph, lay, k);
    std::vector<std::vector<int>> cols;
    for (const auto& s : list) cols.push_back(colour_slab(s));
    auto tuples = product_colouring(rs.graph, lay, k, list, cols);
    SUBCASE("tuples have length 2k") {
        for (const auto& t : tuples.tuple) CHECK(t.size() == 2u * k);
    }
    SUBCASE("flat encoding is injective on occurring tuples") {
        for (int u = 0; u < rs.graph.n; ++u)
            for (int v = 0; v < rs.graph.n; ++v)
                CHECK((tuples.tuple[u] == tuples.tuple[v]) == (tuples.flat[u] == tuples.flat[v]));
    }
    SUBCASE("colour count bounded by the slab maximum to the 2k") {
        long long max_slab = 1;
        for (int c : tuples.slab_colours) max_slab = std::max<long long>(max_slab, c);
        long long bound = 1;
        for (int i = 0; i < 2 * k; ++i) bound *= max_slab + 1;  // -1 sentinel adds one value
        CHECK(tuples.colours_used() <= bound);
    }
    SUBCASE("a missing cover is detected") {
        auto broken_list = list;
        auto broken_cols = cols;
        broken_list.erase(broken_list.begin());
        broken_cols.erase(broken_cols.begin());
        CHECK_THROWS_WITH_AS(product_colouring(rs.graph, lay, k, broken_list, broken_cols),
                             doctest::Contains("missing"), Error);
    }
}

TEST_CASE("bounded-length nonrepetitive pipeline") {
    SUBCASE("k = 1 yields a proper colouring") {
        auto rs = gen_triangulation(30, 6, 60);
        auto res = colour_local_planar(rs, 0, 1);
        CHECK(is_proper(rs.graph, res.flat));
        CHECK_FALSE(find_repetitive_path(rs.graph, res.flat, 2).has_value());
    }
    SUBCASE("k = 2 avoids two-coloured P4s (star colouring)") {
        auto rs = gen_triangulation(25, 7, 50);
        auto res = colour_local_planar(rs, 0, 2);
        CHECK_FALSE(find_repetitive_path(rs.graph, res.flat, 4).has_value());
    }
    SUBCASE("k = 2 on n = 40: no repetitive path of order up to 4") {
        auto rs = gen_triangulation(40, 9, 80);
        auto res = colour_local_planar(rs, 0, 2);
        CHECK_FALSE(find_repetitive_path(rs.graph, res.flat, 4).has_value());
    }
}
