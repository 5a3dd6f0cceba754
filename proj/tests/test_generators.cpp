#include <doctest.h>

#include "nonrep/generators.hpp"
#include "nonrep/io.hpp"

using namespace nonrep;

TEST_CASE("generators are deterministic in parameters and seed") {
    CHECK(write_embedding(gen_triangulation(30, 5, 60)) ==
          write_embedding(gen_triangulation(30, 5, 60)));
    CHECK(write_graph(gen_random_tree(40, 9)) == write_graph(gen_random_tree(40, 9)));
    CHECK(write_embedding(gen_tree_cycles(gen_random_tree(25, 3), 0)) ==
          write_embedding(gen_tree_cycles(gen_random_tree(25, 3), 0)));
}

TEST_CASE("random plane triangulations") {
    SUBCASE("n = 3 is the triangle") {
        auto rs = gen_triangulation(3, 1);
        CHECK(rs.graph.edge_count() == 3);
        CHECK(check_embedding(rs).ok);
    }
    SUBCASE("n = 4 is K4 regardless of flips") {
        auto rs = gen_triangulation(4, 7, 100);
        CHECK(rs.graph.edge_count() == 6);
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) CHECK(rs.graph.has_edge(u, v));
    }
    SUBCASE("n = 50, seed 1: m = 144 and every face is a triangle") {
        auto rs = gen_triangulation(50, 1, 100);
        CHECK(rs.graph.edge_count() == 144);
        for (const auto& f : trace_faces(rs)) CHECK(f.size() == 3);
        CHECK(check_embedding(rs).ok);
    }
    SUBCASE("flips preserve the invariants") {
        for (unsigned seed : {2u, 3u, 4u}) {
            auto rs = gen_triangulation(35, seed, 200);
            CHECK(rs.graph.edge_count() == 3 * 35 - 6);
            CHECK(check_embedding(rs).ok);
        }
    }
    CHECK_THROWS_AS(gen_triangulation(2, 1), Error);
}

TEST_CASE("tree-with-layer-cycles") {
    SUBCASE("a path stays a path: all layers are singletons") {
        auto rs = gen_tree_cycles(gen_path(6), 0);
        CHECK(rs.graph.edge_count() == 5);
        CHECK(check_embedding(rs).ok);
    }
    SUBCASE("the star K_{1,3} becomes the wheel W3") {
        Graph star(4);
        for (int v = 1; v < 4; ++v) star.add_edge(0, v);
        auto rs = gen_tree_cycles(star, 0);
        CHECK(rs.graph.n == 4);
        CHECK(rs.graph.edge_count() == 6);
        CHECK(rs.graph.has_edge(1, 2));
        CHECK(rs.graph.has_edge(2, 3));
        CHECK(rs.graph.has_edge(1, 3));
        CHECK(check_embedding(rs).ok);
    }
    SUBCASE("complete binary tree of depth 3 embeds planarly") {
        Graph t(15);
        for (int v = 1; v < 15; ++v) t.add_edge((v - 1) / 2, v);
        auto rs = gen_tree_cycles(t, 0);
        CHECK(check_embedding(rs).ok);
        auto faces = trace_faces(rs);
        CHECK(static_cast<int>(faces.size()) == 2 - rs.graph.n + rs.graph.edge_count());
    }
    SUBCASE("a layer of two gets a single edge") {
        Graph t(3);
        t.add_edge(0, 1);
        t.add_edge(0, 2);
        auto rs = gen_tree_cycles(t, 0);
        CHECK(rs.graph.edge_count() == 3);
        CHECK(rs.graph.has_edge(1, 2));
        CHECK(check_embedding(rs).ok);
    }
    SUBCASE("random trees embed planarly") {
        for (unsigned seed : {1u, 5u, 9u}) {
            auto rs = gen_tree_cycles(gen_random_tree(40, seed), 0);
            CHECK(check_embedding(rs).ok);
        }
    }
    CHECK_THROWS_AS(gen_tree_cycles(gen_cycle(4), 0), Error);
}

TEST_CASE("lower-bound gadget") {
    SUBCASE("H = K1 gives 46 vertices") {
        CHECK(gen_lowerbound(Graph(1)).n == 46);
    }
    SUBCASE("x and y are adjacent and dominate the 22-path") {
        auto g = gen_lowerbound(Graph(1));
        int x = 22, y = 23;
        CHECK(g.has_edge(x, y));
        for (int i = 0; i < 22; ++i) {
            CHECK(g.has_edge(x, i));
            CHECK(g.has_edge(y, i));
            if (i + 1 < 22) CHECK(g.has_edge(i, i + 1));
        }
    }
    SUBCASE("H = C5: copies are disjoint, internally C5, joined to one path vertex each") {
        auto h = gen_cycle(5);
        auto g = gen_lowerbound(h);
        CHECK(g.n == 24 + 110);
        for (int i = 0; i < 22; ++i) {
            int base = 24 + 5 * i;
            for (int a = 0; a < 5; ++a) {
                for (int b = a + 1; b < 5; ++b)
                    CHECK(g.has_edge(base + a, base + b) == h.has_edge(a, b));
                // joined to v_i and nothing else outside the copy
                for (int p = 0; p < 22; ++p) CHECK(g.has_edge(p, base + a) == (p == i));
                CHECK_FALSE(g.has_edge(22, base + a));
                CHECK_FALSE(g.has_edge(23, base + a));
                if (i > 0) CHECK_FALSE(g.has_edge(base + a, 24 + 5 * (i - 1)));
            }
        }
    }
}

TEST_CASE("plain families") {
    CHECK(gen_path(4).edge_count() == 3);
    CHECK(gen_cycle(5).edge_count() == 5);
    CHECK_THROWS_AS(gen_cycle(2), Error);
    auto t = gen_random_tree(30, 7);
    CHECK(t.edge_count() == 29);
    CHECK(is_tree(t));
}
