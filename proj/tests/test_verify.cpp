#include <doctest.h>

#include "nonrep/generators.hpp"
#include "nonrep/verify.hpp"
#include "nonrep/words.hpp"
#include "oracles.hpp"

using namespace nonrep;

TEST_CASE("properness") {
    Graph k2(2);
    k2.add_edge(0, 1);
    CHECK_FALSE(is_proper(k2, {1, 1}));
    CHECK(is_proper(k2, {1, 2}));
    auto e = find_improper_edge(k2, {1, 1});
    REQUIRE(e.has_value());
    CHECK(*e == std::make_pair(0, 1));
}

TEST_CASE("repetitive path search examples") {
    SUBCASE("P4 coloured 1,2,1,2") {
        auto w = find_repetitive_path(gen_path(4), {1, 2, 1, 2});
        REQUIRE(w.has_value());
        CHECK(w->path == std::vector<int>{0, 1, 2, 3});
        CHECK(w->half_colours == std::vector<int>{1, 2});
    }
    SUBCASE("P4 coloured 1,2,1,3 is clean") {
        CHECK_FALSE(find_repetitive_path(gen_path(4), {1, 2, 1, 3}).has_value());
    }
    SUBCASE("a monochromatic edge is an order-2 repetition") {
        auto w = find_repetitive_path(gen_cycle(3), {1, 1, 2});
        REQUIRE(w.has_value());
        CHECK(w->path == std::vector<int>{0, 1});
    }
    SUBCASE("max_order hides long repetitions") {
        std::vector<int> col{1, 2, 3, 1, 2, 3};
        CHECK_FALSE(find_repetitive_path(gen_path(6), col, 4).has_value());
        auto w = find_repetitive_path(gen_path(6), col);
        REQUIRE(w.has_value());
        CHECK(w->path.size() == 6);
    }
    SUBCASE("node budget raises an error") {
        // a clean colouring forces the search to exhaust the space
        auto w = thue_word(20);
        CHECK_THROWS_AS(find_repetitive_path(gen_path(20), w.symbols, 0, 5), Error);
    }
}

TEST_CASE("pair search agrees with naive path enumeration") {
    Rng rng(99);
    int repetitive_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Graph g;
        switch (trial % 3) {
            case 0: g = gen_random_tree(4 + rng.below(5), rng.gen()); break;
            case 1: g = gen_cycle(3 + rng.below(5)); break;
            default: {
                g = gen_random_tree(5 + rng.below(4), rng.gen());
                for (int extra = 0; extra < 3; ++extra) {
                    int u = rng.below(g.n), v = rng.below(g.n);
                    if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
                }
            }
        }
        int colours = 2 + rng.below(3);
        std::vector<int> col(g.n);
        for (int& c : col) c = rng.below(colours);
        bool naive = oracles::naive_has_repetitive(g, col);
        bool paired = find_repetitive_path(g, col).has_value();
        CHECK(naive == paired);
        repetitive_seen += naive ? 1 : 0;
    }
    CHECK(repetitive_seen > 50);  // the sample exercises both outcomes
}

TEST_CASE("exact nonrepetitive chromatic number") {
    SUBCASE("small closed forms") {
        CHECK(exact_pi(gen_cycle(3)) == 3);
        CHECK(exact_pi(gen_path(4)) == 3);
        CHECK(exact_pi(gen_cycle(5)) == 4);
    }
    SUBCASE("complete graphs need n colours") {
        for (int n = 1; n <= 6; ++n) {
            Graph kn(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) kn.add_edge(u, v);
            CHECK(exact_pi(kn) == n);
        }
    }
    SUBCASE("paths need exactly 3 colours") {
        for (int n = 4; n <= 10; ++n) CHECK(exact_pi(gen_path(n)) == 3);
    }
    SUBCASE("cross-check against the all-colourings enumerator") {
        for (int n = 2; n <= 6; ++n) CHECK(exact_pi(gen_path(n)) == oracles::naive_pi(gen_path(n)));
        for (int n = 3; n <= 6; ++n) CHECK(exact_pi(gen_cycle(n)) == oracles::naive_pi(gen_cycle(n)));
        Graph k4(4);
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
        CHECK(exact_pi(k4) == oracles::naive_pi(k4));
    }
    SUBCASE("at least the clique number, monotone under subgraphs") {
        Rng rng(5);
        for (int trial = 0; trial < 10; ++trial) {
            Graph g = gen_random_tree(5 + rng.below(3), rng.gen());
            for (int extra = 0; extra < 3; ++extra) {
                int u = rng.below(g.n), v = rng.below(g.n);
                if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
            }
            int pi = exact_pi(g);
            CHECK(pi >= oracles::clique_number(g));
            std::vector<int> sub_vertices;
            for (int v = 0; v + 1 < g.n; ++v) sub_vertices.push_back(v);
            auto [sub, map] = induced_subgraph(g, sub_vertices);
            CHECK(exact_pi(sub) <= pi);
        }
    }
    SUBCASE("guards") {
        CHECK_THROWS_AS(exact_pi(gen_path(20)), Error);                  // n guard
        CHECK_THROWS_AS(exact_pi(gen_cycle(5), 2), Error);               // max_colours
        CHECK_THROWS_AS(exact_pi(gen_path(10), 0, 16, 10), Error);       // node budget
        CHECK(exact_pi(gen_path(20), 0, 32) == 3);                       // raised guard
    }
}

TEST_CASE("layering verifier") {
    auto g = gen_path(4);
    CHECK(verify_layering(g, bfs_layering(g, 0)).ok);
    Layering bad;
    bad.layer = {0, 2, 3, 4};
    bad.p = 4;
    auto rep = verify_layering(g, bad);
    CHECK_FALSE(rep.ok);
    CHECK(rep.violation.find("(0, 1)") != std::string::npos);
    Graph single(1);
    Layering lay1;
    lay1.layer = {0};
    CHECK(verify_layering(single, lay1).ok);
}

TEST_CASE("separation verifier") {
    auto g = gen_path(4);
    SUBCASE("the whole-graph separation is valid") {
        Separation whole{{0, 1, 2, 3}, {0, 1, 2, 3}};
        CHECK(verify_separation(g, whole).ok);
    }
    SUBCASE("a crossing edge is reported") {
        Separation bad{{0, 1}, {2, 3}};
        auto rep = verify_separation(g, bad);
        CHECK_FALSE(rep.ok);
        CHECK(rep.violation.find("(1, 2)") != std::string::npos);
    }
    SUBCASE("uncovered vertices are reported") {
        Separation gap{{0, 1}, {3}};
        CHECK_FALSE(verify_separation(g, gap).ok);
    }
}
