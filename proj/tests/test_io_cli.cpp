#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <unistd.h>

#include "nonrep/cli.hpp"
#include "nonrep/generators.hpp"
#include "nonrep/io.hpp"

using namespace nonrep;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("nonrep_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

}  // namespace

TEST_CASE("file format round trips are bit-exact") {
    SUBCASE("graph") {
        auto g = gen_random_tree(20, 3);
        g.add_edge(0, 19);
        auto text = write_graph(g);
        auto back = read_graph(text);
        CHECK(back.edges() == g.edges());
        CHECK(write_graph(back) == text);
    }
    SUBCASE("embedding") {
        auto rs = gen_triangulation(18, 2, 36);
        auto text = write_embedding(rs);
        auto back = read_embedding(text);
        CHECK(write_embedding(back) == text);
        CHECK(check_embedding(back).ok);
    }
    SUBCASE("structured colouring") {
        auto rs = gen_triangulation(12, 5, 24);
        auto col = colour_planar(rs, 0).colouring;
        auto text = write_colouring(col);
        auto back = read_colouring(text);
        CHECK(back.structured);
        CHECK(back.flat == col.flat);
        CHECK(back.pattern == col.pattern);
    }
    SUBCASE("flat colouring, set, sequence") {
        std::vector<int> flat{3, 1, 4, 1, 5};
        CHECK(read_colouring(write_colouring(flat)).flat == flat);
        std::vector<int> set{0, 4, 17};
        CHECK(read_set(write_set(set)) == set);
        auto seq = thue_word(20);
        auto text = write_sequence(seq);
        auto back = read_sequence(text);
        CHECK(back.symbols == seq.symbols);
        CHECK(write_sequence(back) == text);
    }
}

TEST_CASE("readers report the offending line") {
    CHECK_THROWS_WITH_AS(read_graph("banana\n", "f.g"), doctest::Contains("f.g:1"), InputError);
    CHECK_THROWS_WITH_AS(read_graph("2 1\n1 0\n", "f.g"), doctest::Contains("f.g:2"), InputError);
    CHECK_THROWS_WITH_AS(read_embedding("2\n0: 1\n1:\nouter:\n", "f.pg"),
                         doctest::Contains("f.pg:2"), InputError);
    CHECK_THROWS_WITH_AS(read_embedding("2\n0: 1 1\n1: 0 0\nouter: 0 1\n", "f.pg"),
                         doctest::Contains("duplicate"), InputError);
    CHECK_THROWS_WITH_AS(read_colouring("2 1\n0 0\n0 0\n", "f.col"),
                         doctest::Contains("f.col:3"), InputError);
    CHECK_THROWS_WITH_AS(read_sequence("3 2\n0 1\n", "f.seq"), doctest::Contains("f.seq:2"),
                         InputError);
}

TEST_CASE("cli end to end") {
    TempDir dir;
    SUBCASE("gen, colour planar, verify: property holds") {
        CHECK(run_cli({"gen", "triangulation", "--n", "20", "--seed", "3",
                       "--out", dir.file("g.pg")}) == 0);
        CHECK(run_cli({"colour", "planar", "--in", dir.file("g.pg"), "--root", "0",
                       "--out", dir.file("c.col")}) == 0);
        // .pg has no .g twin yet: derive one for the verifier
        auto rs = read_embedding(slurp(dir.file("g.pg")));
        spit(dir.file("g.g"), write_graph(rs.graph));
        CHECK(run_cli({"verify", "nonrep", "--graph", dir.file("g.g"),
                       "--col", dir.file("c.col")}) == 0);
    }
    SUBCASE("a repetitively coloured path exits 1") {
        spit(dir.file("p4.g"), write_graph(gen_path(4)));
        spit(dir.file("bad.col"), "4 2\n0 1\n1 2\n2 1\n3 2\n");
        CHECK(run_cli({"verify", "nonrep", "--graph", dir.file("p4.g"),
                       "--col", dir.file("bad.col")}) == 1);
    }
    SUBCASE("missing and malformed files exit 2") {
        CHECK(run_cli({"verify", "nonrep", "--graph", dir.file("absent.g"),
                       "--col", dir.file("absent.col")}) == 2);
        spit(dir.file("broken.g"), "oops\n");
        CHECK(run_cli({"pi", "exact", "--graph", dir.file("broken.g")}) == 2);
        CHECK(run_cli({"no-such-command"}) == 2);
    }
    SUBCASE("invalid embeddings exit 2") {
        // rotations valid as lists, but the faces do not close up planarly
        spit(dir.file("torus.pg"), "4\n0: 1 3 2\n1: 0 2 3\n2: 0 3 1\n3: 0 2 1\nouter: 0 1 2\n");
        CHECK(run_cli({"colour", "planar", "--in", dir.file("torus.pg")}) == 2);
    }
    SUBCASE("identical invocations produce byte-identical outputs") {
        for (const char* name : {"a.col", "b.col"})
            CHECK(run_cli({"gen", "triangulation", "--n", "16", "--seed", "9",
                           "--out", dir.file("t.pg")}) +
                      run_cli({"colour", "planar", "--in", dir.file("t.pg"),
                               "--out", dir.file(name)}) ==
                  0);
        CHECK(slurp(dir.file("a.col")) == slurp(dir.file("b.col")));
    }
    SUBCASE("words subcommands") {
        CHECK(run_cli({"words", "thue", "--n", "32", "--out", dir.file("t.seq")}) == 0);
        CHECK(read_sequence(slurp(dir.file("t.seq"))).length() == 32);
        CHECK(run_cli({"words", "walk", "--n", "24", "--out", dir.file("w.seq")}) == 0);
        CHECK(is_walk_nonrepetitive(read_sequence(slurp(dir.file("w.seq"))), 6));
    }
    SUBCASE("sep lollipop prints a balanced separation") {
        CHECK(run_cli({"gen", "triangulation", "--n", "24", "--seed", "5",
                       "--out", dir.file("s.pg")}) == 0);
        CHECK(run_cli({"sep", "lollipop", "--in", dir.file("s.pg")}) == 0);
        spit(dir.file("b.set"), write_set({1, 5, 9}));
        CHECK(run_cli({"sep", "lollipop", "--in", dir.file("s.pg"),
                       "--subset", dir.file("b.set")}) == 0);
    }
    SUBCASE("colour tree and colour local") {
        CHECK(run_cli({"gen", "tree", "--n", "40", "--seed", "2", "--out", dir.file("t.g"),
                       "--pg", dir.file("t.pg")}) == 0);
        CHECK(run_cli({"colour", "tree", "--in", dir.file("t.g"), "--out",
                       dir.file("tc.col")}) == 0);
        auto tree = read_graph(slurp(dir.file("t.g")));
        auto col = read_colouring(slurp(dir.file("tc.col")));
        CHECK_FALSE(find_repetitive_path(tree, col.flat).has_value());
        CHECK(run_cli({"colour", "local", "--in", dir.file("t.pg"), "-k", "2", "--out",
                       dir.file("lc.col")}) == 0);
        auto lc = read_colouring(slurp(dir.file("lc.col")));
        CHECK_FALSE(find_repetitive_path(tree, lc.flat, 4).has_value());
    }
    SUBCASE("gen lowerbound and gen tree-cycles") {
        spit(dir.file("h.g"), write_graph(gen_cycle(5)));
        CHECK(run_cli({"gen", "lowerbound", "--h-graph", dir.file("h.g"), "--out",
                       dir.file("lb.g")}) == 0);
        CHECK(read_graph(slurp(dir.file("lb.g"))).n == 134);
        CHECK(run_cli({"gen", "tree-cycles", "--n", "30", "--seed", "4", "--out",
                       dir.file("gt.pg")}) == 0);
        CHECK(check_embedding(read_embedding(slurp(dir.file("gt.pg")))).ok);
    }
}
