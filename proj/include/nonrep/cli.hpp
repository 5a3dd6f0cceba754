#pragma once

#include <cmath>
#include <iostream>

#include <CLI11.hpp>

#include "nonrep/engine.hpp"
#include "nonrep/generators.hpp"
#include "nonrep/io.hpp"
#include "nonrep/local.hpp"

namespace nonrep {

namespace cli_detail {

inline RotationSystem load_embedding(const std::string& path) {
    RotationSystem rs = read_embedding(slurp(path), path);
    auto rep = check_embedding(rs);
    if (!rep.ok) throw InputError(path + ": " + rep.violation);
    return rs;
}

inline Graph load_graph(const std::string& path) { return read_graph(slurp(path), path); }

inline void print_witness(const Witness& w) {
    std::cout << "repetitive path of order " << w.path.size() << ":";
    for (int v : w.path) std::cout << " " << v;
    std::cout << "\nhalf colours:";
    for (int c : w.half_colours) std::cout << " " << c;
    std::cout << "\n";
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args) {
    CLI::App app{"nonrepetitive graph colouring toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- colour ----
    auto* colour = app.add_subcommand("colour", "colour a graph nonrepetitively");
    colour->require_subcommand(1);
    struct {
        std::string in, out;
        int root = 0, t_max = 6, sigma = 4, k = 1;
    } copt;

    auto* planar = colour->add_subcommand("planar", "layered-separator colouring, O(log n) colours");
    planar->add_option("--in", copt.in, "embedded graph (.pg)")->required();
    planar->add_option("--out", copt.out, "colouring output (.col)");
    planar->add_option("--root", copt.root, "BFS root");
    planar->add_option("--t-max", copt.t_max, "walk certificate strength");
    planar->callback([&] {
        auto rs = cli_detail::load_embedding(copt.in);
        auto res = colour_planar(rs, copt.root, copt.t_max);
        int n = rs.graph.n;
        double bound = 8.0 * (1.0 + std::log(std::max(n, 2)) / std::log(1.5));
        std::cout << "colours used: " << res.colouring.colours_used() << " (bound "
                  << bound << ")\n";
        std::cout << "recursion depth: " << res.colouring.max_depth
                  << ", separator searches: " << res.separator_stats.searches
                  << ", improvement steps: " << res.separator_stats.steps << "\n";
        if (!copt.out.empty()) spit(copt.out, write_colouring(res.colouring));
    });

    auto* tree = colour->add_subcommand("tree", "4-colour a tree by layer patterns");
    tree->add_option("--in", copt.in, "tree (.g)")->required();
    tree->add_option("--out", copt.out, "colouring output (.col)");
    tree->add_option("--root", copt.root, "root vertex");
    tree->add_option("--sigma", copt.sigma, "alphabet size");
    tree->add_option("--t-max", copt.t_max, "walk certificate strength");
    tree->callback([&] {
        Graph g = cli_detail::load_graph(copt.in);
        Layering lay = bfs_layering(g, copt.root);
        auto cert = generate_walk_certified(lay.p + 1, copt.sigma, copt.t_max);
        auto col = colour_tree(g, copt.root, cert);
        std::vector<int> distinct = col;
        std::sort(distinct.begin(), distinct.end());
        std::cout << "colours used: "
                  << std::unique(distinct.begin(), distinct.end()) - distinct.begin() << "\n";
        if (!copt.out.empty()) spit(copt.out, write_colouring(col));
    });

    auto* local = colour->add_subcommand("local", "no repetitive path of order <= 2k");
    local->add_option("--in", copt.in, "embedded graph (.pg)")->required();
    local->add_option("--out", copt.out, "colouring output (.col)");
    local->add_option("--root", copt.root, "BFS root");
    local->add_option("-k,--k", copt.k, "half-length bound k")->required();
    local->callback([&] {
        auto rs = cli_detail::load_embedding(copt.in);
        auto res = colour_local_planar(rs, copt.root, copt.k);
        std::cout << "colours used: " << res.colours_used() << " (tuples of length "
                  << 2 * copt.k << ")\n";
        if (!copt.out.empty()) spit(copt.out, write_colouring(res.flat));
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "check colouring properties");
    verify->require_subcommand(1);
    struct {
        std::string graph, col;
        int max_order = 0;
        long long budget = 100'000'000;
    } vopt;
    auto* nonrep_cmd = verify->add_subcommand("nonrep", "search for a repetitively coloured path");
    nonrep_cmd->add_option("--graph", vopt.graph, "graph (.g)")->required();
    nonrep_cmd->add_option("--col", vopt.col, "colouring (.col)")->required();
    nonrep_cmd->add_option("--max-order", vopt.max_order, "only paths of order <= this");
    nonrep_cmd->add_option("--budget", vopt.budget, "search node budget");
    nonrep_cmd->callback([&] {
        Graph g = cli_detail::load_graph(vopt.graph);
        auto cf = read_colouring(slurp(vopt.col), vopt.col);
        if (cf.n != g.n) throw InputError("colouring and graph disagree on n");
        if (auto w = find_repetitive_path(g, cf.flat, vopt.max_order, vopt.budget)) {
            cli_detail::print_witness(*w);
            exit_code = 1;
        } else {
            std::cout << "nonrepetitive"
                      << (vopt.max_order > 0
                              ? " up to order " + std::to_string(vopt.max_order)
                              : std::string(" (exhaustive)"))
                      << "\n";
        }
    });

    // ---- pi ----
    auto* pi = app.add_subcommand("pi", "nonrepetitive chromatic number");
    pi->require_subcommand(1);
    struct {
        std::string graph;
        int max_colours = 0, max_n = 16;
    } popt;
    auto* exact = pi->add_subcommand("exact", "exact value by exhaustive search");
    exact->add_option("--graph", popt.graph, "graph (.g)")->required();
    exact->add_option("--max-colours", popt.max_colours, "give up beyond this many colours");
    exact->add_option("--max-n", popt.max_n, "size guard for the search");
    exact->callback([&] {
        Graph g = cli_detail::load_graph(popt.graph);
        std::cout << "pi = " << exact_pi(g, popt.max_colours, popt.max_n) << "\n";
    });

    // ---- sep ----
    auto* sep = app.add_subcommand("sep", "balanced separators");
    sep->require_subcommand(1);
    struct {
        std::string in, subset;
        int root = 0;
    } sopt;
    auto* lolli = sep->add_subcommand("lollipop", "balanced lollipop separation");
    lolli->add_option("--in", sopt.in, "embedded graph (.pg)")->required();
    lolli->add_option("--root", sopt.root, "BFS root");
    lolli->add_option("--subset", sopt.subset, "vertex subset B (.set), default V(G)");
    lolli->callback([&] {
        auto rs = cli_detail::load_embedding(sopt.in);
        RotationSystem tri = triangulate(rs);
        Layering lay = bfs_layering(tri.graph, sopt.root);
        std::vector<int> b;
        if (sopt.subset.empty()) {
            b.resize(tri.graph.n);
            std::iota(b.begin(), b.end(), 0);
        } else {
            b = read_set(slurp(sopt.subset), sopt.subset);
        }
        if (b.size() <= 2) {
            std::cout << "|B| <= 2: whole-graph separation (G, G)\n";
            return;
        }
        LollipopSearch search(tri, lay);
        auto mask = vertex_mask(tri.graph.n, b);
        auto found = search.find_balanced(mask, static_cast<int>(b.size()));
        const auto& s = found.lollipop;
        std::cout << "u-arm:";
        for (int v : s.u_arm) std::cout << " " << v;
        if (s.has_top()) std::cout << " " << s.top;
        std::cout << "\nv-arm:";
        for (int v : s.v_arm) std::cout << " " << v;
        std::cout << "\nheight " << s.height() << ", " << found.iterations
                  << " improvement steps\n";
        std::cout << "r_B = " << found.counts.r_B << ", l_B = " << found.counts.l_B
                  << ", |B| = " << b.size() << " (both sides <= 2/3 |B|)\n";
        auto separation = search.separation(s, mask);
        std::cout << "parts: " << separation.left_part.size() << " + "
                  << separation.right_part.size() << " vertices, boundary "
                  << separation.left_part.size() + separation.right_part.size() - tri.graph.n
                  << "\n";
    });

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "seeded instance generators");
    gen->require_subcommand(1);
    struct {
        std::string out, pg_out, tree_in, h_in;
        int n = 10, flips = -1, root = 0;
        unsigned seed = 1;
    } gopt;

    auto* gtri = gen->add_subcommand("triangulation", "random plane triangulation");
    gtri->add_option("--n", gopt.n, "vertex count")->required();
    gtri->add_option("--seed", gopt.seed, "seed");
    gtri->add_option("--flips", gopt.flips, "diagonal flip attempts (default 2n)");
    gtri->add_option("--out", gopt.out, "output (.pg)")->required();
    gtri->callback([&] {
        int flips = gopt.flips >= 0 ? gopt.flips : 2 * gopt.n;
        spit(gopt.out, write_embedding(gen_triangulation(gopt.n, gopt.seed, flips)));
    });

    auto* gtc = gen->add_subcommand("tree-cycles", "tree plus layer cycles");
    gtc->add_option("--tree", gopt.tree_in, "tree input (.g); otherwise random");
    gtc->add_option("--n", gopt.n, "random tree size");
    gtc->add_option("--seed", gopt.seed, "seed");
    gtc->add_option("--root", gopt.root, "root vertex");
    gtc->add_option("--out", gopt.out, "output (.pg)")->required();
    gtc->callback([&] {
        Graph t = gopt.tree_in.empty() ? gen_random_tree(gopt.n, gopt.seed)
                                       : cli_detail::load_graph(gopt.tree_in);
        spit(gopt.out, write_embedding(gen_tree_cycles(t, gopt.root)));
    });

    auto* gpath = gen->add_subcommand("path", "path graph");
    gpath->add_option("--n", gopt.n, "vertex count")->required();
    gpath->add_option("--out", gopt.out, "output (.g)")->required();
    gpath->callback([&] { spit(gopt.out, write_graph(gen_path(gopt.n))); });

    auto* gcycle = gen->add_subcommand("cycle", "cycle graph");
    gcycle->add_option("--n", gopt.n, "vertex count")->required();
    gcycle->add_option("--out", gopt.out, "output (.g)")->required();
    gcycle->callback([&] { spit(gopt.out, write_graph(gen_cycle(gopt.n))); });

    auto* gtree = gen->add_subcommand("tree", "uniform random tree");
    gtree->add_option("--n", gopt.n, "vertex count")->required();
    gtree->add_option("--seed", gopt.seed, "seed");
    gtree->add_option("--out", gopt.out, "output (.g)")->required();
    gtree->add_option("--pg", gopt.pg_out, "also write an embedding (.pg)");
    gtree->callback([&] {
        Graph t = gen_random_tree(gopt.n, gopt.seed);
        spit(gopt.out, write_graph(t));
        if (!gopt.pg_out.empty()) spit(gopt.pg_out, write_embedding(embed_tree(t)));
    });

    auto* glb = gen->add_subcommand("lowerbound", "22-path gadget with dominators and copies of H");
    glb->add_option("--h-graph", gopt.h_in, "graph H (.g)")->required();
    glb->add_option("--out", gopt.out, "output (.g)")->required();
    glb->callback([&] {
        spit(gopt.out, write_graph(gen_lowerbound(cli_detail::load_graph(gopt.h_in))));
    });

    // ---- words ----
    auto* words = app.add_subcommand("words", "squarefree and walk-certified sequences");
    words->require_subcommand(1);
    struct {
        std::string out;
        int n = 64, sigma = 4, t_max = 6;
    } wopt;

    auto* thue = words->add_subcommand("thue", "squarefree ternary word");
    thue->add_option("--n", wopt.n, "length")->required();
    thue->add_option("--out", wopt.out, "output (.seq)")->required();
    thue->callback([&] {
        auto s = thue_word(wopt.n);
        require(is_squarefree(s), "thue_word failed its own oracle");
        spit(wopt.out, write_sequence(s));
    });

    auto* walk = words->add_subcommand("walk", "walk-certified sequence");
    walk->add_option("--n", wopt.n, "length")->required();
    walk->add_option("--sigma", wopt.sigma, "alphabet size");
    walk->add_option("--t-max", wopt.t_max, "certified half-length bound");
    walk->add_option("--out", wopt.out, "output (.seq)")->required();
    walk->callback([&] {
        auto cert = generate_walk_certified(wopt.n, wopt.sigma, wopt.t_max);
        require(is_walk_nonrepetitive(cert.sequence, wopt.t_max),
                "generated sequence failed verification");
        std::cout << "sigma used: " << cert.sequence.sigma << " (certified to t_max "
                  << cert.t_max << ")\n";
        spit(wopt.out, write_sequence(cert.sequence));
    });

    std::reverse(args.begin(), args.end());  // CLI11 parses back to front
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

inline int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(std::move(args));
}

}  // namespace nonrep
