#include <doctest.h>

#include <random>

#include "focount/decomposition.hpp"
#include "focount/io.hpp"

using namespace focount;

TEST_CASE("splitter move on the named examples") {
    auto star = LabeledGraph::from_edges(7, {{0,1},{0,2},{0,3},{0,4},{0,5},{0,6}});
    CHECK(splitter_move(star, 2) == 0);
    LabeledGraph one(1);
    CHECK(splitter_move(one, 3) == 0);
    auto p7 = gen_path(7);
    int s = splitter_move(p7, 1);
    // removing the move must leave clusters strictly smaller than the graph
    auto pi = heuristic_ordering(p7, 2);
    std::vector<int> rest;
    for (int v = 0; v < 7; ++v)
        if (v != s) rest.push_back(v);
    auto sub = induced_subgraph(p7, rest);
    std::vector<int> perm;
    for (int v : pi.perm) {
        auto it = std::lower_bound(rest.begin(), rest.end(), v);
        if (it != rest.end() && *it == v) perm.push_back(static_cast<int>(it - rest.begin()));
    }
    auto sub_pi = VertexOrdering::from_perm(perm);
    for (int v = 0; v < sub.graph.n(); ++v)
        CHECK(cluster_x(sub.graph, sub_pi, v, 2).size() < 7);
    CHECK_THROWS_AS(splitter_move(LabeledGraph(0), 1), InputError);
}

TEST_CASE("neighborhood cover on the named examples") {
    LabeledGraph one(1);
    auto nc1 = neighborhood_cover(one, VertexOrdering::identity(1), 1);
    CHECK(nc1.clusters.size() == 1);
    CHECK(nc1.clusters[0] == std::vector<int>{0});

    auto p5 = gen_path(5);
    auto pi = VertexOrdering::identity(5);
    auto nc = neighborhood_cover(p5, pi, 1);
    CHECK(check_cover_property(p5, nc, 1));

    auto k4 = LabeledGraph::from_edges(4, {{0,1},{0,2},{0,3},{1,2},{1,3},{2,3}});
    auto nck = neighborhood_cover(k4, VertexOrdering::identity(4), 1);
    bool has_full = false;
    for (const auto& c : nck.clusters) has_full |= c.size() == 4;
    CHECK(has_full);
    CHECK(check_cover_property(k4, nck, 1));
}

TEST_CASE("cover property on random graphs and orderings") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 15; ++t) {
        int n = 3 + static_cast<int>(rng() % 12);
        LabeledGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto pi = VertexOrdering::from_perm(perm);
        int r = 1 + static_cast<int>(rng() % 2);
        CHECK(check_cover_property(g, neighborhood_cover(g, pi, r), r));
    }
}

TEST_CASE("decomposition tree on the named examples") {
    LabeledGraph empty(0);
    auto t0 = build_decomposition_tree(empty, VertexOrdering::identity(0), 1, 1);
    CHECK(t0.size() == 0);
    CHECK(t0.root == -1);

    LabeledGraph one(1);
    auto t1 = build_decomposition_tree(one, VertexOrdering::identity(1), 1, 1);
    CHECK(t1.size() == 1);
    CHECK(t1.depth() == 1);

    auto star = LabeledGraph::from_edges(5, {{0,1},{0,2},{0,3},{0,4}});
    auto pi = VertexOrdering::identity(5);
    auto ts = build_decomposition_tree(star, pi, 1, 2);
    CHECK(ts.nodes[ts.root].beta == 0);
    CHECK(ts.depth() == 2);
    for (int c : ts.nodes[ts.root].children) CHECK(ts.nodes[c].bag.size() == 1);
    CHECK(check_tree_size_bound(ts, star, pi));
    CHECK(check_tree_cover_property(ts, star));
}

TEST_CASE("budget exhaustion is a clean error") {
    auto p8 = gen_path(8);
    auto pi = VertexOrdering::identity(8);
    CHECK_THROWS_AS(build_decomposition_tree(p8, pi, 1, 1), BudgetError);
}

TEST_CASE("tree invariants on random graphs") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 12; ++t) {
        int n = 3 + static_cast<int>(rng() % 14);
        LabeledGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        auto pi = heuristic_ordering(g, 2);
        int r = 1 + static_cast<int>(rng() % 2);
        DecompositionOptions opts;
        opts.multi_radius = t % 2 == 0;
        auto tree = build_decomposition_tree(g, pi, r, n + 2, opts);
        CHECK(tree.depth() <= n + 2);
        CHECK(check_tree_size_bound(tree, g, pi));
        CHECK(check_tree_cover_property(tree, g));
        // child bags are deduplicated
        for (const auto& node : tree.nodes) {
            std::set<std::vector<int>> bags;
            for (int c : node.children) bags.insert(tree.nodes[c].bag);
            CHECK(bags.size() == node.children.size());
        }
    }
}
