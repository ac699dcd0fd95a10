#include <doctest.h>

#include <random>

#include "focount/graph.hpp"
#include "focount/io.hpp"

using namespace focount;

TEST_CASE("closed neighborhood on the named examples") {
    auto p5 = gen_path(5);
    CHECK(closed_neighborhood(p5, 2, 1) == std::vector<int>{1, 2, 3});
    CHECK(closed_neighborhood(p5, 3, 0) == std::vector<int>{3});
    auto k4 = LabeledGraph::from_edges(4, {{0,1},{0,2},{0,3},{1,2},{1,3},{2,3}});
    CHECK(closed_neighborhood(k4, 0, 1) == std::vector<int>{0, 1, 2, 3});
    CHECK_THROWS_AS(closed_neighborhood(p5, 7, 1), InputError);
}

TEST_CASE("weak reachability on the named examples") {
    auto p5 = gen_path(5);
    auto pi = VertexOrdering::identity(5);
    CHECK(wreach(p5, pi, 4, 2) == std::vector<int>{2, 3, 4});
    // the pi-minimum reaches only itself
    CHECK(wreach(p5, pi, 0, 4) == std::vector<int>{0});
    auto k4 = LabeledGraph::from_edges(4, {{0,1},{0,2},{0,3},{1,2},{1,3},{2,3}});
    CHECK(wreach(k4, VertexOrdering::identity(4), 3, 1) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("cluster examples and duality") {
    auto p5 = gen_path(5);
    auto pi = VertexOrdering::identity(5);
    CHECK(cluster_x(p5, pi, 2, 2) == std::vector<int>{2, 3, 4});
    CHECK(cluster_x(p5, pi, 2, 0) == std::vector<int>{2});
    // star with the center pi-minimum: every leaf weakly 2-reaches the center
    auto star = LabeledGraph::from_edges(6, {{0,1},{0,2},{0,3},{0,4},{0,5}});
    CHECK(cluster_x(star, VertexOrdering::identity(6), 0, 2) ==
          std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("wreach properties on random graphs") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
        int n = 2 + static_cast<int>(rng() % 9);
        LabeledGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto pi = VertexOrdering::from_perm(perm);
        int r = 1 + static_cast<int>(rng() % 3);
        auto wr = wreach_all(g, pi, r);
        auto wr_next = wreach_all(g, pi, r + 1);
        for (int v = 0; v < n; ++v) {
            // self-membership and monotonicity in r
            CHECK(std::binary_search(wr[v].begin(), wr[v].end(), v));
            CHECK(std::includes(wr_next[v].begin(), wr_next[v].end(), wr[v].begin(),
                                wr[v].end()));
            // contained in the distance-r ball
            auto ball = closed_neighborhood(g, v, r);
            CHECK(std::includes(ball.begin(), ball.end(), wr[v].begin(), wr[v].end()));
            // duality with clusters
            for (int u : wr[v]) {
                auto xc = cluster_x(g, pi, u, r);
                CHECK(std::binary_search(xc.begin(), xc.end(), v));
            }
            // single-vertex op agrees with the bulk computation
            CHECK(wreach(g, pi, v, r) == wr[v]);
        }
    }
}

TEST_CASE("induced subgraph") {
    auto p5 = gen_path(5);
    auto sub = induced_subgraph(p5, {1, 2, 3});
    CHECK(sub.graph.n() == 3);
    CHECK(sub.graph.m() == 2);
    CHECK(sub.orig_id == std::vector<int>{1, 2, 3});
    auto k4 = LabeledGraph::from_edges(4, {{0,1},{0,2},{0,3},{1,2},{1,3},{2,3}});
    CHECK(induced_subgraph(k4, {0, 1}).graph.m() == 1);
    CHECK(induced_subgraph(k4, {}).graph.n() == 0);
}

TEST_CASE("graph validation") {
    LabeledGraph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), InputError);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 5), InputError);
    CHECK_THROWS_AS(VertexOrdering::from_perm({0, 0, 1}), InputError);
}
