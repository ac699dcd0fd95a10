#include <doctest.h>

#include <random>

#include "focount/io.hpp"
#include "focount/sparsity.hpp"

using namespace focount;

namespace {
LabeledGraph complete(int n) {
    LabeledGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}
LabeledGraph random_graph(std::mt19937_64& rng, int n, int mod = 3) {
    LabeledGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % mod == 0) g.add_edge(u, v);
    return g;
}
}  // namespace

TEST_CASE("wcol of the natural path ordering") {
    for (int n : {2, 4, 7, 10}) {
        auto g = gen_path(n);
        auto pi = VertexOrdering::identity(n);
        for (int r = 1; r <= 4; ++r)
            CHECK(wcol_of_ordering(g, pi, r) == std::min(r, n - 1) + 1);
    }
    LabeledGraph single(1);
    CHECK(wcol_of_ordering(single, VertexOrdering::identity(1), 5) == 1);
    for (int n : {2, 3, 5})
        CHECK(wcol_of_ordering(complete(n), VertexOrdering::identity(n), 1) == n);
}

TEST_CASE("wcol monotone in r") {
    std::mt19937_64 rng(11);
    auto g = random_graph(rng, 9);
    auto pi = VertexOrdering::identity(9);
    for (int r = 1; r < 5; ++r)
        CHECK(wcol_of_ordering(g, pi, r) <= wcol_of_ordering(g, pi, r + 1));
}

TEST_CASE("col bounded by wcol, sandwich") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 15; ++t) {
        auto g = random_graph(rng, 8);
        std::vector<int> perm(8);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto pi = VertexOrdering::from_perm(perm);
        for (int r = 1; r <= 3; ++r) {
            int c = col_of_ordering(g, pi, r);
            int w = wcol_of_ordering(g, pi, r);
            CHECK(c <= w);
            long long pow = 1;
            for (int i = 0; i < r; ++i) pow *= c;
            CHECK(w <= pow);
        }
    }
}

TEST_CASE("heuristic ordering quality on the named families") {
    auto p10 = gen_path(10);
    auto pi = heuristic_ordering(p10, 2);
    CHECK(wcol_of_ordering(p10, pi, 2) <= 3);
    LabeledGraph edgeless(6);
    CHECK(wcol_of_ordering(edgeless, heuristic_ordering(edgeless, 3), 3) == 1);
    auto k5 = complete(5);
    CHECK(wcol_of_ordering(k5, heuristic_ordering(k5, 1), 1) == 5);
}

TEST_CASE("exact minimum wcol") {
    CHECK(exact_min_wcol(gen_path(5), 2).second == 3);
    CHECK(exact_min_wcol(complete(4), 1).second == 4);
    CHECK(exact_min_wcol(LabeledGraph::from_edges(2, {{0, 1}}), 1).second == 2);
    CHECK_THROWS_AS(exact_min_wcol(gen_path(10), 2), ScaleError);
}

TEST_CASE("exact minimum lower-bounds the heuristic") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 10; ++t) {
        int n = 4 + static_cast<int>(rng() % 5);
        auto g = random_graph(rng, n);
        for (int r = 1; r <= 3; ++r) {
            auto [ord, best] = exact_min_wcol(g, r);
            CHECK(best <= wcol_of_ordering(g, heuristic_ordering(g, r), r));
            CHECK(wcol_of_ordering(g, ord, r) == best);
        }
    }
}

TEST_CASE("exact treedepth oracle") {
    CHECK(exact_treedepth(LabeledGraph(0)) == 0);
    CHECK(exact_treedepth(LabeledGraph(3)) == 1);
    CHECK(exact_treedepth(gen_path(2)) == 2);
    CHECK(exact_treedepth(gen_path(4)) == 3);
    CHECK(exact_treedepth(gen_path(8)) == 4);
    CHECK(exact_treedepth(complete(5)) == 5);
    // star: center + one leaf
    CHECK(exact_treedepth(LabeledGraph::from_edges(5, {{0,1},{0,2},{0,3},{0,4}})) == 2);
}

TEST_CASE("treedepth coloring invariant on the named examples") {
    LabeledGraph edgeless(5);
    auto tc0 = treedepth_coloring(edgeless, VertexOrdering::identity(5), 3);
    CHECK(tc0.num_colors == 1);

    auto p8 = gen_path(8);
    auto pi = VertexOrdering::identity(8);
    auto tc = treedepth_coloring(p8, pi, 2);
    CHECK(tc.num_colors <= wcol_of_ordering(p8, pi, 1) + 1);
    CHECK(verify_treedepth_coloring(p8, tc));

    auto star = LabeledGraph::from_edges(6, {{0,1},{0,2},{0,3},{0,4},{0,5}});
    auto tc2 = treedepth_coloring(star, VertexOrdering::identity(6), 3);
    CHECK(tc2.num_colors <= 3);
    CHECK(verify_treedepth_coloring(star, tc2));
}

TEST_CASE("treedepth coloring invariant on random graphs") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 12; ++t) {
        int n = 5 + static_cast<int>(rng() % 10);
        auto g = random_graph(rng, n, 4);
        auto pi = heuristic_ordering(g, 2);
        for (int r = 1; r <= 3; ++r) {
            auto tc = treedepth_coloring(g, pi, r);
            CHECK(verify_treedepth_coloring(g, tc));
        }
    }
}

TEST_CASE("anwd profile on paths and cliques") {
    std::vector<LabeledGraph> paths;
    for (int n = 10; n <= 64; n *= 2) paths.push_back(gen_path(n));
    auto reports = anwd_profile(paths, 2, {0.5});
    for (const auto& rep : reports) {
        CHECK(rep.wcol == 3);
        CHECK(rep.ratios[0].second < 1.0);
    }
    // the boundary case: 3 / sqrt(9) is exactly one
    auto nine = anwd_profile({gen_path(9)}, 2, {0.5});
    CHECK(nine[0].ratios[0].second <= 1.0);
    std::vector<LabeledGraph> cliques;
    for (int n = 4; n <= 32; n *= 2) cliques.push_back(complete(n));
    auto crep = anwd_profile(cliques, 1, {0.5});
    for (const auto& rep : crep) {
        CHECK(rep.wcol == rep.n);
        CHECK(rep.ratios[0].second >= 1.0);
    }
    auto single = anwd_profile({LabeledGraph(1)}, 3, {0.5});
    CHECK(single[0].wcol == 1);
    CHECK(single[0].ratios[0].second == doctest::Approx(1.0));
}
