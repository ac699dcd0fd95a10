#ifndef FOCOUNT_DECOMPOSITION_HPP
#define FOCOUNT_DECOMPOSITION_HPP

#include <set>

#include "focount/bigint.hpp"
#include "focount/sparsity.hpp"

namespace focount {

namespace detail {

// Eccentricity-minimizing vertex of the largest component; ties by id.
inline int bfs_center(const LabeledGraph& g, const std::vector<int>& bag) {
    auto sub = induced_subgraph(g, bag);
    auto comps = connected_components(sub.graph);
    const std::vector<int>* largest = &comps[0];
    for (const auto& c : comps)
        if (c.size() > largest->size()) largest = &c;
    int best = -1, best_ecc = -1;
    auto dist = all_pairs_distances(sub.graph);
    for (int v : *largest) {
        int ecc = 0;
        for (int u : *largest) ecc = std::max(ecc, dist[v][u]);
        if (best < 0 || ecc < best_ecc ||
            (ecc == best_ecc && sub.orig_id[v] < sub.orig_id[best])) {
            best = v;
            best_ecc = ecc;
        }
    }
    return sub.orig_id[best];
}

// Largest child cluster after removing s from the bag; used to score moves.
inline size_t move_score(const LabeledGraph& g, const VertexOrdering& pi,
                         const std::vector<int>& bag, int s, int radius) {
    std::vector<int> rest;
    for (int v : bag)
        if (v != s) rest.push_back(v);
    if (rest.empty()) return 0;
    auto sub = induced_subgraph(g, rest);
    std::vector<int> sub_perm;
    for (int v : pi.perm) {
        auto it = std::lower_bound(rest.begin(), rest.end(), v);
        if (it != rest.end() && *it == v)
            sub_perm.push_back(static_cast<int>(it - rest.begin()));
    }
    auto sub_pi = VertexOrdering::from_perm(sub_perm);
    size_t worst = 0;
    std::vector<int> dist;
    for (int w = 0; w < sub.graph.n(); ++w) {
        restricted_bfs(sub.graph, sub_pi, w, radius, dist);
        size_t sz = 0;
        for (int u = 0; u < sub.graph.n(); ++u)
            if (dist[u] >= 0) ++sz;
        worst = std::max(worst, sz);
    }
    return worst;
}

}  // namespace detail

// A vertex whose removal makes every cluster of the remainder small: the
// pi-minimum of the bag, or a BFS center when that scores better.
inline int splitter_move_in_bag(const LabeledGraph& g, const VertexOrdering& pi,
                                const std::vector<int>& bag, int r) {
    if (bag.empty()) throw InputError("splitter move on empty graph");
    if (bag.size() == 1) return bag[0];
    int pi_min = bag[0];
    for (int v : bag)
        if (pi.pos[v] < pi.pos[pi_min]) pi_min = v;
    int center = detail::bfs_center(g, bag);
    if (center == pi_min) return pi_min;
    size_t s1 = detail::move_score(g, pi, bag, pi_min, 2 * r);
    size_t s2 = detail::move_score(g, pi, bag, center, 2 * r);
    return s2 < s1 ? center : pi_min;
}

inline int splitter_move(const LabeledGraph& g, int r) {
    if (g.n() == 0) throw InputError("splitter move on empty graph");
    auto pi = heuristic_ordering(g, std::max(1, 2 * r));
    std::vector<int> bag(g.n());
    std::iota(bag.begin(), bag.end(), 0);
    return splitter_move_in_bag(g, pi, bag, r);
}

struct NeighborhoodCover {
    std::vector<std::vector<int>> clusters;  // deduplicated X_{2r} sets
    int max_degree = 0;                      // max #clusters containing a vertex
};

// X_r family: clusters X_{2r}[G,pi,v]; every radius-r ball fits in one.
inline NeighborhoodCover neighborhood_cover(const LabeledGraph& g,
                                            const VertexOrdering& pi, int r) {
    check_ordering(g, pi);
    std::set<std::vector<int>> dedup;
    std::vector<int> dist;
    for (int v = 0; v < g.n(); ++v) {
        restricted_bfs(g, pi, v, 2 * r, dist);
        std::vector<int> cluster;
        for (int u = 0; u < g.n(); ++u)
            if (dist[u] >= 0) cluster.push_back(u);
        dedup.insert(std::move(cluster));
    }
    NeighborhoodCover nc;
    nc.clusters.assign(dedup.begin(), dedup.end());
    std::vector<int> deg(g.n(), 0);
    for (const auto& c : nc.clusters)
        for (int v : c) ++deg[v];
    for (int v = 0; v < g.n(); ++v) nc.max_degree = std::max(nc.max_degree, deg[v]);
    return nc;
}

inline bool check_cover_property(const LabeledGraph& g, const NeighborhoodCover& nc, int r) {
    for (int v = 0; v < g.n(); ++v) {
        auto ball = closed_neighborhood(g, v, r);
        bool found = false;
        for (const auto& c : nc.clusters)
            if (std::includes(c.begin(), c.end(), ball.begin(), ball.end())) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

// Radius-r decomposition tree. Each non-root node's bag is a cluster
// X_R[parent-bag minus move, pi, center] for some even radius R <= 2r; the
// radius-2r clusters alone give the ball-cover property, smaller radii are
// kept so that disjoint cover selections exist for the dynamic program.
// Nodes are interned by bag: a cluster that recurs as a child of many bags
// is stored (and later evaluated) once, so the structure is a rooted dag
// whose unfolding is the recursion tree.
struct DecompositionTree {
    struct Node {
        std::vector<int> bag;  // sorted original vertex ids
        int beta = -1;         // splitter move for this bag
        int height = 1;        // longest chain from this node downward
        std::vector<int> children;
    };
    std::vector<Node> nodes;
    int root = -1;  // -1 for the empty tree
    int r = 0;
    int ell = 0;

    int depth() const { return root < 0 ? 0 : nodes[root].height; }
    size_t size() const { return nodes.size(); }
};

struct DecompositionOptions {
    bool multi_radius = true;  // even radii 2..2r; else only 2r
    size_t node_cap = 500'000;
};

inline DecompositionTree build_decomposition_tree(const LabeledGraph& g,
                                                  const VertexOrdering& pi, int r,
                                                  int ell,
                                                  DecompositionOptions opts = {}) {
    check_ordering(g, pi);
    if (r < 1) throw InputError("radius must be >= 1");
    if (ell < 1) throw InputError("round budget must be >= 1");
    DecompositionTree t;
    t.r = r;
    t.ell = ell;
    if (g.n() == 0) return t;

    std::vector<int> radii;
    if (opts.multi_radius)
        for (int rad = 2; rad <= 2 * r; rad += 2) radii.push_back(rad);
    else
        radii.push_back(2 * r);

    std::map<std::vector<int>, int> interned;
    std::function<int(const std::vector<int>&)> build =
        [&](const std::vector<int>& bag) -> int {
        auto found = interned.find(bag);
        if (found != interned.end()) return found->second;
        if (t.nodes.size() >= opts.node_cap)
            throw ScaleError("decomposition tree exceeded node cap");
        int s = splitter_move_in_bag(g, pi, bag, r);
        int id = static_cast<int>(t.nodes.size());
        t.nodes.push_back({});
        t.nodes[id].bag = bag;
        t.nodes[id].beta = s;
        interned.emplace(bag, id);
        if (bag.size() == 1) return id;

        std::vector<int> rest;
        for (int v : bag)
            if (v != s) rest.push_back(v);
        auto sub = induced_subgraph(g, rest);
        std::vector<int> sub_perm;
        for (int v : pi.perm) {
            auto it = std::lower_bound(rest.begin(), rest.end(), v);
            if (it != rest.end() && *it == v)
                sub_perm.push_back(static_cast<int>(it - rest.begin()));
        }
        auto sub_pi = VertexOrdering::from_perm(sub_perm);
        std::set<std::vector<int>> child_bags;
        std::vector<int> dist;
        for (int w = 0; w < sub.graph.n(); ++w) {
            restricted_bfs(sub.graph, sub_pi, w, 2 * r, dist);
            for (int rad : radii) {
                std::vector<int> cluster;
                for (int u = 0; u < sub.graph.n(); ++u)
                    if (dist[u] >= 0 && dist[u] <= rad) cluster.push_back(sub.orig_id[u]);
                child_bags.insert(std::move(cluster));
            }
        }
        int height = 1;
        for (const auto& cb : child_bags) {
            int cid = build(cb);
            t.nodes[id].children.push_back(cid);
            height = std::max(height, t.nodes[cid].height + 1);
        }
        t.nodes[id].height = height;
        return id;
    };

    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 0);
    t.root = build(all);
    if (t.depth() > ell) {
        // walk down a maximal chain to name the sub-instance that overran
        int cur = t.root, steps = ell;
        while (steps-- > 0) {
            int next = -1;
            for (int c : t.nodes[cur].children)
                if (next < 0 || t.nodes[c].height > t.nodes[next].height) next = c;
            if (next < 0) break;
            cur = next;
        }
        throw BudgetError("not winnable in " + std::to_string(ell) +
                          " rounds with this strategy: sub-instance of " +
                          std::to_string(t.nodes[cur].bag.size()) +
                          " vertices still unresolved; raise the round budget");
    }
    return t;
}

// Asserted bound: node count <= wcol_{2r}(G,pi)^ell * n.
inline bool check_tree_size_bound(const DecompositionTree& t, const LabeledGraph& g,
                                  const VertexOrdering& pi) {
    if (t.root < 0) return t.nodes.empty();
    BigInt bound = BigInt::pow(BigInt(wcol_of_ordering(g, pi, 2 * t.r)),
                               static_cast<unsigned>(t.ell)) *
                   BigInt(g.n());
    return BigInt(static_cast<long long>(t.size())) <= bound;
}

// Ball cover property: for every node t and u in bag(t) minus beta(t), some
// child contains the radius-r ball of u inside bag(t) minus beta(t).
inline bool check_tree_cover_property(const DecompositionTree& t, const LabeledGraph& g) {
    for (const auto& node : t.nodes) {
        if (node.bag.size() <= 1) continue;
        std::vector<int> rest;
        for (int v : node.bag)
            if (v != node.beta) rest.push_back(v);
        auto sub = induced_subgraph(g, rest);
        std::vector<int> back(g.n(), -1);
        for (int i = 0; i < sub.graph.n(); ++i) back[sub.orig_id[i]] = i;
        for (int u : rest) {
            auto ball_local = closed_neighborhood(sub.graph, back[u], t.r);
            std::vector<int> ball;
            for (int x : ball_local) ball.push_back(sub.orig_id[x]);
            std::sort(ball.begin(), ball.end());
            bool found = false;
            for (int cid : node.children) {
                const auto& cb = t.nodes[cid].bag;
                if (std::includes(cb.begin(), cb.end(), ball.begin(), ball.end())) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

}  // namespace focount

#endif
