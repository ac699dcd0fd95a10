#ifndef FOCOUNT_SPARSITY_HPP
#define FOCOUNT_SPARSITY_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "focount/graph.hpp"

namespace focount {

inline int wcol_of_ordering(const LabeledGraph& g, const VertexOrdering& pi, int r) {
    if (g.n() == 0) return 0;
    auto wr = wreach_all(g, pi, r);
    size_t best = 0;
    for (auto& s : wr) best = std::max(best, s.size());
    return static_cast<int>(best);
}

// Strong reachability: u <=_pi v, witnessed by a path from v whose internal
// vertices all sit strictly above v. SReach includes v.
inline std::vector<int> sreach(const LabeledGraph& g, const VertexOrdering& pi,
                               int v, int r) {
    g.check_vertex(v);
    check_ordering(g, pi);
    // dist_high[w]: length of a shortest v -> w path whose vertices after v
    // are all above v.
    std::vector<int> dist_high(g.n(), -1);
    dist_high[v] = 0;
    std::deque<int> queue{v};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist_high[u] == r) continue;
        for (int w : g.neighbors(u))
            if (dist_high[w] < 0 && pi.pos[w] > pi.pos[v]) {
                dist_high[w] = dist_high[u] + 1;
                queue.push_back(w);
            }
    }
    std::vector<int> out{v};
    for (int u = 0; u < g.n(); ++u) {
        if (u == v || pi.pos[u] > pi.pos[v]) continue;
        bool reach = r >= 1 && g.adjacent(u, v);
        if (!reach)
            for (int w : g.neighbors(u)) {
                if (pi.pos[w] > pi.pos[v] && dist_high[w] >= 0 && dist_high[w] + 1 <= r) {
                    reach = true;
                    break;
                }
            }
        if (reach) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline int col_of_ordering(const LabeledGraph& g, const VertexOrdering& pi, int r) {
    if (g.n() == 0) return 0;
    size_t best = 0;
    for (int v = 0; v < g.n(); ++v) best = std::max(best, sreach(g, pi, v, r).size());
    return static_cast<int>(best);
}

// Min-degree ordering built right to left: repeatedly remove a minimum-degree
// vertex (ties by id) and place it at the rightmost free position. Every
// vertex then has at most degeneracy-many neighbors to its left.
inline VertexOrdering degeneracy_ordering(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> deg(n), perm(n);
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
    for (int slot = n - 1; slot >= 0; --slot) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        removed[best] = 1;
        perm[slot] = best;
        for (int w : adj[best])
            if (!removed[w]) --deg[w];
    }
    return VertexOrdering::from_perm(perm);
}

// Degeneracy-style greedy refined by bounded fraternal-augmentation rounds:
// orient edges along the current order, link pairs of left-neighbors, and
// re-run the min-degree ordering on the augmented graph. Keeps whichever
// round's ordering scores the best wcol_r. Deterministic.
inline VertexOrdering heuristic_ordering(const LabeledGraph& g, int r, int rounds = 2) {
    if (r < 1) throw InputError("radius must be >= 1");
    if (g.n() == 0) return VertexOrdering::identity(0);
    std::vector<std::vector<int>> adj(g.n());
    for (int v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v);
    VertexOrdering best = degeneracy_ordering(adj);
    int best_wcol = wcol_of_ordering(g, best, r);
    VertexOrdering cur = best;
    const size_t add_cap = 8 * static_cast<size_t>(g.n()) + 64;
    for (int round = 0; round < rounds; ++round) {
        std::set<std::pair<int, int>> extra;
        size_t added = 0;
        for (int pslot = 0; pslot < g.n() && added < add_cap; ++pslot) {
            int u = cur.perm[pslot];
            std::vector<int> left;
            for (int w : g.neighbors(u))
                if (cur.pos[w] < cur.pos[u]) left.push_back(w);
            for (size_t i = 0; i < left.size() && added < add_cap; ++i)
                for (size_t j = i + 1; j < left.size() && added < add_cap; ++j) {
                    int a = std::min(left[i], left[j]), b = std::max(left[i], left[j]);
                    if (!g.adjacent(a, b) && extra.emplace(a, b).second) ++added;
                }
        }
        std::vector<std::vector<int>> aug = adj;
        for (auto [a, b] : extra) {
            aug[a].push_back(b);
            aug[b].push_back(a);
        }
        cur = degeneracy_ordering(aug);
        int w = wcol_of_ordering(g, cur, r);
        if (w < best_wcol) {
            best_wcol = w;
            best = cur;
        }
    }
    return best;
}

// Exhaustive minimum over all orderings; test oracle only.
inline std::pair<VertexOrdering, int> exact_min_wcol(const LabeledGraph& g, int r,
                                                     int cap = 9) {
    if (g.n() > cap)
        throw ScaleError("exact_min_wcol limited to " + std::to_string(cap) + " vertices");
    if (g.n() == 0) return {VertexOrdering::identity(0), 0};
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    int best = g.n() + 1;
    VertexOrdering best_ord = VertexOrdering::identity(g.n());
    std::vector<int> dist;
    do {
        auto pi = VertexOrdering::from_perm(perm);
        // incremental max with early abort
        std::vector<int> count(g.n(), 0);
        int cur = 0;
        for (int w = 0; w < g.n() && cur < best; ++w) {
            restricted_bfs(g, pi, w, r, dist);
            for (int u = 0; u < g.n(); ++u)
                if (dist[u] >= 0) cur = std::max(cur, ++count[u]);
        }
        if (cur < best) {
            best = cur;
            best_ord = pi;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {best_ord, best};
}

struct TreedepthColoring {
    std::vector<int> colors;
    int num_colors = 0;
    int r = 0;
};

// Greedy coloring along pi avoiding the colors of weakly reachable vertices
// at radius 2^(r-1); unions of r' <= r classes then induce treedepth <= r'.
inline TreedepthColoring treedepth_coloring(const LabeledGraph& g,
                                            const VertexOrdering& pi, int r) {
    check_ordering(g, pi);
    if (r < 1) throw InputError("treedepth coloring needs r >= 1");
    int radius = r <= 1 ? 1 : (1 << (r - 1));
    TreedepthColoring tc;
    tc.r = r;
    tc.colors.assign(g.n(), -1);
    if (g.n() == 0) return tc;
    auto wr = wreach_all(g, pi, radius);
    for (int slot = 0; slot < g.n(); ++slot) {
        int v = pi.perm[slot];
        std::set<int> used;
        for (int u : wr[v])
            if (u != v && tc.colors[u] >= 0) used.insert(tc.colors[u]);
        int c = 0;
        while (used.count(c)) ++c;
        tc.colors[v] = c;
        tc.num_colors = std::max(tc.num_colors, c + 1);
    }
    return tc;
}

// Exact treedepth by "pick a root per component" recursion; test oracle only.
inline int exact_treedepth(const LabeledGraph& g, int cap = 12) {
    if (g.n() > cap)
        throw ScaleError("exact_treedepth limited to " + std::to_string(cap) + " vertices");
    if (g.n() == 0) return 0;
    std::vector<uint32_t> adj_mask(g.n(), 0);
    for (int v = 0; v < g.n(); ++v)
        for (int w : g.neighbors(v)) adj_mask[v] |= 1u << w;
    std::map<uint32_t, int> memo;
    auto components = [&](uint32_t mask) {
        std::vector<uint32_t> comps;
        uint32_t left = mask;
        while (left) {
            int s = __builtin_ctz(left);
            uint32_t comp = 0, frontier = 1u << s;
            while (frontier) {
                comp |= frontier;
                uint32_t next = 0;
                uint32_t f = frontier;
                while (f) {
                    int v = __builtin_ctz(f);
                    f &= f - 1;
                    next |= adj_mask[v] & mask & ~comp;
                }
                frontier = next;
            }
            comps.push_back(comp);
            left &= ~comp;
        }
        return comps;
    };
    std::function<int(uint32_t)> td = [&](uint32_t mask) -> int {
        if (!mask) return 0;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        auto comps = components(mask);
        int result;
        if (comps.size() > 1) {
            result = 0;
            for (uint32_t c : comps) result = std::max(result, td(c));
        } else {
            result = __builtin_popcount(mask);
            uint32_t f = mask;
            while (f) {
                int v = __builtin_ctz(f);
                f &= f - 1;
                result = std::min(result, 1 + td(mask & ~(1u << v)));
                if (result == 1) break;
            }
        }
        memo[mask] = result;
        return result;
    };
    uint32_t all = g.n() == 32 ? ~0u : ((1u << g.n()) - 1);
    return td(all);
}

// Checks the treedepth-coloring contract on every union of up to
// min(r, limit) classes whose size fits the exact checker.
inline bool verify_treedepth_coloring(const LabeledGraph& g, const TreedepthColoring& tc,
                                      int union_limit = 3, int size_cap = 12) {
    int k = std::min(tc.r, union_limit);
    std::vector<std::vector<int>> class_members(tc.num_colors);
    for (int v = 0; v < g.n(); ++v) class_members[tc.colors[v]].push_back(v);
    std::vector<int> pick;
    // enumerate all nonempty class unions of size <= k; oversized unions skipped
    std::function<bool(int, int)> walk = [&](int from, int room) -> bool {
        if (!pick.empty()) {
            std::vector<int> verts;
            for (int c : pick)
                verts.insert(verts.end(), class_members[c].begin(), class_members[c].end());
            if (static_cast<int>(verts.size()) <= size_cap) {
                auto sub = induced_subgraph(g, verts);
                if (exact_treedepth(sub.graph, size_cap) > static_cast<int>(pick.size()))
                    return false;
            }
        }
        if (room == 0 || from == tc.num_colors) return true;
        for (int c = from; c < tc.num_colors; ++c) {
            pick.push_back(c);
            bool ok = walk(c + 1, room - 1);
            pick.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    return walk(0, k);
}

struct SparsityReport {
    int n = 0;
    int r = 0;
    int wcol = 0;
    int col = 0;
    std::vector<std::pair<double, double>> ratios;  // (epsilon, wcol / n^eps)
};

// Measures wcol_r and col_r under the heuristic ordering and compares the
// weak coloring number against n^eps for each requested epsilon.
inline std::vector<SparsityReport> anwd_profile(const std::vector<LabeledGraph>& family,
                                                int r, const std::vector<double>& epsilons) {
    std::vector<SparsityReport> out;
    for (const auto& g : family) {
        SparsityReport rep;
        rep.n = g.n();
        rep.r = r;
        if (g.n() > 0) {
            auto pi = heuristic_ordering(g, r);
            rep.wcol = wcol_of_ordering(g, pi, r);
            rep.col = col_of_ordering(g, pi, r);
        }
        for (double eps : epsilons) {
            double denom = rep.n > 0 ? std::pow(static_cast<double>(rep.n), eps) : 1.0;
            rep.ratios.emplace_back(eps, rep.n > 0 ? rep.wcol / denom : 0.0);
        }
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace focount

#endif
