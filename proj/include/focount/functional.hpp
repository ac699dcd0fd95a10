#ifndef FOCOUNT_FUNCTIONAL_HPP
#define FOCOUNT_FUNCTIONAL_HPP

#include "focount/sparsity.hpp"

namespace focount {

// Unary-function encoding of weak reachability along an ordering. f_i(u) is
// the i-th weakly 1-reachable vertex from u other than u itself (i.e. the
// i-th left neighbor in pi order); h_i(u) likewise enumerates the weakly
// 2-reachable vertices. A function defaults to u itself beyond the
// enumerated set, so f(u) == u reads as "undefined".
struct FunctionalStructure {
    int n = 0;
    int multiplicity = 1;                // 1 without h's, 2 with them
    std::vector<std::vector<int>> f;     // f[i][u], t = wcol_1 functions
    std::vector<std::vector<int>> h;     // h[i][u], s = wcol_2 functions
    VertexOrdering pi;
    const LabeledGraph* graph = nullptr;

    int num_f() const { return static_cast<int>(f.size()); }
    int num_h() const { return static_cast<int>(h.size()); }
    int num_symbols() const { return num_f() + num_h(); }
    // symbols are indexed 0..t-1 for f's, t..t+s-1 for h's
    int apply(int sym, int u) const {
        return sym < num_f() ? f[sym][u] : h[sym - num_f()][u];
    }
    bool is_pad(int sym, int u) const { return apply(sym, u) == u; }
};

inline FunctionalStructure functional_representation(const LabeledGraph& g,
                                                     const VertexOrdering& pi) {
    check_ordering(g, pi);
    FunctionalStructure fs;
    fs.n = g.n();
    fs.multiplicity = 1;
    fs.pi = pi;
    fs.graph = &g;
    int t = std::max(1, wcol_of_ordering(g, pi, 1));
    fs.f.assign(t, std::vector<int>(g.n()));
    for (int i = 0; i < t; ++i)
        for (int u = 0; u < g.n(); ++u) fs.f[i][u] = u;
    for (int u = 0; u < g.n(); ++u) {
        std::vector<int> left;
        for (int w : g.neighbors(u))
            if (pi.pos[w] < pi.pos[u]) left.push_back(w);
        std::sort(left.begin(), left.end(),
                  [&](int a, int b) { return pi.pos[a] < pi.pos[b]; });
        for (size_t i = 0; i < left.size(); ++i) fs.f[i][u] = left[i];
    }
    return fs;
}

inline FunctionalStructure augmentation(const LabeledGraph& g, const VertexOrdering& pi) {
    FunctionalStructure fs = functional_representation(g, pi);
    fs.multiplicity = 2;
    int s = std::max(1, wcol_of_ordering(g, pi, 2));
    fs.h.assign(s, std::vector<int>(g.n()));
    for (int i = 0; i < s; ++i)
        for (int u = 0; u < g.n(); ++u) fs.h[i][u] = u;
    auto wr2 = wreach_all(g, pi, 2);
    for (int u = 0; u < g.n(); ++u) {
        std::vector<int> reach;
        for (int w : wr2[u])
            if (w != u) reach.push_back(w);
        std::sort(reach.begin(), reach.end(),
                  [&](int a, int b) { return pi.pos[a] < pi.pos[b]; });
        for (size_t i = 0; i < reach.size(); ++i) fs.h[i][u] = reach[i];
    }
    return fs;
}

// The edge set of the underlying graph must be exactly recoverable from the
// f functions: {u,v} is an edge iff some f maps one endpoint to the other.
inline bool check_edge_reconstruction(const FunctionalStructure& fs) {
    const LabeledGraph& g = *fs.graph;
    LabeledGraph rebuilt(g.n());
    for (int i = 0; i < fs.num_f(); ++i)
        for (int u = 0; u < g.n(); ++u) {
            int v = fs.f[i][u];
            if (v != u && !rebuilt.adjacent(u, v)) rebuilt.add_edge(u, v);
        }
    for (int u = 0; u < g.n(); ++u)
        if (rebuilt.neighbors(u) != g.neighbors(u)) return false;
    return true;
}

// For every distinct pair, at most `multiplicity` symbols link them.
inline bool check_multiplicity(const FunctionalStructure& fs) {
    std::map<std::pair<int, int>, int> hits;
    auto tally = [&](const std::vector<std::vector<int>>& fam) {
        for (const auto& fn : fam)
            for (int u = 0; u < fs.n; ++u) {
                int v = fn[u];
                if (v != u) ++hits[{std::min(u, v), std::max(u, v)}];
            }
    };
    tally(fs.f);
    tally(fs.h);
    for (const auto& [pair, c] : hits)
        if (c > fs.multiplicity) return false;
    return true;
}

// Underlying link graph of the structure: all non-pad function images become
// symmetric irreflexive edges.
inline LabeledGraph link_graph(const FunctionalStructure& fs) {
    LabeledGraph lg(fs.n, fs.graph ? fs.graph->num_labels() : 0);
    auto add = [&](const std::vector<std::vector<int>>& fam) {
        for (const auto& fn : fam)
            for (int u = 0; u < fs.n; ++u)
                if (fn[u] != u && !lg.adjacent(u, fn[u])) lg.add_edge(u, fn[u]);
    };
    add(fs.f);
    add(fs.h);
    if (fs.graph)
        for (int l = 0; l < fs.graph->num_labels(); ++l)
            for (int v = 0; v < fs.n; ++v)
                if (fs.graph->has_label(l, v)) lg.set_label(l, v);
    return lg;
}

}  // namespace focount

#endif
