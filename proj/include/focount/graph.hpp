#ifndef FOCOUNT_GRAPH_HPP
#define FOCOUNT_GRAPH_HPP

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace focount {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ScaleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected vertex-labeled graph over dense ids 0..n-1.
// Neighbor lists are sorted and duplicate-free; no self-loops.
class LabeledGraph {
public:
    LabeledGraph() = default;
    explicit LabeledGraph(int n, int num_labels = 0)
        : n_(n), adj_(n), labels_(num_labels, std::vector<char>(n, 0)) {
        if (n < 0) throw InputError("negative vertex count");
    }

    static LabeledGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                   int num_labels = 0) {
        LabeledGraph g(n, num_labels);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InputError("self-loop rejected: " + std::to_string(u));
        if (adjacent(u, v)) throw InputError("duplicate edge rejected");
        adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
        adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
        ++m_;
    }

    void set_label(int label, int v) {
        if (label < 0 || label >= num_labels()) throw InputError("label index out of range");
        check_vertex(v);
        labels_[label][v] = 1;
    }
    void add_label_class() { labels_.emplace_back(n_, 0); }

    int n() const { return n_; }
    int m() const { return m_; }
    int num_labels() const { return static_cast<int>(labels_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const {
        if (u == v) return false;
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }
    bool has_label(int label, int v) const {
        return label >= 0 && label < num_labels() && labels_[label][v];
    }
    std::vector<int> label_set(int label) const {
        std::vector<int> r;
        for (int v = 0; v < n_; ++v)
            if (labels_[label][v]) r.push_back(v);
        return r;
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> r;
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) r.emplace_back(u, v);
        return r;
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw InputError("vertex id out of range: " + std::to_string(v));
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<char>> labels_;
};

// perm: position -> vertex, pos: vertex -> position. Mutually inverse.
struct VertexOrdering {
    std::vector<int> perm;
    std::vector<int> pos;

    static VertexOrdering identity(int n) {
        VertexOrdering o;
        o.perm.resize(n);
        std::iota(o.perm.begin(), o.perm.end(), 0);
        o.pos = o.perm;
        return o;
    }
    static VertexOrdering from_perm(std::vector<int> perm) {
        VertexOrdering o;
        int n = static_cast<int>(perm.size());
        o.pos.assign(n, -1);
        for (int i = 0; i < n; ++i) {
            int v = perm[i];
            if (v < 0 || v >= n || o.pos[v] != -1)
                throw InputError("not a permutation");
            o.pos[v] = i;
        }
        o.perm = std::move(perm);
        return o;
    }
    int size() const { return static_cast<int>(perm.size()); }
    VertexOrdering reversed() const {
        VertexOrdering o;
        o.perm.assign(perm.rbegin(), perm.rend());
        o.pos.resize(perm.size());
        for (size_t i = 0; i < o.perm.size(); ++i) o.pos[o.perm[i]] = static_cast<int>(i);
        return o;
    }
};

inline void check_ordering(const LabeledGraph& g, const VertexOrdering& pi) {
    if (pi.size() != g.n()) throw InputError("ordering size does not match graph order");
}

// All vertices at distance <= r from v, v included. Sorted.
inline std::vector<int> closed_neighborhood(const LabeledGraph& g, int v, int r) {
    g.check_vertex(v);
    if (r < 0) throw InputError("negative radius");
    std::vector<int> dist(g.n(), -1);
    std::deque<int> queue{v};
    dist[v] = 0;
    std::vector<int> out{v};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist[u] == r) continue;
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                out.push_back(w);
                queue.push_back(w);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// BFS from src restricted to vertices with position >= pos(src); dist[u] filled
// for reached vertices, -1 otherwise. Every path inside this restriction has
// src as its position-minimum, so reached-within-r == "src weakly r-reached".
inline void restricted_bfs(const LabeledGraph& g, const VertexOrdering& pi, int src,
                           int r, std::vector<int>& dist) {
    dist.assign(g.n(), -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist[u] == r) continue;
        for (int w : g.neighbors(u))
            if (dist[w] < 0 && pi.pos[w] >= pi.pos[src]) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
}

// X_r[G,pi,v] = { u | v in WReach_r[G,pi,u] }. Sorted; always contains v.
inline std::vector<int> cluster_x(const LabeledGraph& g, const VertexOrdering& pi,
                                  int v, int r) {
    g.check_vertex(v);
    check_ordering(g, pi);
    if (r < 0) throw InputError("negative radius");
    std::vector<int> dist;
    restricted_bfs(g, pi, v, r, dist);
    std::vector<int> out;
    for (int u = 0; u < g.n(); ++u)
        if (dist[u] >= 0) out.push_back(u);
    return out;
}

// WReach_r[G,pi,v] for every v, computed by one restricted BFS per source.
inline std::vector<std::vector<int>> wreach_all(const LabeledGraph& g,
                                                const VertexOrdering& pi, int r) {
    check_ordering(g, pi);
    if (r < 0) throw InputError("negative radius");
    std::vector<std::vector<int>> wr(g.n());
    std::vector<int> dist;
    for (int w = 0; w < g.n(); ++w) {
        restricted_bfs(g, pi, w, r, dist);
        for (int u = 0; u < g.n(); ++u)
            if (dist[u] >= 0) wr[u].push_back(w);
    }
    for (auto& s : wr) std::sort(s.begin(), s.end());
    return wr;
}

// WReach_r[G,pi,v]: all u <=_pi v reachable from v by a path of length <= r
// whose vertices all sit at positions >= pos(u). Sorted; contains v.
inline std::vector<int> wreach(const LabeledGraph& g, const VertexOrdering& pi,
                               int v, int r) {
    g.check_vertex(v);
    check_ordering(g, pi);
    if (r < 0) throw InputError("negative radius");
    std::vector<int> out;
    std::vector<int> dist;
    for (int u = 0; u < g.n(); ++u) {
        if (pi.pos[u] > pi.pos[v]) continue;
        restricted_bfs(g, pi, u, r, dist);
        if (dist[v] >= 0) out.push_back(u);
    }
    return out;
}

struct InducedSubgraph {
    LabeledGraph graph;
    std::vector<int> orig_id;  // new id -> original id
};

// G[S] with re-indexed dense ids; labels restricted. S need not be sorted.
inline InducedSubgraph induced_subgraph(const LabeledGraph& g, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s) g.check_vertex(v);
    std::vector<int> new_id(g.n(), -1);
    for (size_t i = 0; i < s.size(); ++i) new_id[s[i]] = static_cast<int>(i);
    InducedSubgraph r;
    r.graph = LabeledGraph(static_cast<int>(s.size()), g.num_labels());
    r.orig_id = s;
    for (int u : s)
        for (int v : g.neighbors(u))
            if (u < v && new_id[v] >= 0) r.graph.add_edge(new_id[u], new_id[v]);
    for (int l = 0; l < g.num_labels(); ++l)
        for (int v : s)
            if (g.has_label(l, v)) r.graph.set_label(l, new_id[v]);
    return r;
}

// All-pairs distances by BFS; -1 where unreachable.
inline std::vector<std::vector<int>> all_pairs_distances(const LabeledGraph& g) {
    std::vector<std::vector<int>> d(g.n());
    for (int s = 0; s < g.n(); ++s) {
        auto& dist = d[s];
        dist.assign(g.n(), -1);
        std::deque<int> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u))
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
        }
    }
    return d;
}

inline std::vector<std::vector<int>> connected_components(const LabeledGraph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(comps.size());
        comps.emplace_back();
        std::deque<int> queue{s};
        comp[s] = id;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            comps[id].push_back(u);
            for (int w : g.neighbors(u))
                if (comp[w] < 0) {
                    comp[w] = id;
                    queue.push_back(w);
                }
        }
        std::sort(comps[id].begin(), comps[id].end());
    }
    return comps;
}

}  // namespace focount

#endif
