#ifndef FOCOUNT_IO_HPP
#define FOCOUNT_IO_HPP

#include <fstream>
#include <random>
#include <sstream>

#include "focount/graph.hpp"

namespace focount {

// Line-oriented graph format:
//   # comment
//   p <n> <m> <labels>
//   e <u> <v>          0-based, written with u < v
//   l <label> <v>      1-based label index
inline LabeledGraph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int n = 0, m = 0, labels = 0, seen_edges = 0;
    LabeledGraph g;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        auto fail = [&](const std::string& msg) {
            throw InputError("line " + std::to_string(lineno) + ": " + msg);
        };
        if (tag == "p") {
            if (have_header) fail("duplicate header");
            if (!(ls >> n >> m >> labels) || n < 0 || m < 0 || labels < 0)
                fail("malformed header");
            g = LabeledGraph(n, labels);
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) fail("edge before header");
            int u, v;
            if (!(ls >> u >> v)) fail("malformed edge");
            try {
                g.add_edge(u, v);
            } catch (const InputError& e) {
                fail(e.what());
            }
            ++seen_edges;
        } else if (tag == "l") {
            if (!have_header) fail("label before header");
            int l, v;
            if (!(ls >> l >> v)) fail("malformed label");
            if (l < 1 || l > labels) fail("label index out of range");
            g.check_vertex(v);
            g.set_label(l - 1, v);
        } else {
            fail("unknown record '" + tag + "'");
        }
    }
    if (!have_header) throw InputError("missing 'p' header");
    if (seen_edges != m)
        throw InputError("header announces " + std::to_string(m) + " edges, file has " +
                         std::to_string(seen_edges));
    return g;
}

inline void write_graph(std::ostream& out, const LabeledGraph& g) {
    out << "p " << g.n() << " " << g.m() << " " << g.num_labels() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    for (int l = 0; l < g.num_labels(); ++l)
        for (int v : g.label_set(l)) out << "l " << l + 1 << " " << v << "\n";
}

inline LabeledGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file: " + path);
    return read_graph(in);
}

inline void save_graph(const LabeledGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file: " + path);
    write_graph(out, g);
}

// ---------------------------------------------------------------------------
// Generators. Deterministic for a fixed seed; vertex numbering documented per
// kind in the comments.
// ---------------------------------------------------------------------------

// 0 - 1 - ... - (n-1)
inline LabeledGraph gen_path(int n) {
    LabeledGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline LabeledGraph gen_cycle(int n) {
    if (n < 3) throw InputError("cycle needs n >= 3");
    LabeledGraph g = gen_path(n);
    g.add_edge(0, n - 1);
    return g;
}

// row-major w x h grid, vertex (r, c) = r*w + c
inline LabeledGraph gen_grid(int w, int h) {
    if (w < 1 || h < 1) throw InputError("grid needs positive dimensions");
    LabeledGraph g(w * h);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            if (c + 1 < w) g.add_edge(r * w + c, r * w + c + 1);
            if (r + 1 < h) g.add_edge(r * w + c, (r + 1) * w + c);
        }
    return g;
}

// uniform random attachment: vertex v > 0 links to a uniform earlier vertex
inline LabeledGraph gen_random_tree(int n, uint64_t seed) {
    LabeledGraph g(n);
    std::mt19937_64 rng(seed);
    for (int v = 1; v < n; ++v)
        g.add_edge(v, static_cast<int>(rng() % v));
    return g;
}

// random edges subject to a maximum degree d
inline LabeledGraph gen_bounded_degree(int n, int d, uint64_t seed) {
    if (d < 0) throw InputError("degree bound must be >= 0");
    LabeledGraph g(n);
    std::mt19937_64 rng(seed);
    long long attempts = 3LL * n * std::max(1, d);
    while (attempts-- > 0) {
        int u = static_cast<int>(rng() % n);
        int v = static_cast<int>(rng() % n);
        if (u == v || g.adjacent(u, v) || g.degree(u) >= d || g.degree(v) >= d) continue;
        g.add_edge(u, v);
    }
    return g;
}

// complete graph K_m with every edge subdivided exactly r times; principal
// vertices come first, then the subdivision vertices edge by edge
inline LabeledGraph gen_subdivided_clique(int m, int r) {
    if (m < 1 || r < 0) throw InputError("bad subdivided clique parameters");
    int inner = m * (m - 1) / 2 * r;
    LabeledGraph g(m + inner);
    int nxt = m;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int prev = i;
            for (int s = 0; s < r; ++s) {
                g.add_edge(prev, nxt);
                prev = nxt++;
            }
            g.add_edge(prev, j);
        }
    return g;
}

// the input graph plus `count` isolated vertices appended at the end
inline LabeledGraph gen_union_with_isolated(const LabeledGraph& base, int count) {
    if (count < 0) throw InputError("negative isolated-vertex count");
    LabeledGraph g(base.n() + count, base.num_labels());
    for (auto [u, v] : base.edges()) g.add_edge(u, v);
    for (int l = 0; l < base.num_labels(); ++l)
        for (int v : base.label_set(l)) g.set_label(l, v);
    return g;
}

struct GeneratorSpec {
    std::string kind;  // path | cycle | grid | tree | bdrandom | subdivided-clique | union-isolated
    int n = 0;
    int w = 0, h = 0;
    int d = 3;
    int m = 3, r = 1;
    int extra = 0;
    uint64_t seed = 0;
};

inline LabeledGraph generate(const GeneratorSpec& spec) {
    if (spec.kind == "path") return gen_path(spec.n);
    if (spec.kind == "cycle") return gen_cycle(spec.n);
    if (spec.kind == "grid") return gen_grid(spec.w, spec.h);
    if (spec.kind == "tree") return gen_random_tree(spec.n, spec.seed);
    if (spec.kind == "bdrandom") return gen_bounded_degree(spec.n, spec.d, spec.seed);
    if (spec.kind == "subdivided-clique") return gen_subdivided_clique(spec.m, spec.r);
    if (spec.kind == "union-isolated")
        return gen_union_with_isolated(gen_bounded_degree(spec.n, spec.d, spec.seed),
                                       spec.extra);
    throw InputError("unknown generator kind: " + spec.kind);
}

}  // namespace focount

#endif
