#ifndef FOCOUNT_EXACT_HPP
#define FOCOUNT_EXACT_HPP

#include <array>
#include <chrono>
#include <unordered_map>

#include "focount/decomposition.hpp"
#include "focount/formula.hpp"

namespace focount {

// ---------------------------------------------------------------------------
// Restricted clause-set weights
// ---------------------------------------------------------------------------

// Sum over v in Z of the weights of clauses whose variables all lie in
// zbar (as a bitmask over x-variables 1..k; y is implicit).
inline BigInt omega_restrict_weight(const LabeledGraph& g, const WeightedClauseSet& omega,
                                    uint32_t zbar_mask, const std::vector<int>& z_set,
                                    const std::vector<int>& alpha) {
    for (int i = 1; i < static_cast<int>(alpha.size()); ++i)
        if ((zbar_mask >> i & 1u) && alpha[i] < 0)
            throw InputError("omega_restrict_weight: variable x" + std::to_string(i) +
                             " in zbar is unassigned");
    BigInt total;
    std::vector<int> assign = alpha;
    for (const auto& wc : omega) {
        uint32_t m = wc.clause.var_mask() & ~1u;  // drop the y bit
        if ((m & ~zbar_mask) != 0) continue;
        for (int v : z_set) {
            assign[kVarY] = v;
            if (wc.clause.eval(g, assign)) total += wc.mu;
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Cover systems
// ---------------------------------------------------------------------------

struct CoverSystem {
    std::vector<std::vector<int>> clusters;  // pairwise disjoint, sorted sets
    std::vector<int> centers;
    int radius = 0;
};

namespace detail {

inline bool sorted_intersects(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return false;
}

inline bool sorted_contains(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

// Pairwise-disjoint equal-radius clusters covering every component of
// G[N[D]]: start from X_2 at the pi-minimum of each N[d], merge clusters that
// intersect or whose covered components touch, doubling the radius, and grow
// the radius further whenever coverage of some N[d] is lost by a merge.
inline CoverSystem build_cover_system(const LabeledGraph& g, const VertexOrdering& pi,
                                      const std::vector<int>& d_set, int cap_k = 8) {
    check_ordering(g, pi);
    if (static_cast<int>(d_set.size()) > cap_k)
        throw ScaleError("cover system limited to |D| <= " + std::to_string(cap_k));
    CoverSystem cs;
    if (d_set.empty()) return cs;

    struct Item {
        int center;
        std::vector<std::vector<int>> hoods;  // the N[d] sets this item covers
    };
    std::vector<Item> items;
    for (int d : d_set) {
        g.check_vertex(d);
        auto hood = closed_neighborhood(g, d, 1);
        int center = hood[0];
        for (int u : hood)
            if (pi.pos[u] < pi.pos[center]) center = u;
        bool merged = false;
        for (auto& it : items)
            if (it.center == center) {
                it.hoods.push_back(hood);
                merged = true;
                break;
            }
        if (!merged) items.push_back({center, {hood}});
    }

    int radius = 2;
    const int radius_cap = std::max(2 * g.n() + 4, 1 << std::min(cap_k * 2 + 2, 24));
    std::vector<int> nd_union;
    for (int d : d_set) {
        auto h = closed_neighborhood(g, d, 1);
        nd_union.insert(nd_union.end(), h.begin(), h.end());
    }
    std::sort(nd_union.begin(), nd_union.end());
    nd_union.erase(std::unique(nd_union.begin(), nd_union.end()), nd_union.end());
    auto covered_components = [&]() { return connected_components(induced_subgraph(g, nd_union).graph); };
    auto comps_local = covered_components();
    std::vector<std::vector<int>> comps;
    {
        auto sub = induced_subgraph(g, nd_union);
        for (auto& c : comps_local) {
            std::vector<int> orig;
            for (int v : c) orig.push_back(sub.orig_id[v]);
            std::sort(orig.begin(), orig.end());
            comps.push_back(std::move(orig));
        }
    }

    while (true) {
        std::vector<std::vector<int>> realized(items.size());
        bool grow = false;
        for (size_t i = 0; i < items.size(); ++i) {
            realized[i] = cluster_x(g, pi, items[i].center, radius);
            for (const auto& hood : items[i].hoods)
                if (!detail::sorted_contains(realized[i], hood)) grow = true;
        }
        if (grow) {
            radius *= 2;
            if (radius > radius_cap) throw ScaleError("cover system radius blow-up");
            continue;
        }
        // merge intersecting pairs
        int mi = -1, mj = -1;
        for (size_t i = 0; i < items.size() && mi < 0; ++i)
            for (size_t j = i + 1; j < items.size(); ++j)
                if (detail::sorted_intersects(realized[i], realized[j])) {
                    mi = static_cast<int>(i);
                    mj = static_cast<int>(j);
                    break;
                }
        // merge clusters whose covered component spans both
        if (mi < 0) {
            for (const auto& comp : comps) {
                int first = -1;
                for (size_t i = 0; i < items.size(); ++i) {
                    if (detail::sorted_intersects(realized[i], comp)) {
                        if (first < 0) first = static_cast<int>(i);
                        else if (!detail::sorted_contains(realized[static_cast<size_t>(first)], comp)) {
                            mi = first;
                            mj = static_cast<int>(i);
                            break;
                        }
                    }
                }
                if (mi >= 0) break;
            }
        }
        if (mi < 0) {
            cs.radius = radius;
            for (auto& it : items) cs.centers.push_back(it.center);
            cs.clusters = std::move(realized);
            return cs;
        }
        Item merged;
        merged.center = pi.pos[items[mi].center] < pi.pos[items[mj].center]
                            ? items[mi].center
                            : items[mj].center;
        merged.hoods = items[mi].hoods;
        merged.hoods.insert(merged.hoods.end(), items[mj].hoods.begin(), items[mj].hoods.end());
        items.erase(items.begin() + mj);
        items.erase(items.begin() + mi);
        items.push_back(std::move(merged));
        radius *= 2;
        if (radius > radius_cap) throw ScaleError("cover system radius blow-up");
    }
}

// ---------------------------------------------------------------------------
// Disjoint Cluster Maximization
// ---------------------------------------------------------------------------

struct DCMInstance {
    std::vector<std::vector<int>> clusters;   // sorted vertex sets
    int num_labels = 0;
    std::vector<std::map<int, BigInt>> weights;  // per cluster: label -> weight
};

struct DCMSolution {
    bool feasible = false;
    BigInt total;
    std::vector<int> chosen;  // per label, cluster index
};

inline std::vector<std::vector<char>> cluster_intersection_graph(
    const std::vector<std::vector<int>>& clusters) {
    int nc = static_cast<int>(clusters.size());
    std::vector<std::vector<char>> meets(nc, std::vector<char>(nc, 0));
    for (int i = 0; i < nc; ++i)
        for (int j = i + 1; j < nc; ++j)
            meets[i][j] = meets[j][i] = detail::sorted_intersects(clusters[i], clusters[j]);
    return meets;
}

// Exact branch-and-bound over the cluster intersection graph: assign labels
// in order, prune with the sum of per-label maxima still reachable.
inline DCMSolution solve_dcm(const DCMInstance& inst,
                             const std::vector<std::vector<char>>* meets_in = nullptr) {
    int nl = inst.num_labels;
    DCMSolution best;
    if (nl == 0) {
        best.feasible = true;
        return best;
    }
    // intersection graph, the first-class structural step
    std::vector<std::vector<char>> own;
    if (!meets_in) own = cluster_intersection_graph(inst.clusters);
    const auto& meets = meets_in ? *meets_in : own;

    int nc = static_cast<int>(inst.clusters.size());
    // per-label candidate lists and optimistic bounds
    std::vector<std::vector<int>> cands(nl);
    std::vector<BigInt> label_max(nl);
    for (int l = 0; l < nl; ++l) {
        bool any = false;
        for (int c = 0; c < nc; ++c) {
            auto it = inst.weights[c].find(l);
            if (it == inst.weights[c].end()) continue;
            cands[l].push_back(c);
            if (!any || it->second > label_max[l]) label_max[l] = it->second;
            any = true;
        }
        if (!any) return best;  // label cannot be served: infeasible
    }
    std::vector<BigInt> suffix_bound(nl + 1);
    for (int l = nl - 1; l >= 0; --l) suffix_bound[l] = suffix_bound[l + 1] + label_max[l];

    std::vector<int> pick(nl, -1);
    std::function<void(int, const BigInt&)> rec = [&](int l, const BigInt& acc) {
        if (l == nl) {
            if (!best.feasible || acc > best.total) {
                best.feasible = true;
                best.total = acc;
                best.chosen = pick;
            }
            return;
        }
        if (best.feasible && acc + suffix_bound[l] <= best.total) return;
        for (int c : cands[l]) {
            bool clash = false;
            for (int j = 0; j < l && !clash; ++j)
                if (pick[j] == c || meets[pick[j]][c]) clash = true;
            if (clash) continue;
            pick[l] = c;
            rec(l + 1, acc + inst.weights[c].at(l));
            pick[l] = -1;
        }
    };
    rec(0, BigInt(0));
    return best;
}

// ---------------------------------------------------------------------------
// The dynamic program over decomposition trees
// ---------------------------------------------------------------------------

// Clause with every literal mentioning y, plus its weight. xmask has bit i
// set when x_i occurs.
struct YClause {
    BigInt mu;
    std::vector<YLit> lits;
    uint32_t xmask = 0;
};
using YClauseSet = std::vector<YClause>;

namespace detail {

// Table keys carry, per deep variable, the full neighborhood mask of its
// assigned vertex; every ancestor reads adjacency straight off the mask, so
// tables do not depend on the root path and can be memoized per (bag, alpha).
struct DpKey {
    uint32_t imask = 0;
    std::array<uint64_t, 4> s{};  // N(w_i) as a vertex bitmask, index i-1
    bool operator==(const DpKey&) const = default;
};
struct DpKeyHash {
    size_t operator()(const DpKey& k) const {
        size_t h = std::hash<uint32_t>()(k.imask);
        for (uint64_t x : k.s) h = h * 1000003u ^ std::hash<uint64_t>()(x);
        return h;
    }
};
struct DpEntry {
    BigInt value;
    std::vector<int> assign;  // per variable 1..k (index i-1): vertex or -1
};
using DpTable = std::unordered_map<DpKey, DpEntry, DpKeyHash>;

struct MemoKey {
    int node;
    std::array<int, 5> alpha;
    bool operator==(const MemoKey&) const = default;
};
struct MemoKeyHash {
    size_t operator()(const MemoKey& k) const {
        size_t h = std::hash<int>()(k.node);
        for (int a : k.alpha) h = h * 1000003u ^ std::hash<int>()(a + 1);
        return h;
    }
};

struct DpContext {
    const LabeledGraph* g;
    const DecompositionTree* tree;
    const YClauseSet* omega;
    const CompleteXClause* xi;
    int k;
    const std::vector<uint64_t>* adj_mask;   // per vertex
    const std::vector<uint64_t>* bag_mask;   // per node
    const std::vector<std::vector<std::vector<char>>>* child_meets;  // per node
    std::unordered_map<MemoKey, DpTable, MemoKeyHash> memo;
};

inline void max_merge(DpTable& table, const DpKey& key, DpEntry entry) {
    auto it = table.find(key);
    if (it == table.end()) {
        table.emplace(key, std::move(entry));
        return;
    }
    if (entry.value > it->second.value ||
        (entry.value == it->second.value && entry.assign < it->second.assign))
        it->second = std::move(entry);
}

// Sum over the listed vertices of the weights of clauses whose variables are
// all assigned (xmask within dom). Counted per clause, then scaled by mu.
inline BigInt base_weight_over(const DpContext& ctx, const std::vector<int>& verts,
                               const std::vector<int>& alpha, uint32_t dom_mask,
                               int skip = -1) {
    BigInt total;
    for (const auto& cl : *ctx.omega) {
        if ((cl.xmask & ~dom_mask) != 0) continue;
        long long count = 0;
        for (int z : verts) {
            if (z == skip) continue;
            bool ok = true;
            for (const auto& lit : cl.lits) {
                switch (lit.kind) {
                    case YLit::EdgeYX: ok = ctx.g->adjacent(z, alpha[lit.xi]); break;
                    case YLit::EqYX: ok = z == alpha[lit.xi]; break;
                    case YLit::LabelY: ok = ctx.g->has_label(lit.label, z); break;
                }
                if (!ok) break;
            }
            if (ok) ++count;
        }
        if (count) total += cl.mu * BigInt(count);
    }
    return total;
}

// Weight of v against clauses over dom plus deep variables; deep adjacency
// is read off the stored neighborhood masks.
inline BigInt weight_of_vertex(const DpContext& ctx, int v, const std::vector<int>& alpha,
                               uint32_t dom_mask, uint32_t imask,
                               const std::array<uint64_t, 4>& s) {
    BigInt total;
    for (const auto& cl : *ctx.omega) {
        if ((cl.xmask & ~(dom_mask | imask)) != 0) continue;
        bool ok = true;
        for (const auto& lit : cl.lits) {
            switch (lit.kind) {
                case YLit::EdgeYX:
                    if (dom_mask >> lit.xi & 1u) ok = ctx.g->adjacent(v, alpha[lit.xi]);
                    else ok = (s[lit.xi - 1] >> v) & 1ull;
                    break;
                case YLit::EqYX:
                    if (dom_mask >> lit.xi & 1u) ok = v == alpha[lit.xi];
                    else ok = false;  // deep vertices live below v, never equal it
                    break;
                case YLit::LabelY: ok = ctx.g->has_label(lit.label, v); break;
            }
            if (!ok) break;
        }
        if (ok) total += cl.mu;
    }
    return total;
}

inline const DpTable& dp_node(DpContext& ctx, int node_id, const std::vector<int>& alpha,
                              uint32_t dom_mask, bool is_root);

inline DpTable dp_node_compute(DpContext& ctx, int node_id, const std::vector<int>& alpha,
                               uint32_t dom_mask, bool is_root) {
    const auto& g = *ctx.g;
    const auto& node = ctx.tree->nodes[node_id];
    const auto& xi = *ctx.xi;
    int v = node.beta;
    DpTable result;

    uint32_t unassigned = 0;
    for (int i = 1; i <= ctx.k; ++i)
        if (alpha[i] < 0) unassigned |= 1u << i;

    // every subset of still-unassigned variables may sit on v
    for (uint32_t a_mask = unassigned;; a_mask = (a_mask - 1) & unassigned) {
        bool ok = true;
        // consistency of the refinement with xi
        if (a_mask != 0) {
            for (int i = 1; i <= ctx.k && ok; ++i) {
                if (!(a_mask >> i & 1u)) continue;
                for (int l = 0; l < xi.num_labels && ok; ++l)
                    if (g.has_label(l, v) != static_cast<bool>(xi.label[xi.block[i - 1]][l]))
                        ok = false;
                for (int j = 1; j <= ctx.k && ok; ++j) {
                    if (j == i) continue;
                    if (a_mask >> j & 1u) {
                        if (j < i) continue;
                        if (!xi.eq(i, j)) ok = false;
                    } else if (dom_mask >> j & 1u) {
                        if (xi.eq(i, j)) ok = alpha[j] == v;
                        else if (xi.adj(i, j) != g.adjacent(v, alpha[j])) ok = false;
                    }
                }
            }
        }
        if (ok) {
            std::vector<int> alpha2 = alpha;
            for (int i = 1; i <= ctx.k; ++i)
                if (a_mask >> i & 1u) alpha2[i] = v;
            uint32_t dom2 = dom_mask | a_mask;
            uint32_t rest = unassigned & ~a_mask;

            std::vector<BigInt> child_base;
            BigInt delta_base;
            bool tables_ready = false;
            std::vector<const DpTable*> child_tables(node.children.size(), nullptr);
            auto ensure_tables = [&]() {
                if (tables_ready) return;
                tables_ready = true;
                child_base.resize(node.children.size());
                for (size_t c = 0; c < node.children.size(); ++c) {
                    child_tables[c] = &dp_node(ctx, node.children[c], alpha2, dom2, false);
                    child_base[c] = base_weight_over(
                        ctx, ctx.tree->nodes[node.children[c]].bag, alpha2, dom2);
                }
                delta_base = base_weight_over(ctx, node.bag, alpha2, dom2, v);
            };

            for (uint32_t i_mask = rest;; i_mask = (i_mask - 1) & rest) {
                if (is_root && i_mask != rest) {
                    if (i_mask == 0) break;
                    continue;
                }
                if (i_mask == 0) {
                    BigInt value = base_weight_over(ctx, node.bag, alpha2, dom2, v);
                    value += weight_of_vertex(ctx, v, alpha2, dom2, 0, {});
                    DpKey key;
                    key.imask = a_mask;
                    for (int i = 1; i <= ctx.k; ++i)
                        if (a_mask >> i & 1u) key.s[i - 1] = (*ctx.adj_mask)[v];
                    DpEntry entry;
                    entry.value = std::move(value);
                    entry.assign.assign(ctx.k, -1);
                    for (int i = 1; i <= ctx.k; ++i)
                        if (a_mask >> i & 1u) entry.assign[i - 1] = v;
                    max_merge(result, key, std::move(entry));
                    break;  // i_mask == 0 is the last subset
                }

                if (node.children.empty()) continue;  // nothing below to host these
                ensure_tables();

                // enumerate set partitions of i_mask
                std::vector<int> ivars;
                for (int i = 1; i <= ctx.k; ++i)
                    if (i_mask >> i & 1u) ivars.push_back(i);
                std::vector<std::vector<uint32_t>> partitions;
                std::vector<uint32_t> parts;
                std::function<void(size_t)> gen_parts = [&](size_t idx) {
                    if (idx == ivars.size()) {
                        partitions.push_back(parts);
                        return;
                    }
                    for (size_t q = 0; q < parts.size(); ++q) {
                        parts[q] |= 1u << ivars[idx];
                        gen_parts(idx + 1);
                        parts[q] &= ~(1u << ivars[idx]);
                    }
                    parts.push_back(1u << ivars[idx]);
                    gen_parts(idx + 1);
                    parts.pop_back();
                };
                gen_parts(0);

                uint64_t rest_mask = (*ctx.bag_mask)[node_id] & ~(1ull << v);

                for (const auto& partition : partitions) {
                    // cross-part pairs must be unequal and non-adjacent per xi
                    bool pok = true;
                    for (size_t p1 = 0; p1 < partition.size() && pok; ++p1)
                        for (size_t p2 = p1 + 1; p2 < partition.size() && pok; ++p2)
                            for (int i = 1; i <= ctx.k && pok; ++i) {
                                if (!(partition[p1] >> i & 1u)) continue;
                                for (int j = 1; j <= ctx.k && pok; ++j) {
                                    if (!(partition[p2] >> j & 1u)) continue;
                                    if (xi.eq(i, j) || xi.adj(i, j)) pok = false;
                                }
                            }
                    if (!pok) continue;

                    // candidate entries per part, grouped by profile; an entry
                    // qualifies for child c only if each deep neighborhood
                    // stays inside c's bag (plus the path upward)
                    using ProfileMap =
                        std::map<std::array<uint64_t, 4>, std::map<int, const DpEntry*>>;
                    std::vector<ProfileMap> cands(partition.size());
                    bool any_empty = false;
                    for (size_t p = 0; p < partition.size() && !any_empty; ++p) {
                        for (size_t c = 0; c < node.children.size(); ++c) {
                            uint64_t outside =
                                rest_mask & ~(*ctx.bag_mask)[node.children[c]];
                            for (const auto& [key, entry] : *child_tables[c]) {
                                if (key.imask != partition[p]) continue;
                                bool contained = true;
                                for (int i = 1; i <= ctx.k && contained; ++i)
                                    if ((partition[p] >> i & 1u) &&
                                        (key.s[i - 1] & outside))
                                        contained = false;
                                if (!contained) continue;
                                auto& slot = cands[p][key.s];
                                auto it = slot.find(static_cast<int>(c));
                                if (it == slot.end() ||
                                    entry.value > it->second->value ||
                                    (entry.value == it->second->value &&
                                     entry.assign < it->second->assign))
                                    slot[static_cast<int>(c)] = &entry;
                            }
                        }
                        if (cands[p].empty()) any_empty = true;
                    }
                    if (any_empty) continue;

                    // product over per-part profiles; each combo is one
                    // disjoint-cluster maximization over the children
                    std::vector<ProfileMap::const_iterator> iters;
                    for (auto& pc : cands) iters.push_back(pc.begin());
                    DCMInstance inst;
                    inst.num_labels = static_cast<int>(partition.size());
                    for (size_t c = 0; c < node.children.size(); ++c)
                        inst.clusters.push_back(ctx.tree->nodes[node.children[c]].bag);
                    while (true) {
                        inst.weights.assign(node.children.size(), {});
                        for (size_t p = 0; p < partition.size(); ++p)
                            for (const auto& [c, ep] : iters[p]->second)
                                inst.weights[c][static_cast<int>(p)] =
                                    ep->value - child_base[c];
                        DCMSolution sol = solve_dcm(inst, &(*ctx.child_meets)[node_id]);
                        if (sol.feasible) {
                            std::array<uint64_t, 4> s{};
                            std::vector<int> assign(ctx.k, -1);
                            BigInt value = delta_base + sol.total;
                            for (size_t p = 0; p < partition.size(); ++p) {
                                const DpEntry* ep = iters[p]->second.at(sol.chosen[p]);
                                for (int i = 1; i <= ctx.k; ++i)
                                    if (partition[p] >> i & 1u) {
                                        s[i - 1] = iters[p]->first[i - 1];
                                        assign[i - 1] = ep->assign[i - 1];
                                    }
                            }
                            // forget v: xi checks between vars on v and deep vars
                            bool fok = true;
                            for (int i = 1; i <= ctx.k && fok; ++i) {
                                if (!(a_mask >> i & 1u)) continue;
                                for (int j = 1; j <= ctx.k && fok; ++j) {
                                    if (!(i_mask >> j & 1u)) continue;
                                    if (xi.eq(i, j)) fok = false;
                                    else if (xi.adj(i, j) !=
                                             static_cast<bool>(s[j - 1] >> v & 1ull))
                                        fok = false;
                                }
                            }
                            if (fok) {
                                value += weight_of_vertex(ctx, v, alpha2, dom2, i_mask, s);
                                DpKey key;
                                key.imask = a_mask | i_mask;
                                key.s = s;
                                for (int i = 1; i <= ctx.k; ++i)
                                    if (a_mask >> i & 1u) key.s[i - 1] = (*ctx.adj_mask)[v];
                                DpEntry entry;
                                entry.value = std::move(value);
                                entry.assign = std::move(assign);
                                for (int i = 1; i <= ctx.k; ++i)
                                    if (a_mask >> i & 1u) entry.assign[i - 1] = v;
                                max_merge(result, key, std::move(entry));
                            }
                        }
                        // advance the profile product
                        size_t p = 0;
                        while (p < iters.size()) {
                            ++iters[p];
                            if (iters[p] != cands[p].end()) break;
                            iters[p] = cands[p].begin();
                            ++p;
                        }
                        if (p == iters.size()) break;
                    }
                }
                if (i_mask == 0) break;
            }
        }
        if (a_mask == 0) break;
    }
    return result;
}

inline const DpTable& dp_node(DpContext& ctx, int node_id, const std::vector<int>& alpha,
                              uint32_t dom_mask, bool is_root) {
    MemoKey key;
    key.node = node_id;
    key.alpha.fill(-1);
    for (int i = 1; i <= ctx.k; ++i) key.alpha[i] = alpha[i];
    auto it = ctx.memo.find(key);
    if (it != ctx.memo.end()) return it->second;
    DpTable table = dp_node_compute(ctx, node_id, alpha, dom_mask, is_root);
    return ctx.memo.emplace(std::move(key), std::move(table)).first->second;
}

}  // namespace detail

struct DPResult {
    bool feasible = false;
    BigInt value;
    std::vector<int> witness;  // per variable 1..k
};

// Precomputed masks and child intersection graphs, shared across the xi runs.
struct DecompositionIndex {
    std::vector<uint64_t> adj_mask;
    std::vector<uint64_t> bag_mask;
    std::vector<std::vector<std::vector<char>>> child_meets;

    DecompositionIndex(const LabeledGraph& g, const DecompositionTree& tree) {
        adj_mask.assign(g.n(), 0);
        for (int v = 0; v < g.n(); ++v)
            for (int w : g.neighbors(v)) adj_mask[v] |= 1ull << w;
        bag_mask.resize(tree.nodes.size());
        child_meets.resize(tree.nodes.size());
        for (size_t i = 0; i < tree.nodes.size(); ++i) {
            const auto& node = tree.nodes[i];
            uint64_t m = 0;
            for (int u : node.bag) m |= 1ull << u;
            bag_mask[i] = m;
            std::vector<std::vector<int>> bags;
            for (int c : node.children) bags.push_back(tree.nodes[c].bag);
            child_meets[i] = cluster_intersection_graph(bags);
        }
    }
};

// Max over tuples consistent with xi of the weighted fulfilled-vertex count.
inline DPResult run_dp(const LabeledGraph& g, const DecompositionTree& tree,
                       const YClauseSet& omega_xi, const CompleteXClause& xi,
                       const DecompositionIndex* index = nullptr) {
    DPResult res;
    if (tree.root < 0) return res;
    if (g.n() > 62) throw ScaleError("exact engine limited to 62 vertices");
    std::optional<DecompositionIndex> own;
    if (!index) own.emplace(g, tree);
    const DecompositionIndex& idx = index ? *index : *own;
    detail::DpContext ctx;
    ctx.g = &g;
    ctx.tree = &tree;
    ctx.omega = &omega_xi;
    ctx.xi = &xi;
    ctx.k = xi.k;
    if (ctx.k > 4) throw ScaleError("dynamic program limited to k <= 4");
    ctx.adj_mask = &idx.adj_mask;
    ctx.bag_mask = &idx.bag_mask;
    ctx.child_meets = &idx.child_meets;
    std::vector<int> alpha(ctx.k + 1, -1);
    auto table = detail::dp_node_compute(ctx, tree.root, alpha, 0, true);
    uint32_t full = 0;
    for (int i = 1; i <= ctx.k; ++i) full |= 1u << i;
    for (const auto& [key, entry] : table) {
        if (key.imask != full) continue;
        if (!res.feasible || entry.value > res.value ||
            (entry.value == res.value && entry.assign < res.witness)) {
            res.feasible = true;
            res.value = entry.value;
            res.witness = entry.assign;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Exact optimizer
// ---------------------------------------------------------------------------

struct EvalResult {
    BigInt value;
    std::vector<int> witness;
    std::string mode;  // "exact" or "approx"
    BigInt delta;      // additive error bound; zero in exact mode
    enum class Decision { Yes, No, Unknown } decision = Decision::Unknown;
    int wcol1 = 0;
    int wcol2 = 0;
    size_t tree_nodes = 0;
    int tree_depth = 0;
    std::vector<std::pair<std::string, double>> stage_seconds;
};

struct ExactOptions {
    int cap_k = 3;
    int rounds = -1;  // -1: n + 2, which a one-vertex-per-round shrink never exhausts
    int radius = -1;  // -1: 2^k
    bool multi_radius = true;
    std::optional<VertexOrdering> ordering;  // test hook
};

inline EvalResult maximize_exact(const LabeledGraph& g, const CountingSentence& s,
                                 const ExactOptions& opts = {}) {
    if (g.n() == 0) throw InputError("empty graph has no witness tuple");
    if (s.k < 1) throw InputError("sentence needs at least one existential variable");
    if (s.k > opts.cap_k)
        throw ScaleError("exact engine limited to k <= " + std::to_string(opts.cap_k));
    if (max_var_index(s.matrix) > s.k) throw InputError("matrix mentions an unbound variable");
    if (max_label_index(s.matrix) >= g.num_labels())
        throw InputError("matrix mentions a label the graph does not carry");

    auto omega = to_positive_clauses(s.matrix);
    std::vector<std::pair<BigInt, SplitClause>> split;
    for (const auto& wc : omega) split.emplace_back(wc.mu, split_clause(wc.clause));

    int num_labels = max_label_index(s.matrix) + 1;
    auto xis = complete_x_clauses(s.k, num_labels, std::max(opts.cap_k, 4));

    int radius = opts.radius > 0 ? opts.radius : (1 << s.k);
    int rounds = opts.rounds > 0 ? opts.rounds : g.n() + 2;
    auto stamp = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, double>> stages;
    auto mark = [&](const char* name) {
        auto now = std::chrono::steady_clock::now();
        stages.emplace_back(name, std::chrono::duration<double>(now - stamp).count());
        stamp = now;
    };
    VertexOrdering pi = opts.ordering ? *opts.ordering : heuristic_ordering(g, 2 * radius);
    mark("ordering");
    DecompositionOptions dopts;
    dopts.multi_radius = opts.multi_radius && s.k >= 2;
    auto tree = build_decomposition_tree(g, pi, radius, rounds, dopts);
    DecompositionIndex index(g, tree);
    mark("decomposition");

    EvalResult res;
    res.mode = "exact";
    res.delta = BigInt(0);
    res.wcol1 = wcol_of_ordering(g, pi, 1);
    res.wcol2 = wcol_of_ordering(g, pi, 2);
    res.tree_nodes = tree.size();
    res.tree_depth = tree.depth();

    bool have = false;
    for (const auto& xi : xis) {
        YClauseSet omega_xi;
        std::map<std::vector<YLit>, BigInt> merged;
        for (const auto& [mu, sc] : split)
            if (xi.entails(sc.psi)) merged[sc.ylits] += mu;
        for (auto& [lits, mu] : merged) {
            if (mu.is_zero()) continue;
            YClause yc;
            yc.mu = mu;
            yc.lits = lits;
            for (const auto& lit : lits)
                if (lit.kind != YLit::LabelY) yc.xmask |= 1u << lit.xi;
            omega_xi.push_back(std::move(yc));
        }
        auto dp = run_dp(g, tree, omega_xi, xi, &index);
        if (!dp.feasible) continue;
        if (!have || dp.value > res.value ||
            (dp.value == res.value && dp.witness < res.witness)) {
            have = true;
            res.value = dp.value;
            res.witness = dp.witness;
        }
    }
    if (!have) throw InputError("no tuple satisfies any complete clause (internal)");
    mark("dp");
    res.stage_seconds = std::move(stages);
    res.decision = res.value > s.threshold ? EvalResult::Decision::Yes
                                           : EvalResult::Decision::No;
    return res;
}

}  // namespace focount

#endif
