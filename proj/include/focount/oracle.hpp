#ifndef FOCOUNT_ORACLE_HPP
#define FOCOUNT_ORACLE_HPP

#include "focount/formula.hpp"

namespace focount {

// Brute-force references. These evaluate the AST directly and share no code
// with the clause transforms, so a normalization bug cannot mask itself.

// |{ v : G |= phi(v, u-bar) }| by direct scan over y.
inline BigInt oracle_count(const LabeledGraph& g, const Formula& phi,
                           const std::vector<int>& xbar) {
    std::vector<int> assign(xbar.size() + 1);
    for (size_t i = 0; i < xbar.size(); ++i) assign[i + 1] = xbar[i];
    long long count = 0;
    for (int v = 0; v < g.n(); ++v) {
        assign[kVarY] = v;
        if (evaluate_matrix(g, phi, assign)) ++count;
    }
    return BigInt(count);
}

struct OracleMax {
    BigInt value;
    std::vector<int> witness;
};

// Exhaustive max over all tuples; lexicographically smallest witness on ties.
inline OracleMax oracle_max(const LabeledGraph& g, const CountingSentence& s,
                            long long budget = 20'000'000) {
    if (g.n() == 0) throw InputError("empty graph has no witness tuple");
    double tuples = 1;
    for (int i = 0; i < s.k; ++i) tuples *= g.n();
    if (tuples * g.n() > static_cast<double>(budget))
        throw ScaleError("oracle_max budget exceeded");
    std::vector<int> tuple(s.k, 0);
    OracleMax best;
    bool first = true;
    while (true) {
        BigInt c = oracle_count(g, s.matrix, tuple);
        if (first || c > best.value) {
            best.value = c;
            best.witness = tuple;
            first = false;
        }
        int i = s.k - 1;
        while (i >= 0 && tuple[i] == g.n() - 1) tuple[i--] = 0;
        if (i < 0) break;
        ++tuple[i];
    }
    return best;
}

// Distance-constraint pattern over unordered pairs of [k].
// Entry values: 1..r mean dist <= value; kInfinity means dist >= r+1;
// kStar means unconstrained.
struct SubRelation {
    static constexpr int kInfinity = -1;
    static constexpr int kStar = -2;
    int k = 0;
    int r = 0;
    std::vector<std::vector<int>> entry;  // entry[i][j] for i < j

    static SubRelation all_of(int k, int r, int value) {
        SubRelation d;
        d.k = k;
        d.r = r;
        d.entry.assign(k, std::vector<int>(k, value));
        return d;
    }
    int get(int i, int j) const { return entry[std::min(i, j)][std::max(i, j)]; }
    void set(int i, int j, int v) { entry[std::min(i, j)][std::max(i, j)] = v; }
};

// Number of injective h : [k] -> V meeting all distance constraints.
inline BigInt oracle_subrelation_count(const LabeledGraph& g, const SubRelation& d,
                                       long long budget = 50'000'000) {
    double tuples = 1;
    for (int i = 0; i < d.k; ++i) tuples *= g.n();
    if (tuples > static_cast<double>(budget))
        throw ScaleError("oracle_subrelation_count budget exceeded");
    auto dist = all_pairs_distances(g);
    std::vector<int> h(d.k, -1);
    long long count = 0;
    std::function<void(int)> rec = [&](int i) {
        if (i == d.k) {
            ++count;
            return;
        }
        for (int v = 0; v < g.n(); ++v) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                if (h[j] == v) ok = false;
                else {
                    int c = d.get(j, i);
                    int dd = dist[h[j]][v];
                    if (c == SubRelation::kStar) continue;
                    if (c == SubRelation::kInfinity)
                        ok = dd < 0 || dd >= d.r + 1;
                    else
                        ok = dd >= 0 && dd <= c;
                }
            }
            if (ok) {
                h[i] = v;
                rec(i + 1);
                h[i] = -1;
            }
        }
    };
    rec(0);
    return BigInt(count);
}

// True iff some <= budget right-side vertices dominate every left vertex.
// left/right are index sets into the bipartite graph h.
inline bool oracle_dominating_selection(const LabeledGraph& h,
                                        const std::vector<int>& left,
                                        const std::vector<int>& right, int budget) {
    if (static_cast<int>(right.size()) > 64)
        throw ScaleError("oracle_dominating_selection limited to 64 right vertices");
    std::vector<uint64_t> covers(right.size(), 0);
    std::vector<int> left_index(h.n(), -1);
    for (size_t i = 0; i < left.size(); ++i) left_index[left[i]] = static_cast<int>(i);
    if (left.size() > 64) throw ScaleError("left side too large");
    for (size_t j = 0; j < right.size(); ++j)
        for (int u : h.neighbors(right[j]))
            if (left_index[u] >= 0) covers[j] |= 1ull << left_index[u];
    uint64_t all = left.size() == 64 ? ~0ull : ((1ull << left.size()) - 1);
    std::function<bool(uint64_t, int)> rec = [&](uint64_t covered, int remaining) -> bool {
        if (covered == all) return true;
        if (remaining == 0) return false;
        // branch on the lowest uncovered left vertex
        int target = __builtin_ctzll(all & ~covered);
        for (size_t j = 0; j < right.size(); ++j) {
            if (!(covers[j] >> target & 1ull)) continue;
            if (rec(covered | covers[j], remaining - 1)) return true;
        }
        return false;
    };
    return rec(0, budget);
}

// Dedicated partial-dominating-set reference: the best number of vertices
// dominated by at most k centers (closed neighborhoods).
struct PdsBrute {
    long long dominated = 0;
    std::vector<int> centers;
};

inline PdsBrute oracle_pds_max(const LabeledGraph& g, int k) {
    if (g.n() == 0) throw InputError("empty graph");
    int kk = std::min(k, g.n());
    PdsBrute best;
    std::vector<int> pick;
    std::vector<char> covered(g.n(), 0);
    std::function<void(int, int)> rec = [&](int from, int room) {
        long long count = std::count(covered.begin(), covered.end(), char(1));
        if (count > best.dominated) {
            best.dominated = count;
            best.centers = pick;
        }
        if (room == 0) return;
        for (int v = from; v < g.n(); ++v) {
            std::vector<int> newly;
            if (!covered[v]) {
                covered[v] = 1;
                newly.push_back(v);
            }
            for (int w : g.neighbors(v))
                if (!covered[w]) {
                    covered[w] = 1;
                    newly.push_back(w);
                }
            pick.push_back(v);
            rec(v + 1, room - 1);
            pick.pop_back();
            for (int w : newly) covered[w] = 0;
        }
    };
    rec(0, kk);
    return best;
}

}  // namespace focount

#endif
