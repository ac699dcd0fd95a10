#ifndef FOCOUNT_APPROX_HPP
#define FOCOUNT_APPROX_HPP

#include <chrono>
#include <tuple>

#include "focount/exact.hpp"
#include "focount/functional.hpp"

namespace focount {

// ---------------------------------------------------------------------------
// Decomposed clauses over the functional structure
// ---------------------------------------------------------------------------
// Function symbols are indexed 0..t-1 (f's) then t..t+s-1 (h's); kIdentity
// marks the identity map. A "non-pad match" literal sym(a) ~> b reads
// sym(a) == b together with sym(a) != a, matching the guard convention that
// a pad value means "undefined".

constexpr int kIdentity = -1;

struct TauLit {
    enum Kind { Label, Chain } kind = Label;
    int label = -1;
    // Chain: a(y) == b(c(y)) with every application non-pad
    int a = -1, b = -1, c = -1;
    friend auto operator<=>(const TauLit&, const TauLit&) = default;
};

struct XLit {
    enum Kind { EqXX, LabelX, FnXX } kind = EqXX;
    int p = 0, q = 0;   // variables 1..k; FnXX: sym(x_q) ~> x_p
    int label = -1;
    int sym = kIdentity;
    friend auto operator<=>(const XLit&, const XLit&) = default;
};

struct MixedLit {
    enum Kind { YEqX, FnYX, FnXY } kind = YEqX;
    int xi = 0;
    int sym = kIdentity;  // FnYX: sym(y) ~> x_i;  FnXY: sym(x_i) ~> y
    friend auto operator<=>(const MixedLit&, const MixedLit&) = default;
};

struct DecomposedClause {
    BigInt mu;
    std::vector<TauLit> tau;
    std::vector<XLit> psi;
    std::vector<MixedLit> mixed;

    void canonicalize() {
        std::sort(tau.begin(), tau.end());
        tau.erase(std::unique(tau.begin(), tau.end()), tau.end());
        std::sort(psi.begin(), psi.end());
        psi.erase(std::unique(psi.begin(), psi.end()), psi.end());
        std::sort(mixed.begin(), mixed.end());
        mixed.erase(std::unique(mixed.begin(), mixed.end()), mixed.end());
    }
    std::tuple<const std::vector<TauLit>&, const std::vector<XLit>&,
               const std::vector<MixedLit>&>
    key() const {
        return {tau, psi, mixed};
    }
};

inline bool eval_tau(const FunctionalStructure& fs, const std::vector<TauLit>& tau, int u) {
    for (const auto& t : tau) {
        if (t.kind == TauLit::Label) {
            if (!fs.graph->has_label(t.label, u)) return false;
        } else {
            int av = fs.apply(t.a, u);
            if (av == u) return false;
            int inner = fs.apply(t.c, u);
            if (inner == u) return false;
            int bv = fs.apply(t.b, inner);
            if (bv == inner) return false;
            if (av != bv) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Clause pipeline: relational matrix -> weighted decomposed clauses with at
// most one mixed literal each, over the augmented functional structure.
// Clauses whose mixed part cannot be reduced (they pin y to a function image
// of an x while other mixed literals remain) are dropped; each such clause
// shifts any count by at most |mu| because y has a single candidate value,
// and the sum of those magnitudes is the reported additive error bound.
// ---------------------------------------------------------------------------

struct ClausePipelineResult {
    std::vector<DecomposedClause> clauses;  // each with at most one mixed literal
    BigInt delta;                           // additive error certificate
    FunctionalStructure structure;
};

namespace detail {

inline void merge_clauses(std::vector<DecomposedClause>& cs) {
    std::map<std::tuple<std::vector<TauLit>, std::vector<XLit>, std::vector<MixedLit>>, BigInt>
        pool;
    for (auto& c : cs) {
        c.canonicalize();
        pool[{c.tau, c.psi, c.mixed}] += c.mu;
    }
    cs.clear();
    for (auto& [key, mu] : pool) {
        if (mu.is_zero()) continue;
        DecomposedClause c;
        c.mu = mu;
        std::tie(c.tau, c.psi, c.mixed) = key;
        cs.push_back(std::move(c));
    }
}

}  // namespace detail

inline ClausePipelineResult clause_pipeline(const LabeledGraph& g, const VertexOrdering& pi,
                                            const Formula& phi,
                                            long long clause_cap = 500'000) {
    ClausePipelineResult out;
    out.structure = augmentation(g, pi);
    const FunctionalStructure& fs = out.structure;
    int t = fs.num_f();
    int s = fs.num_h();

    // symbols with at least one non-pad value; others can never satisfy a match
    std::vector<char> live(t + s, 0);
    for (int sym = 0; sym < t + s; ++sym)
        for (int u = 0; u < fs.n && !live[sym]; ++u)
            if (fs.apply(sym, u) != u) live[sym] = 1;

    auto omega1 = to_positive_clauses(phi);

    // expansion: each adjacency atom becomes a choice of one oriented
    // function match; the choices are mutually exclusive, so weights carry over
    std::vector<DecomposedClause> work;
    for (const auto& wc : omega1) {
        std::vector<DecomposedClause> partial(1);
        partial[0].mu = wc.mu;
        for (const Atom& atom : wc.clause.atoms) {
            std::vector<DecomposedClause> next;
            auto push_all = [&](const std::function<void(DecomposedClause&)>& f) {
                for (const auto& p : partial) {
                    DecomposedClause q = p;
                    f(q);
                    next.push_back(std::move(q));
                }
            };
            switch (atom.kind) {
                case AtomKind::Eq:
                    if (atom.a == kVarY)
                        push_all([&](DecomposedClause& q) {
                            q.mixed.push_back({MixedLit::YEqX, atom.b, kIdentity});
                        });
                    else
                        push_all([&](DecomposedClause& q) {
                            q.psi.push_back({XLit::EqXX, atom.a, atom.b, -1, kIdentity});
                        });
                    break;
                case AtomKind::Label:
                    if (atom.a == kVarY)
                        push_all([&](DecomposedClause& q) {
                            q.tau.push_back({TauLit::Label, atom.label, -1, -1, -1});
                        });
                    else
                        push_all([&](DecomposedClause& q) {
                            q.psi.push_back({XLit::LabelX, atom.a, 0, atom.label, kIdentity});
                        });
                    break;
                case AtomKind::Edge: {
                    for (int sym = 0; sym < t; ++sym) {
                        if (!live[sym]) continue;
                        if (atom.a == kVarY) {
                            int xi = atom.b;
                            for (const auto& p : partial) {
                                DecomposedClause q = p;
                                q.mixed.push_back({MixedLit::FnYX, xi, sym});
                                next.push_back(std::move(q));
                                q = p;
                                q.mixed.push_back({MixedLit::FnXY, xi, sym});
                                next.push_back(std::move(q));
                            }
                        } else {
                            for (const auto& p : partial) {
                                DecomposedClause q = p;
                                q.psi.push_back({XLit::FnXX, atom.a, atom.b, -1, sym});
                                next.push_back(std::move(q));
                                q = p;
                                q.psi.push_back({XLit::FnXX, atom.b, atom.a, -1, sym});
                                next.push_back(std::move(q));
                            }
                        }
                    }
                    break;
                }
            }
            partial = std::move(next);
            if (static_cast<long long>(partial.size()) > clause_cap)
                throw ScaleError("clause pipeline exceeded expansion cap");
        }
        for (auto& p : partial) work.push_back(std::move(p));
    }
    detail::merge_clauses(work);

    // reduce every clause to at most one mixed literal
    std::vector<DecomposedClause> done;
    BigInt delta;
    while (!work.empty()) {
        std::vector<DecomposedClause> next;
        for (auto& cl : work) {
            // drop clauses that are syntactically false
            bool dead = false;
            for (const auto& x : cl.psi)
                if (x.kind == XLit::FnXX && x.p == x.q) dead = true;
            if (dead) continue;

            if (cl.mixed.size() <= 1) {
                done.push_back(std::move(cl));
                continue;
            }
            // substitution: y = x_i turns every other mixed literal into psi
            auto eq_it = std::find_if(cl.mixed.begin(), cl.mixed.end(),
                                      [](const MixedLit& m) { return m.kind == MixedLit::YEqX; });
            if (eq_it != cl.mixed.end()) {
                int i = eq_it->xi;
                DecomposedClause q;
                q.mu = cl.mu;
                q.psi = cl.psi;
                q.mixed.push_back({MixedLit::YEqX, i, kIdentity});
                for (const auto& m : cl.mixed) {
                    if (m.kind == MixedLit::YEqX) {
                        if (m.xi != i) q.psi.push_back({XLit::EqXX, std::min(i, m.xi),
                                                        std::max(i, m.xi), -1, kIdentity});
                    } else if (m.kind == MixedLit::FnYX) {
                        q.psi.push_back({XLit::FnXX, m.xi, i, -1, m.sym});
                    } else {  // FnXY: sym(x_j) ~> y = x_i
                        q.psi.push_back({XLit::FnXX, i, m.xi, -1, m.sym});
                    }
                }
                for (const auto& tl : cl.tau) {
                    if (tl.kind == TauLit::Label)
                        q.psi.push_back({XLit::LabelX, i, 0, tl.label, kIdentity});
                    else
                        throw ScaleError("internal: chain literal before substitution");
                }
                next.push_back(std::move(q));
                continue;
            }
            // any remaining x-to-y match blocks the reduction: drop, account
            bool has_fxy = std::any_of(cl.mixed.begin(), cl.mixed.end(),
                                       [](const MixedLit& m) { return m.kind == MixedLit::FnXY; });
            if (has_fxy) {
                delta += cl.mu.abs();
                continue;
            }
            // two y-to-x matches; same symbol forces the targets equal
            const MixedLit& m1 = cl.mixed[0];
            const MixedLit& m2 = cl.mixed[1];
            if (m1.sym == m2.sym) {
                DecomposedClause q = cl;
                q.mixed.erase(q.mixed.begin());
                q.psi.push_back({XLit::EqXX, std::min(m1.xi, m2.xi),
                                 std::max(m1.xi, m2.xi), -1, kIdentity});
                next.push_back(std::move(q));
                continue;
            }
            // distinct f symbols: the lower-indexed image is weakly 2-reachable
            // from the higher one, so route it through an h symbol
            const MixedLit& lo = m1.sym < m2.sym ? m1 : m2;
            const MixedLit& hi = m1.sym < m2.sym ? m2 : m1;
            for (int kk = 0; kk < s; ++kk) {
                if (!live[t + kk]) continue;
                DecomposedClause q;
                q.mu = cl.mu;
                q.tau = cl.tau;
                q.tau.push_back({TauLit::Chain, -1, lo.sym, t + kk, hi.sym});
                q.psi = cl.psi;
                q.psi.push_back({XLit::FnXX, lo.xi, hi.xi, -1, t + kk});
                q.mixed.assign(cl.mixed.begin(), cl.mixed.end());
                q.mixed.erase(std::remove(q.mixed.begin(), q.mixed.end(), lo), q.mixed.end());
                next.push_back(std::move(q));
            }
        }
        detail::merge_clauses(next);
        if (static_cast<long long>(next.size() + done.size()) > clause_cap)
            throw ScaleError("clause pipeline exceeded clause cap");
        work = std::move(next);
    }
    detail::merge_clauses(done);
    out.clauses = std::move(done);
    out.delta = delta;
    return out;
}

// ---------------------------------------------------------------------------
// Complete clauses over the relevant symbols, and per-vertex weights
// ---------------------------------------------------------------------------

// Complete conjunctive clause over the x variables, restricted to the
// symbols and labels that occur in the psi parts: fixes the equality
// partition, every relevant function link between distinct blocks, and every
// relevant label bit. Every tuple satisfies exactly one.
struct CompleteClause {
    int k = 0;
    std::vector<int> block;  // per variable 1..k (index i-1)
    int num_blocks = 0;
    std::set<std::tuple<int, int, int>> links;  // (sym, arg block, target block)
    std::vector<std::vector<char>> label;       // per block, per rel-label position

    bool entails(const XLit& x, const std::vector<int>& rel_labels) const {
        switch (x.kind) {
            case XLit::EqXX: return block[x.p - 1] == block[x.q - 1];
            case XLit::LabelX: {
                auto it = std::find(rel_labels.begin(), rel_labels.end(), x.label);
                size_t pos = it - rel_labels.begin();
                return label[block[x.p - 1]][pos];
            }
            case XLit::FnXX: {
                int bq = block[x.q - 1], bp = block[x.p - 1];
                if (bq == bp) return false;
                return links.count({x.sym, bq, bp}) > 0;
            }
        }
        return false;
    }
    bool has_link_between(int b1, int b2) const {
        for (const auto& [sym, a, b] : links)
            if ((a == b1 && b == b2) || (a == b2 && b == b1)) return true;
        return false;
    }
};

inline CompleteClause realize_complete_clause(const FunctionalStructure& fs,
                                              const std::vector<int>& tuple,
                                              const std::vector<int>& rel_syms,
                                              const std::vector<int>& rel_labels) {
    CompleteClause c;
    c.k = static_cast<int>(tuple.size());
    c.block.assign(c.k, -1);
    std::vector<int> rep;
    for (int i = 0; i < c.k; ++i) {
        for (size_t b = 0; b < rep.size(); ++b)
            if (rep[b] == tuple[i]) c.block[i] = static_cast<int>(b);
        if (c.block[i] < 0) {
            c.block[i] = static_cast<int>(rep.size());
            rep.push_back(tuple[i]);
        }
    }
    c.num_blocks = static_cast<int>(rep.size());
    for (int a = 0; a < c.num_blocks; ++a)
        for (int b = 0; b < c.num_blocks; ++b) {
            if (a == b) continue;
            for (int sym : rel_syms)
                if (fs.apply(sym, rep[a]) == rep[b] && rep[b] != rep[a])
                    c.links.insert({sym, a, b});
        }
    c.label.assign(c.num_blocks, std::vector<char>(rel_labels.size(), 0));
    for (int b = 0; b < c.num_blocks; ++b)
        for (size_t l = 0; l < rel_labels.size(); ++l)
            c.label[b][l] = fs.graph->has_label(rel_labels[l], rep[b]);
    return c;
}

struct WeightExtraction {
    std::vector<CompleteClause> clauses;
    std::vector<int> rel_syms;
    std::vector<int> rel_labels;
    // weights are shared between complete clauses with the same psi-entailment
    // pattern: pattern_of[i] indexes into tables/constants
    std::vector<int> pattern_of;
    std::vector<std::vector<std::vector<BigInt>>> tables;  // per pattern, per var, per vertex
    std::vector<BigInt> constants;                          // per pattern

    BigInt tuple_weight(size_t clause_idx, const std::vector<int>& tuple) const {
        int p = pattern_of[clause_idx];
        BigInt total = constants[p];
        for (size_t i = 0; i < tuple.size(); ++i) total += tables[p][i][tuple[i]];
        return total;
    }
};

// Builds the complete-clause family and, per entailment pattern, the
// per-vertex weight tables c_i via the scatter loop over tau-satisfiers.
inline WeightExtraction extract_weights(const FunctionalStructure& fs,
                                        const std::vector<DecomposedClause>& omega_prime,
                                        int k, long long clause_cap = 500'000) {
    WeightExtraction w;
    std::set<int> syms, labs;
    for (const auto& cl : omega_prime)
        for (const auto& x : cl.psi) {
            if (x.kind == XLit::FnXX) syms.insert(x.sym);
            if (x.kind == XLit::LabelX) labs.insert(x.label);
        }
    w.rel_syms.assign(syms.begin(), syms.end());
    w.rel_labels.assign(labs.begin(), labs.end());

    // enumerate the family: partitions x per-pair link sets (multiplicity 2)
    // x per-block relevant labels
    std::vector<std::vector<int>> partitions;
    {
        std::vector<int> rgs(k, 0);
        std::function<void(int, int)> gen = [&](int i, int maxb) {
            if (i == k) {
                partitions.push_back(rgs);
                return;
            }
            for (int b = 0; b <= maxb + 1 && b < k; ++b) {
                rgs[i] = b;
                gen(i + 1, std::max(maxb, b));
            }
        };
        gen(0, -1);
    }
    int m = static_cast<int>(w.rel_syms.size());
    for (const auto& part : partitions) {
        int nb = *std::max_element(part.begin(), part.end()) + 1;
        // directed link options per unordered block pair
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < nb; ++a)
            for (int b = a + 1; b < nb; ++b) pairs.emplace_back(a, b);
        // per pair: subsets of size <= 2 of the 2m directed (sym, dir) options
        std::vector<std::vector<std::vector<std::tuple<int, int, int>>>> pair_options(
            pairs.size());
        for (size_t pidx = 0; pidx < pairs.size(); ++pidx) {
            auto [a, b] = pairs[pidx];
            std::vector<std::tuple<int, int, int>> directed;
            for (int sym : w.rel_syms) {
                directed.push_back({sym, a, b});
                directed.push_back({sym, b, a});
            }
            auto& opts = pair_options[pidx];
            opts.push_back({});
            for (size_t i = 0; i < directed.size(); ++i) {
                opts.push_back({directed[i]});
                for (size_t j = i + 1; j < directed.size(); ++j)
                    opts.push_back({directed[i], directed[j]});
            }
        }
        std::vector<size_t> choice(pairs.size(), 0);
        while (true) {
            for (uint64_t lm = 0; lm < (1ull << (nb * w.rel_labels.size())); ++lm) {
                CompleteClause c;
                c.k = k;
                c.block = part;
                c.num_blocks = nb;
                for (size_t pidx = 0; pidx < pairs.size(); ++pidx)
                    for (const auto& link : pair_options[pidx][choice[pidx]])
                        c.links.insert(link);
                c.label.assign(nb, std::vector<char>(w.rel_labels.size(), 0));
                for (int b = 0; b < nb; ++b)
                    for (size_t l = 0; l < w.rel_labels.size(); ++l)
                        c.label[b][l] = (lm >> (b * w.rel_labels.size() + l)) & 1ull;
                w.clauses.push_back(std::move(c));
                if (static_cast<long long>(w.clauses.size()) > clause_cap)
                    throw ScaleError("complete clause family exceeded cap");
            }
            size_t p = 0;
            while (p < pairs.size()) {
                if (++choice[p] < pair_options[p].size()) break;
                choice[p] = 0;
                ++p;
            }
            if (p == pairs.size()) break;
        }
        if (pairs.empty() && m >= 0) {
            // handled above: the while loop ran once with no pairs
        }
    }

    // entailment pattern per complete clause
    std::map<std::vector<char>, int> pattern_ids;
    w.pattern_of.resize(w.clauses.size());
    for (size_t ci = 0; ci < w.clauses.size(); ++ci) {
        std::vector<char> pat(omega_prime.size());
        for (size_t j = 0; j < omega_prime.size(); ++j) {
            bool ok = true;
            for (const auto& x : omega_prime[j].psi)
                if (!w.clauses[ci].entails(x, w.rel_labels)) {
                    ok = false;
                    break;
                }
            pat[j] = ok;
        }
        auto [it, fresh] = pattern_ids.emplace(pat, static_cast<int>(pattern_ids.size()));
        w.pattern_of[ci] = it->second;
    }

    // scatter weights per pattern
    int np = static_cast<int>(pattern_ids.size());
    w.tables.assign(np, std::vector<std::vector<BigInt>>(k, std::vector<BigInt>(fs.n)));
    w.constants.assign(np, BigInt(0));
    std::vector<char> tau_ok(fs.n);
    for (const auto& [pat, pid] : pattern_ids) {
        for (size_t j = 0; j < omega_prime.size(); ++j) {
            if (!pat[j]) continue;
            const auto& cl = omega_prime[j];
            for (int u = 0; u < fs.n; ++u) tau_ok[u] = eval_tau(fs, cl.tau, u);
            if (cl.mixed.empty()) {
                long long cnt = std::count(tau_ok.begin(), tau_ok.end(), char(1));
                w.constants[pid] += cl.mu * BigInt(cnt);
                continue;
            }
            const MixedLit& mlit = cl.mixed[0];
            auto& table = w.tables[pid][mlit.xi - 1];
            switch (mlit.kind) {
                case MixedLit::YEqX:
                    for (int u = 0; u < fs.n; ++u)
                        if (tau_ok[u]) table[u] += cl.mu;
                    break;
                case MixedLit::FnYX:
                    for (int u = 0; u < fs.n; ++u) {
                        int tgt = fs.apply(mlit.sym, u);
                        if (tgt != u && tau_ok[u]) table[tgt] += cl.mu;
                    }
                    break;
                case MixedLit::FnXY:
                    for (int v = 0; v < fs.n; ++v) {
                        int img = fs.apply(mlit.sym, v);
                        if (img != v && tau_ok[img]) table[v] += cl.mu;
                    }
                    break;
            }
        }
    }
    return w;
}

// ---------------------------------------------------------------------------
// Signature restriction (relational form)
// ---------------------------------------------------------------------------

// Binary symmetric irreflexive relational structure.
struct RelStructure {
    int n = 0;
    std::vector<std::vector<std::vector<char>>> rel;  // rel[r][u][v]

    void add_relation() {
        rel.emplace_back(n, std::vector<char>(n, 0));
    }
    void set(int r, int u, int v) {
        rel[r][u][v] = rel[r][v][u] = 1;
    }
    int multiplicity() const {
        int worst = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                int c = 0;
                for (const auto& rr : rel) c += rr[u][v];
                worst = std::max(worst, c);
            }
        return worst;
    }
};

// Complete relational clause: equality partition plus, for each unordered
// block pair, the set of relations that hold positively; all other relations
// are negated.
struct RelCompleteClause {
    int k = 0;
    std::vector<int> block;
    int num_blocks = 0;
    std::set<std::tuple<int, int, int>> pos;  // (relation, block a, block b) with a < b
};

inline bool rel_satisfies(const RelStructure& h, const RelCompleteClause& c,
                          const std::vector<int>& tuple) {
    std::vector<int> rep(c.num_blocks, -1);
    for (int i = 0; i < c.k; ++i) {
        int b = c.block[i];
        if (rep[b] < 0) rep[b] = tuple[i];
        else if (rep[b] != tuple[i]) return false;
    }
    for (int a = 0; a < c.num_blocks; ++a)
        for (int b = a + 1; b < c.num_blocks; ++b) {
            if (rep[a] == rep[b]) return false;
            for (size_t r = 0; r < h.rel.size(); ++r) {
                bool want = c.pos.count({static_cast<int>(r), a, b}) > 0;
                if (static_cast<bool>(h.rel[r][rep[a]][rep[b]]) != want) return false;
            }
        }
    return true;
}

struct RestrictedSignature {
    RelStructure structure;
    RelCompleteClause clause;
    std::vector<int> kept;  // original relation index per kept relation; last is E^-
};

// Keeps the relations used positively by the clause and merges all the rest
// into one relation; the clause is equivalent over every tuple and the
// underlying graph (hence its treedepth) is unchanged.
inline RestrictedSignature restrict_signature(const RelStructure& h,
                                              const RelCompleteClause& omega, int k) {
    if (h.multiplicity() > 2) throw InputError("structure multiplicity exceeds 2");
    std::set<int> pos_rels;
    for (const auto& [r, a, b] : omega.pos) pos_rels.insert(r);
    if (static_cast<int>(pos_rels.size()) > 2 * k * k)
        throw InputError("clause uses more than 2k^2 relations positively");
    RestrictedSignature out;
    out.structure.n = h.n;
    std::map<int, int> new_index;
    for (int r : pos_rels) {
        new_index[r] = static_cast<int>(out.structure.rel.size());
        out.structure.add_relation();
        out.structure.rel.back() = h.rel[r];
        out.kept.push_back(r);
    }
    out.structure.add_relation();  // E^-
    out.kept.push_back(-1);
    int eneg = static_cast<int>(out.structure.rel.size()) - 1;
    for (size_t r = 0; r < h.rel.size(); ++r) {
        if (pos_rels.count(static_cast<int>(r))) continue;
        for (int u = 0; u < h.n; ++u)
            for (int v = u + 1; v < h.n; ++v)
                if (h.rel[r][u][v]) out.structure.set(eneg, u, v);
    }
    out.clause.k = omega.k;
    out.clause.block = omega.block;
    out.clause.num_blocks = omega.num_blocks;
    for (const auto& [r, a, b] : omega.pos) out.clause.pos.insert({new_index[r], a, b});
    return out;
}

// ---------------------------------------------------------------------------
// Weighted maximization over low-treedepth color selections
// ---------------------------------------------------------------------------

namespace detail {

// Elimination forest of a vertex subset with bounded depth: every edge of the
// induced graph connects an ancestor-descendant pair.
struct ElimForest {
    std::vector<int> verts;
    std::vector<int> parent;          // index into verts, -1 for roots
    std::vector<std::vector<int>> children;
    std::vector<int> roots;
};

inline bool build_forest_rec(const LabeledGraph& g, std::vector<int> comp, int budget,
                             ElimForest& forest, int parent_slot,
                             std::vector<int>& slot_of) {
    if (comp.empty()) return true;
    if (budget == 0) return false;
    // split into components first
    auto sub = induced_subgraph(g, comp);
    auto comps = connected_components(sub.graph);
    if (comps.size() > 1) {
        for (const auto& c : comps) {
            std::vector<int> orig;
            for (int v : c) orig.push_back(sub.orig_id[v]);
            if (!build_forest_rec(g, orig, budget, forest, parent_slot, slot_of))
                return false;
        }
        return true;
    }
    // try each vertex as the root of this component, highest degree first
    std::vector<int> order = comp;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    for (int root : order) {
        size_t mark = forest.verts.size();
        forest.verts.push_back(root);
        forest.parent.push_back(parent_slot);
        forest.children.emplace_back();
        int slot = static_cast<int>(mark);
        if (parent_slot >= 0) forest.children[parent_slot].push_back(slot);
        else forest.roots.push_back(slot);
        slot_of[root] = slot;
        std::vector<int> rest;
        for (int v : comp)
            if (v != root) rest.push_back(v);
        if (build_forest_rec(g, rest, budget - 1, forest, slot, slot_of)) return true;
        // undo
        while (forest.verts.size() > mark) {
            slot_of[forest.verts.back()] = -1;
            forest.verts.pop_back();
            forest.parent.pop_back();
            forest.children.pop_back();
        }
        if (parent_slot >= 0) forest.children[parent_slot].pop_back();
        else forest.roots.pop_back();
        for (auto& ch : forest.children)
            ch.erase(std::remove_if(ch.begin(), ch.end(),
                                    [&](int x) { return x >= static_cast<int>(mark); }),
                     ch.end());
    }
    return false;
}

inline std::optional<ElimForest> build_elimination_forest(const LabeledGraph& g,
                                                          const std::vector<int>& verts,
                                                          int depth_budget) {
    ElimForest forest;
    std::vector<int> slot_of(g.n(), -1);
    if (!build_forest_rec(g, verts, depth_budget, forest, -1, slot_of)) return std::nullopt;
    return forest;
}

}  // namespace detail

struct WeightedMaxResult {
    bool feasible = false;
    BigInt value;
    std::vector<int> tuple;
};

namespace detail {

// Assignment state along a root path: which blocks sit on which path vertex.
struct BlockAssign {
    std::vector<int> vertex;  // per block, -1 unassigned
};

// Checks clause-required structure between block b at vertex v and every
// already-placed block.
inline bool placement_ok(const FunctionalStructure& fs, const CompleteClause& omega,
                         const std::vector<int>& rel_syms,
                         const std::vector<int>& rel_labels, const BlockAssign& assign,
                         int b, int v) {
    for (size_t l = 0; l < rel_labels.size(); ++l)
        if (fs.graph->has_label(rel_labels[l], v) != static_cast<bool>(omega.label[b][l]))
            return false;
    for (int b2 = 0; b2 < omega.num_blocks; ++b2) {
        int w = assign.vertex[b2];
        if (b2 == b || w < 0) continue;
        if (w == v) return false;
        for (int sym : rel_syms) {
            bool want_vw = omega.links.count({sym, b, b2}) > 0;
            bool have_vw = fs.apply(sym, v) == w && w != v;
            if (want_vw != have_vw) return false;
            bool want_wv = omega.links.count({sym, b2, b}) > 0;
            bool have_wv = fs.apply(sym, w) == v && v != w;
            if (want_wv != have_wv) return false;
        }
    }
    return true;
}

}  // namespace detail

// max over tuples realizing omega of (constant + sum_i c_i(u_i)), computed by
// a dynamic program over an elimination forest of every selection of at most
// k color classes of the relevant-link graph.
inline WeightedMaxResult maximize_weighted_clause(
    const FunctionalStructure& fs, const LabeledGraph& rel_links,
    const CompleteClause& omega, const std::vector<int>& rel_syms,
    const std::vector<int>& rel_labels, const std::vector<std::vector<BigInt>>& tables,
    const BigInt& constant, const TreedepthColoring& coloring) {
    WeightedMaxResult best;
    int k = omega.k;
    int nb = omega.num_blocks;
    uint32_t full = (1u << nb) - 1;

    // per-block weight of placing block b at vertex v
    auto block_weight = [&](int b, int v) {
        BigInt w;
        for (int i = 1; i <= k; ++i)
            if (omega.block[i - 1] == b) w += tables[i - 1][v];
        return w;
    };

    int chi = std::max(1, coloring.num_colors);
    int pick = std::min(chi, std::max(1, k));
    std::vector<int> classes(pick);
    std::function<void(int, int)> choose = [&](int from, int idx) {
        if (idx == pick) {
            std::vector<int> verts;
            for (int v = 0; v < rel_links.n(); ++v)
                for (int c = 0; c < pick; ++c)
                    if (coloring.colors[v] == classes[c]) verts.push_back(v);
            auto forest = detail::build_elimination_forest(rel_links, verts, pick);
            if (!forest) return;  // coloring contract violated; skip selection

            // subtree tables: block-subset mask -> (value, block vertices)
            struct Entry {
                BigInt value;
                std::vector<int> verts;
            };
            using Table = std::map<uint32_t, Entry>;
            detail::BlockAssign assign;
            assign.vertex.assign(nb, -1);

            std::function<Table(int)> walk = [&](int slot) -> Table {
                int v = forest->verts[slot];
                Table out;
                // choice: no block at v, or one block b at v
                for (int choice = -1; choice < nb; ++choice) {
                    uint32_t base_mask = 0;
                    BigInt base_val;
                    if (choice >= 0) {
                        if (assign.vertex[choice] >= 0) continue;
                        if (!detail::placement_ok(fs, omega, rel_syms, rel_labels, assign,
                                                  choice, v))
                            continue;
                        base_mask = 1u << choice;
                        base_val = block_weight(choice, v);
                        assign.vertex[choice] = v;
                    }
                    // fold children one at a time; entries carry seats only
                    // for their own mask so ties compare cleanly
                    Table acc;
                    std::vector<int> base_seats(nb, -1);
                    if (choice >= 0) base_seats[choice] = v;
                    acc[base_mask] = {base_val, std::move(base_seats)};
                    for (int ch : forest->children[slot]) {
                        Table child = walk(ch);
                        Table merged;
                        for (const auto& [m1, e1] : acc)
                            for (const auto& [m2, e2] : child) {
                                if (m1 & m2) continue;
                                // cross-branch blocks may not demand links
                                bool ok = true;
                                for (int b1 = 0; b1 < nb && ok; ++b1) {
                                    if (!((m1 & ~base_mask) >> b1 & 1u)) continue;
                                    for (int b2 = 0; b2 < nb && ok; ++b2)
                                        if ((m2 >> b2 & 1u) &&
                                            omega.has_link_between(b1, b2))
                                            ok = false;
                                }
                                if (!ok) continue;
                                uint32_t mm = m1 | m2;
                                BigInt val = e1.value + e2.value;
                                std::vector<int> seats = e1.verts;
                                for (int b = 0; b < nb; ++b)
                                    if (m2 >> b & 1u) seats[b] = e2.verts[b];
                                auto it = merged.find(mm);
                                if (it == merged.end() || val > it->second.value ||
                                    (val == it->second.value && seats < it->second.verts))
                                    merged[mm] = {std::move(val), std::move(seats)};
                            }
                        acc = std::move(merged);
                        if (acc.empty()) break;
                    }
                    for (auto& [m, e] : acc) {
                        auto it = out.find(m);
                        if (it == out.end() || e.value > it->second.value ||
                            (e.value == it->second.value && e.verts < it->second.verts))
                            out[m] = std::move(e);
                    }
                    if (choice >= 0) assign.vertex[choice] = -1;
                }
                return out;
            };

            Table forest_acc;
            forest_acc[0] = {BigInt(0), std::vector<int>(nb, -1)};
            for (int root : forest->roots) {
                Table rt = walk(root);
                Table merged;
                for (const auto& [m1, e1] : forest_acc)
                    for (const auto& [m2, e2] : rt) {
                        if (m1 & m2) continue;
                        bool ok = true;
                        for (int b1 = 0; b1 < nb && ok; ++b1) {
                            if (!(m1 >> b1 & 1u)) continue;
                            for (int b2 = 0; b2 < nb && ok; ++b2)
                                if ((m2 >> b2 & 1u) && omega.has_link_between(b1, b2))
                                    ok = false;
                        }
                        if (!ok) continue;
                        uint32_t mm = m1 | m2;
                        BigInt val = e1.value + e2.value;
                        std::vector<int> seats = e1.verts;
                        for (int b = 0; b < nb; ++b)
                            if (m2 >> b & 1u) seats[b] = e2.verts[b];
                        auto it = merged.find(mm);
                        if (it == merged.end() || val > it->second.value ||
                            (val == it->second.value && seats < it->second.verts))
                            merged[mm] = {std::move(val), std::move(seats)};
                    }
                forest_acc = std::move(merged);
                if (forest_acc.empty()) break;
            }
            auto it = forest_acc.find(full);
            if (it != forest_acc.end()) {
                BigInt total = constant + it->second.value;
                std::vector<int> tuple(k);
                for (int i = 1; i <= k; ++i) tuple[i - 1] = it->second.verts[omega.block[i - 1]];
                if (!best.feasible || total > best.value ||
                    (total == best.value && tuple < best.tuple)) {
                    best.feasible = true;
                    best.value = std::move(total);
                    best.tuple = std::move(tuple);
                }
            }
            return;
        }
        for (int c = from; c < chi; ++c) {
            classes[idx] = c;
            choose(c + 1, idx + 1);
        }
    };
    choose(0, 0);
    return best;
}

// ---------------------------------------------------------------------------
// The approximate optimizer
// ---------------------------------------------------------------------------

struct ApproxOptions {
    int cap_k = 2;
    long long clause_cap = 500'000;
    std::optional<VertexOrdering> ordering;
};

inline EvalResult maximize_approx(const LabeledGraph& g, const CountingSentence& s,
                                  const ApproxOptions& opts = {}) {
    if (g.n() == 0) throw InputError("empty graph has no witness tuple");
    if (s.k < 1) throw InputError("sentence needs at least one existential variable");
    if (s.k > opts.cap_k)
        throw ScaleError("approx engine limited to k <= " + std::to_string(opts.cap_k));
    if (max_var_index(s.matrix) > s.k) throw InputError("matrix mentions an unbound variable");
    if (max_label_index(s.matrix) >= g.num_labels())
        throw InputError("matrix mentions a label the graph does not carry");

    auto stamp = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, double>> stages;
    auto mark = [&](const char* name) {
        auto now = std::chrono::steady_clock::now();
        stages.emplace_back(name, std::chrono::duration<double>(now - stamp).count());
        stamp = now;
    };
    VertexOrdering pi = opts.ordering ? *opts.ordering : heuristic_ordering(g, 2);
    mark("ordering");
    auto pipeline = clause_pipeline(g, pi, s.matrix, opts.clause_cap);
    mark("clauses");
    const FunctionalStructure& fs = pipeline.structure;
    auto ext = extract_weights(fs, pipeline.clauses, s.k, opts.clause_cap);
    mark("weights");

    // link graph over the relevant symbols only; cross-branch feasibility in
    // the forest DP relies on its edges carrying every relevant link
    LabeledGraph rel_links(g.n(), g.num_labels());
    for (int sym : ext.rel_syms)
        for (int u = 0; u < fs.n; ++u) {
            int v = fs.apply(sym, u);
            if (v != u && !rel_links.adjacent(u, v)) rel_links.add_edge(u, v);
        }
    auto coloring = treedepth_coloring(rel_links, pi, std::max(1, s.k));

    WeightedMaxResult best;
    for (size_t ci = 0; ci < ext.clauses.size(); ++ci) {
        int pid = ext.pattern_of[ci];
        auto r = maximize_weighted_clause(fs, rel_links, ext.clauses[ci], ext.rel_syms,
                                          ext.rel_labels, ext.tables[pid],
                                          ext.constants[pid], coloring);
        if (!r.feasible) continue;
        if (!best.feasible || r.value > best.value ||
            (r.value == best.value && r.tuple < best.tuple)) {
            best = std::move(r);
        }
    }
    if (!best.feasible) throw InputError("no realizable complete clause (internal)");
    mark("maximize");

    EvalResult res;
    res.mode = "approx";
    res.delta = pipeline.delta;
    res.witness = best.tuple;
    // report the witness's true count, not the pipeline's estimate
    {
        std::vector<int> assign(s.k + 1);
        for (int i = 1; i <= s.k; ++i) assign[i] = best.tuple[i - 1];
        long long cnt = 0;
        for (int v = 0; v < g.n(); ++v) {
            assign[kVarY] = v;
            if (evaluate_matrix(g, s.matrix, assign)) ++cnt;
        }
        res.value = BigInt(cnt);
    }
    res.wcol1 = wcol_of_ordering(g, pi, 1);
    res.wcol2 = wcol_of_ordering(g, pi, 2);
    res.stage_seconds = std::move(stages);
    if (res.value > s.threshold)
        res.decision = EvalResult::Decision::Yes;
    else if (s.threshold - res.value <= res.delta)
        res.decision = EvalResult::Decision::Unknown;
    else
        res.decision = EvalResult::Decision::No;
    return res;
}

}  // namespace focount

#endif
