#ifndef FOCOUNT_FORMULA_HPP
#define FOCOUNT_FORMULA_HPP

#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <variant>

#include "focount/bigint.hpp"
#include "focount/graph.hpp"

namespace focount {

// Variables are dense indices: 0 is the counting variable y, 1..k are x_1..x_k.
constexpr int kVarY = 0;

enum class AtomKind { Edge, Eq, Label };

struct Atom {
    AtomKind kind;
    int a = 0;       // first variable
    int b = 0;       // second variable (Edge/Eq); unused for Label
    int label = -1;  // label index for Label atoms

    static Atom edge(int a, int b) { return {AtomKind::Edge, std::min(a, b), std::max(a, b), -1}; }
    static Atom eq(int a, int b) { return {AtomKind::Eq, std::min(a, b), std::max(a, b), -1}; }
    static Atom lab(int label, int a) { return {AtomKind::Label, a, 0, label}; }

    friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct FNode;
using Formula = std::shared_ptr<const FNode>;

struct FNode {
    struct Bool {
        bool value;
    };
    struct Not {
        Formula sub;
    };
    struct And {
        Formula lhs, rhs;
    };
    struct Or {
        Formula lhs, rhs;
    };
    std::variant<Atom, Bool, Not, And, Or> node;
};

inline Formula f_atom(Atom a) { return std::make_shared<FNode>(FNode{a}); }
inline Formula f_bool(bool b) { return std::make_shared<FNode>(FNode{FNode::Bool{b}}); }
inline Formula f_not(Formula f) { return std::make_shared<FNode>(FNode{FNode::Not{std::move(f)}}); }
inline Formula f_and(Formula a, Formula b) {
    return std::make_shared<FNode>(FNode{FNode::And{std::move(a), std::move(b)}});
}
inline Formula f_or(Formula a, Formula b) {
    return std::make_shared<FNode>(FNode{FNode::Or{std::move(a), std::move(b)}});
}

// Symbol count: one per atom and one per connective.
inline int formula_size(const Formula& f) {
    return std::visit(
        [](const auto& n) -> int {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Atom>) return 1;
            else if constexpr (std::is_same_v<T, FNode::Bool>) return 1;
            else if constexpr (std::is_same_v<T, FNode::Not>) return 1 + formula_size(n.sub);
            else if constexpr (std::is_same_v<T, FNode::And>)
                return 1 + formula_size(n.lhs) + formula_size(n.rhs);
            else
                return 1 + formula_size(n.lhs) + formula_size(n.rhs);
        },
        f->node);
}

inline int max_var_index(const Formula& f) {
    return std::visit(
        [](const auto& n) -> int {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Atom>)
                return n.kind == AtomKind::Label ? n.a : std::max(n.a, n.b);
            else if constexpr (std::is_same_v<T, FNode::Bool>) return 0;
            else if constexpr (std::is_same_v<T, FNode::Not>) return max_var_index(n.sub);
            else if constexpr (std::is_same_v<T, FNode::And>)
                return std::max(max_var_index(n.lhs), max_var_index(n.rhs));
            else
                return std::max(max_var_index(n.lhs), max_var_index(n.rhs));
        },
        f->node);
}

inline int max_label_index(const Formula& f) {
    return std::visit(
        [](const auto& n) -> int {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Atom>) return n.kind == AtomKind::Label ? n.label : -1;
            else if constexpr (std::is_same_v<T, FNode::Bool>) return -1;
            else if constexpr (std::is_same_v<T, FNode::Not>) return max_label_index(n.sub);
            else if constexpr (std::is_same_v<T, FNode::And>)
                return std::max(max_label_index(n.lhs), max_label_index(n.rhs));
            else
                return std::max(max_label_index(n.lhs), max_label_index(n.rhs));
        },
        f->node);
}

// Counting sentence: exists x_1..x_k, #y matrix(y, x-bar) > threshold.
struct CountingSentence {
    int k = 1;
    Formula matrix;
    BigInt threshold;
};

inline bool eval_atom(const LabeledGraph& g, const Atom& a, const std::vector<int>& assign) {
    switch (a.kind) {
        case AtomKind::Edge: return g.adjacent(assign[a.a], assign[a.b]);
        case AtomKind::Eq: return assign[a.a] == assign[a.b];
        case AtomKind::Label: return g.has_label(a.label, assign[a.a]);
    }
    return false;
}

// assign[i] is the vertex for variable i; every mentioned variable must be set.
inline bool evaluate_matrix(const LabeledGraph& g, const Formula& f,
                            const std::vector<int>& assign) {
    return std::visit(
        [&](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Atom>) {
                int hi = n.kind == AtomKind::Label ? n.a : std::max(n.a, n.b);
                if (hi >= static_cast<int>(assign.size()) || assign[hi] < 0 ||
                    assign[n.a] < 0)
                    throw InputError("unbound variable in matrix evaluation");
                return eval_atom(g, n, assign);
            } else if constexpr (std::is_same_v<T, FNode::Bool>)
                return n.value;
            else if constexpr (std::is_same_v<T, FNode::Not>)
                return !evaluate_matrix(g, n.sub, assign);
            else if constexpr (std::is_same_v<T, FNode::And>)
                return evaluate_matrix(g, n.lhs, assign) && evaluate_matrix(g, n.rhs, assign);
            else
                return evaluate_matrix(g, n.lhs, assign) || evaluate_matrix(g, n.rhs, assign);
        },
        f->node);
}

// ---------------------------------------------------------------------------
// Parser. Grammar (ASCII):
//   sentence := "exists" ident+ "." "count" ident "." formula ">" int
//   formula  := term (("|"|"&") term)*       same precedence, left-assoc
//   term     := "!" term | "(" formula ")" | atom
//   atom     := "E" "(" var "," var ")" | var "=" var | P<digits> "(" var ")"
// ---------------------------------------------------------------------------

struct ParseError : InputError {
    int line, column;
    ParseError(const std::string& msg, int line, int column)
        : InputError(msg + " at line " + std::to_string(line) + ", column " +
                     std::to_string(column)),
          line(line),
          column(column) {}
};

namespace detail {

struct Token {
    enum Kind { Ident, Int, Sym, End } kind;
    std::string text;
    int line, column;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }
    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) {
            if (src_[i_] == '\n') {
                ++line_;
                col_ = 1;
            } else
                ++col_;
            ++i_;
        }
        tok_.line = line_;
        tok_.column = col_;
        if (i_ >= src_.size()) {
            tok_ = {Token::End, "", line_, col_};
            return;
        }
        char c = src_[i_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            tok_ = {Token::Ident, src_.substr(i_, j - i_), line_, col_};
            col_ += static_cast<int>(j - i_);
            i_ = j;
        } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                   (c == '-' && i_ + 1 < src_.size() &&
                    std::isdigit(static_cast<unsigned char>(src_[i_ + 1])))) {
            size_t j = i_ + 1;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            tok_ = {Token::Int, src_.substr(i_, j - i_), line_, col_};
            col_ += static_cast<int>(j - i_);
            i_ = j;
        } else {
            tok_ = {Token::Sym, std::string(1, c), line_, col_};
            ++col_;
            ++i_;
        }
    }
    std::string src_;
    size_t i_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class SentenceParser {
public:
    explicit SentenceParser(const std::string& src) : lex_(src) {}

    CountingSentence parse() {
        expect_ident("exists");
        std::vector<std::string> xs;
        while (lex_.peek().kind == Token::Ident && lex_.peek().text != "count")
            xs.push_back(lex_.next().text);
        if (xs.empty()) fail("empty variable list after 'exists'");
        expect_sym(".");
        expect_ident("count");
        if (lex_.peek().kind != Token::Ident) fail("expected counting variable name");
        std::string yname = lex_.next().text;
        expect_sym(".");
        vars_[yname] = kVarY;
        for (size_t i = 0; i < xs.size(); ++i) {
            if (xs[i] == yname || vars_.count(xs[i])) fail("duplicate variable '" + xs[i] + "'");
            vars_[xs[i]] = static_cast<int>(i) + 1;
        }
        CountingSentence s;
        s.k = static_cast<int>(xs.size());
        s.matrix = parse_formula();
        expect_sym(">");
        if (lex_.peek().kind != Token::Int) fail("expected integer threshold");
        s.threshold = BigInt::parse(lex_.next().text);
        if (lex_.peek().kind != Token::End) fail("trailing input after sentence");
        return s;
    }

private:
    Lexer lex_;
    std::map<std::string, int> vars_;

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, lex_.peek().line, lex_.peek().column);
    }
    void expect_ident(const std::string& word) {
        if (lex_.peek().kind != Token::Ident || lex_.peek().text != word)
            fail("expected '" + word + "'");
        lex_.next();
    }
    void expect_sym(const std::string& sym) {
        if (lex_.peek().kind != Token::Sym || lex_.peek().text != sym)
            fail("expected '" + sym + "'");
        lex_.next();
    }
    int lookup_var(const Token& t) {
        auto it = vars_.find(t.text);
        if (it == vars_.end())
            throw ParseError("unknown variable '" + t.text + "'", t.line, t.column);
        return it->second;
    }
    Formula parse_formula() {
        Formula f = parse_term();
        while (lex_.peek().kind == Token::Sym &&
               (lex_.peek().text == "|" || lex_.peek().text == "&")) {
            std::string op = lex_.next().text;
            Formula rhs = parse_term();
            f = op == "|" ? f_or(f, rhs) : f_and(f, rhs);
        }
        return f;
    }
    Formula parse_term() {
        if (lex_.peek().kind == Token::Sym && lex_.peek().text == "!") {
            lex_.next();
            return f_not(parse_term());
        }
        if (lex_.peek().kind == Token::Sym && lex_.peek().text == "(") {
            lex_.next();
            Formula f = parse_formula();
            expect_sym(")");
            return f;
        }
        return parse_atom();
    }
    Formula parse_atom() {
        if (lex_.peek().kind != Token::Ident) fail("expected atom");
        Token head = lex_.next();
        if (head.text == "E" && lex_.peek().kind == Token::Sym && lex_.peek().text == "(") {
            lex_.next();
            int a = lookup_var(expect_var());
            expect_sym(",");
            int b = lookup_var(expect_var());
            expect_sym(")");
            return f_atom(Atom::edge(a, b));
        }
        if (head.text.size() > 1 && head.text[0] == 'P' &&
            std::all_of(head.text.begin() + 1, head.text.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
            lex_.peek().kind == Token::Sym && lex_.peek().text == "(") {
            int label = std::stoi(head.text.substr(1));
            if (label < 1)
                throw ParseError("label indices start at 1", head.line, head.column);
            lex_.next();
            int a = lookup_var(expect_var());
            expect_sym(")");
            return f_atom(Atom::lab(label - 1, a));
        }
        // bare variable: must be an equality atom
        int a = lookup_var(head);
        expect_sym("=");
        int b = lookup_var(expect_var());
        return f_atom(Atom::eq(a, b));
    }
    Token expect_var() {
        if (lex_.peek().kind != Token::Ident) fail("expected variable");
        return lex_.next();
    }
};

}  // namespace detail

inline CountingSentence parse_sentence(const std::string& text) {
    return detail::SentenceParser(text).parse();
}

// ---------------------------------------------------------------------------
// Positive-clause normalization
// ---------------------------------------------------------------------------

// Conjunction of positive atoms, canonically sorted. Empty clause is "true".
struct PositiveClause {
    std::vector<Atom> atoms;

    void canonicalize() {
        std::sort(atoms.begin(), atoms.end());
        atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    }
    friend auto operator<=>(const PositiveClause&, const PositiveClause&) = default;

    bool eval(const LabeledGraph& g, const std::vector<int>& assign) const {
        for (const Atom& a : atoms)
            if (!eval_atom(g, a, assign)) return false;
        return true;
    }
    uint32_t var_mask() const {
        uint32_t m = 0;
        for (const Atom& a : atoms) {
            m |= 1u << a.a;
            if (a.kind != AtomKind::Label) m |= 1u << a.b;
        }
        return m;
    }
};

struct WeightedClause {
    BigInt mu;
    PositiveClause clause;
};
using WeightedClauseSet = std::vector<WeightedClause>;

namespace detail {

// Rewrites E(a,a) to false and a=a to true, then folds constants.
inline Formula simplify(const Formula& f) {
    return std::visit(
        [&](const auto& n) -> Formula {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Atom>) {
                if (n.kind == AtomKind::Edge && n.a == n.b) return f_bool(false);
                if (n.kind == AtomKind::Eq && n.a == n.b) return f_bool(true);
                return f;
            } else if constexpr (std::is_same_v<T, FNode::Bool>)
                return f;
            else if constexpr (std::is_same_v<T, FNode::Not>) {
                Formula s = simplify(n.sub);
                if (auto* b = std::get_if<FNode::Bool>(&s->node)) return f_bool(!b->value);
                return f_not(s);
            } else if constexpr (std::is_same_v<T, FNode::And>) {
                Formula l = simplify(n.lhs), r = simplify(n.rhs);
                if (auto* b = std::get_if<FNode::Bool>(&l->node)) return b->value ? r : l;
                if (auto* b = std::get_if<FNode::Bool>(&r->node)) return b->value ? l : r;
                return f_and(l, r);
            } else {
                Formula l = simplify(n.lhs), r = simplify(n.rhs);
                if (auto* b = std::get_if<FNode::Bool>(&l->node)) return b->value ? l : r;
                if (auto* b = std::get_if<FNode::Bool>(&r->node)) return b->value ? r : l;
                return f_or(l, r);
            }
        },
        f->node);
}

inline void collect_atoms(const Formula& f, std::vector<Atom>& out) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Atom>) out.push_back(n);
            else if constexpr (std::is_same_v<T, FNode::Not>) collect_atoms(n.sub, out);
            else if constexpr (std::is_same_v<T, FNode::And>) {
                collect_atoms(n.lhs, out);
                collect_atoms(n.rhs, out);
            } else if constexpr (std::is_same_v<T, FNode::Or>) {
                collect_atoms(n.lhs, out);
                collect_atoms(n.rhs, out);
            }
        },
        f->node);
}

inline bool eval_under(const Formula& f, const std::map<Atom, bool>& truth) {
    return std::visit(
        [&](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Atom>) return truth.at(n);
            else if constexpr (std::is_same_v<T, FNode::Bool>) return n.value;
            else if constexpr (std::is_same_v<T, FNode::Not>) return !eval_under(n.sub, truth);
            else if constexpr (std::is_same_v<T, FNode::And>)
                return eval_under(n.lhs, truth) && eval_under(n.rhs, truth);
            else
                return eval_under(n.lhs, truth) || eval_under(n.rhs, truth);
        },
        f->node);
}

}  // namespace detail

// Turns a quantifier-free matrix into weighted positive conjunctive clauses
// with sum-identity  #y phi = sum mu * #y omega. Complete DNF over the atom
// set, then exhaustive inclusion-exclusion  #(w & !l) = #w - #(w & l)  on
// negative literals, merging duplicate clauses.
inline WeightedClauseSet to_positive_clauses(const Formula& phi,
                                             std::optional<long long> cap_override = {}) {
    Formula f = detail::simplify(phi);
    std::vector<Atom> atoms;
    detail::collect_atoms(f, atoms);
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    int na = static_cast<int>(atoms.size());
    if (na > 24) throw ScaleError("too many distinct atoms for DNF expansion");

    long long cap;
    if (cap_override)
        cap = *cap_override;
    else {
        int sz = formula_size(phi);
        cap = sz >= 31 ? (1LL << 62) : (1LL << (2 * sz));  // 4^{|phi|}
    }

    // each work item: weight, positive atoms mask, negative atoms mask
    struct Item {
        BigInt mu;
        uint32_t pos, neg;
    };
    std::vector<Item> work;
    std::map<Atom, bool> truth;
    for (uint32_t m = 0; m < (1u << na); ++m) {
        for (int i = 0; i < na; ++i) truth[atoms[i]] = (m >> i) & 1u;
        if (detail::eval_under(f, truth))
            work.push_back({BigInt(1), m, ~m & ((na == 32 ? ~0u : (1u << na) - 1))});
    }
    long long processed = 0;
    std::map<std::pair<uint32_t, uint32_t>, BigInt> pool;
    while (!work.empty()) {
        Item it = std::move(work.back());
        work.pop_back();
        if (++processed > cap)
            throw ScaleError("clause expansion exceeded cap " + std::to_string(cap));
        if (it.neg == 0) {
            auto key = std::make_pair(it.pos, 0u);
            pool[key] += it.mu;
            continue;
        }
        uint32_t lbit = it.neg & (~it.neg + 1);
        // #(pos & !l) = #pos - #(pos & l)
        work.push_back({it.mu, it.pos, it.neg & ~lbit});
        work.push_back({-it.mu, it.pos | lbit, it.neg & ~lbit});
    }
    WeightedClauseSet out;
    for (auto& [key, mu] : pool) {
        if (mu.is_zero()) continue;
        WeightedClause wc;
        wc.mu = mu;
        for (int i = 0; i < na; ++i)
            if ((key.first >> i) & 1u) wc.clause.atoms.push_back(atoms[i]);
        wc.clause.canonicalize();
        out.push_back(std::move(wc));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Complete conjunctive clauses over the existential variables
// ---------------------------------------------------------------------------

// Fixes, for each pair of x-variables, equality and (if unequal) adjacency,
// and for each variable each label bit. Every tuple satisfies exactly one.
struct CompleteXClause {
    int k = 0;
    int num_labels = 0;
    std::vector<int> block;               // size k, block id per variable (0-based)
    int num_blocks = 0;
    std::vector<std::vector<char>> edge;  // num_blocks x num_blocks, symmetric
    std::vector<std::vector<char>> label; // num_blocks x num_labels

    bool satisfies(const LabeledGraph& g, const std::vector<int>& tuple) const {
        std::vector<int> rep(num_blocks, -1);
        for (int i = 0; i < k; ++i) {
            int b = block[i];
            if (rep[b] < 0) rep[b] = tuple[i];
            else if (rep[b] != tuple[i]) return false;
        }
        for (int b = 0; b < num_blocks; ++b)
            for (int c = b + 1; c < num_blocks; ++c) {
                if (rep[b] == rep[c]) return false;
                if (g.adjacent(rep[b], rep[c]) != static_cast<bool>(edge[b][c])) return false;
            }
        for (int b = 0; b < num_blocks; ++b)
            for (int l = 0; l < num_labels; ++l)
                if (g.has_label(l, rep[b]) != static_cast<bool>(label[b][l])) return false;
        return true;
    }

    // Entailment of a conjunction of positive x-only atoms (vars are 1..k).
    bool entails(const std::vector<Atom>& psi) const {
        for (const Atom& a : psi) {
            switch (a.kind) {
                case AtomKind::Eq:
                    if (block[a.a - 1] != block[a.b - 1]) return false;
                    break;
                case AtomKind::Edge: {
                    int ba = block[a.a - 1], bb = block[a.b - 1];
                    if (ba == bb || !edge[ba][bb]) return false;
                    break;
                }
                case AtomKind::Label:
                    if (a.label >= num_labels || !label[block[a.a - 1]][a.label]) return false;
                    break;
            }
        }
        return true;
    }

    bool eq(int i, int j) const { return block[i - 1] == block[j - 1]; }
    bool adj(int i, int j) const {
        int a = block[i - 1], b = block[j - 1];
        return a != b && edge[a][b];
    }
};

inline std::vector<CompleteXClause> complete_x_clauses(int k, int num_labels,
                                                       int cap_k = 4) {
    if (k < 1) throw InputError("k must be >= 1");
    if (k > cap_k)
        throw ScaleError("complete clause enumeration limited to k <= " + std::to_string(cap_k));
    // set partitions as restricted growth strings
    std::vector<std::vector<int>> partitions;
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
    std::vector<CompleteXClause> out;
    for (const auto& part : partitions) {
        int nb = *std::max_element(part.begin(), part.end()) + 1;
        int pairs = nb * (nb - 1) / 2;
        for (uint32_t em = 0; em < (1u << pairs); ++em) {
            for (uint64_t lm = 0; lm < (1ull << (nb * num_labels)); ++lm) {
                CompleteXClause c;
                c.k = k;
                c.num_labels = num_labels;
                c.block = part;
                c.num_blocks = nb;
                c.edge.assign(nb, std::vector<char>(nb, 0));
                int p = 0;
                for (int b = 0; b < nb; ++b)
                    for (int d = b + 1; d < nb; ++d, ++p)
                        c.edge[b][d] = c.edge[d][b] = (em >> p) & 1u;
                c.label.assign(nb, std::vector<char>(num_labels, 0));
                for (int b = 0; b < nb; ++b)
                    for (int l = 0; l < num_labels; ++l)
                        c.label[b][l] = (lm >> (b * num_labels + l)) & 1ull;
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Clause splitting: omega == omega'(y, x-bar) & psi(x-bar)
// ---------------------------------------------------------------------------

// Literal forms that mention the counting variable.
struct YLit {
    enum Kind { EdgeYX, EqYX, LabelY } kind;
    int xi = 0;     // x index for EdgeYX / EqYX
    int label = -1; // for LabelY

    friend auto operator<=>(const YLit&, const YLit&) = default;
};

struct SplitClause {
    std::vector<YLit> ylits;  // literals mentioning y, canonically sorted
    std::vector<Atom> psi;    // x-only atoms

    friend auto operator<=>(const SplitClause&, const SplitClause&) = default;
};

inline SplitClause split_clause(const PositiveClause& omega) {
    SplitClause s;
    for (const Atom& a : omega.atoms) {
        bool mentions_y = a.a == kVarY || (a.kind != AtomKind::Label && a.b == kVarY);
        if (!mentions_y) {
            s.psi.push_back(a);
            continue;
        }
        switch (a.kind) {
            case AtomKind::Edge: s.ylits.push_back({YLit::EdgeYX, std::max(a.a, a.b), -1}); break;
            case AtomKind::Eq: s.ylits.push_back({YLit::EqYX, std::max(a.a, a.b), -1}); break;
            case AtomKind::Label: s.ylits.push_back({YLit::LabelY, 0, a.label}); break;
        }
    }
    std::sort(s.ylits.begin(), s.ylits.end());
    s.ylits.erase(std::unique(s.ylits.begin(), s.ylits.end()), s.ylits.end());
    std::sort(s.psi.begin(), s.psi.end());
    return s;
}

}  // namespace focount

#endif
