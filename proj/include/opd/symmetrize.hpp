#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "opd/polynomial.hpp"

namespace opd {

enum class Symmetry { Plain, Symmetric, Antisymmetric };

struct SymbolicOp {
    std::string name;
    Symmetry symmetry = Symmetry::Plain;
};

// A fully parenthesized multilinear term: either a variable x_i or a binary
// application of a symbolic operation.
struct TermNode {
    int op = -1;   // index into the presentation's op list; -1 for a variable
    int var = 0;   // 1-based variable index when op < 0
    std::vector<TermNode> children;

    static TermNode variable(int index) {
        TermNode t;
        t.var = index;
        return t;
    }
    static TermNode apply(int op, TermNode left, TermNode right) {
        TermNode t;
        t.op = op;
        t.children = {std::move(left), std::move(right)};
        return t;
    }
    bool operator==(const TermNode&) const = default;
};

// A formal linear combination of multilinear terms, all over x1..xn.
struct IdentityExpr {
    std::string name;
    std::vector<std::pair<Rat, TermNode>> terms;
    int arity = 0;
};

inline void collect_vars(const TermNode& t, std::vector<int>& out) {
    if (t.op < 0) out.push_back(t.var);
    for (const auto& c : t.children) collect_vars(c, out);
}

// Throws unless every term uses exactly the variables x1..xn, each once.
inline void check_multilinear(const IdentityExpr& id) {
    for (const auto& [c, t] : id.terms) {
        std::vector<int> vars;
        collect_vars(t, vars);
        std::sort(vars.begin(), vars.end());
        if (static_cast<int>(vars.size()) != id.arity)
            throw std::invalid_argument("identity " + id.name + " is not multilinear");
        for (int i = 0; i < id.arity; ++i)
            if (vars[static_cast<size_t>(i)] != i + 1)
                throw std::invalid_argument("identity " + id.name +
                                            " must use the variables x1..xn exactly once each");
    }
}

// The shuffle alphabet of a presentation: symmetric and antisymmetric ops
// map to a single generator, a plain op to a twin pair (op, op_t) with
// op(2 1) = op_t(1 2).
struct ShuffleSignature {
    Alphabet alpha;
    struct OpMap {
        int gen = -1;
        int twin = -1;      // generator used when the children are swapped
        int swap_sign = 1;  // -1 for antisymmetric ops
    };
    std::vector<OpMap> ops;
};

inline ShuffleSignature compile_alphabet(const std::vector<SymbolicOp>& ops) {
    ShuffleSignature sig;
    for (const auto& op : ops) {
        ShuffleSignature::OpMap m;
        m.gen = sig.alpha.add(op.name);
        switch (op.symmetry) {
            case Symmetry::Plain:
                m.twin = sig.alpha.add(op.name + "_t");
                break;
            case Symmetry::Symmetric:
                m.twin = m.gen;
                break;
            case Symmetry::Antisymmetric:
                m.twin = m.gen;
                m.swap_sign = -1;
                break;
        }
        sig.ops.push_back(m);
    }
    return sig;
}

struct SignedMonomial {
    int sign = 1;
    Monomial monomial;
};

// Recursive min-leaf sorting into shuffle-canonical form, with twin/sign
// bookkeeping for out-of-order children.
inline SignedMonomial to_shuffle(const TermNode& term, const ShuffleSignature& sig) {
    struct Walk {
        const ShuffleSignature& sig;
        int sign = 1;
        // returns (monomial, min leaf)
        std::pair<Monomial, int> go(const TermNode& t) {
            if (t.op < 0) {
                if (t.var < 1) throw std::invalid_argument("variable index must be positive");
                return {Monomial::leaf(t.var), t.var};
            }
            auto [l, lmin] = go(t.children[0]);
            auto [r, rmin] = go(t.children[1]);
            const auto& op = sig.ops[static_cast<size_t>(t.op)];
            if (lmin < rmin) return {Monomial::node(op.gen, l, r), lmin};
            sign *= op.swap_sign;
            return {Monomial::node(op.twin, r, l), rmin};
        }
    } w{sig};
    auto [m, mn] = w.go(term);
    (void)mn;
    return {w.sign, std::move(m)};
}

inline TermNode relabel(const TermNode& t, const std::vector<int>& perm) {
    if (t.op < 0) return TermNode::variable(perm[static_cast<size_t>(t.var) - 1]);
    return TermNode::apply(t.op, relabel(t.children[0], perm), relabel(t.children[1], perm));
}

inline Polynomial identity_to_polynomial(const IdentityExpr& id, const std::vector<int>& perm,
                                         const ShuffleSignature& sig, const MonomialOrder& ord) {
    std::vector<std::pair<Monomial, Rat>> raw;
    for (const auto& [c, t] : id.terms) {
        SignedMonomial sm = to_shuffle(relabel(t, perm), sig);
        raw.emplace_back(std::move(sm.monomial), c * sm.sign);
    }
    return make_polynomial(std::move(raw), ord, id.arity);
}

// Exact Gaussian elimination over the monomial basis: keeps pivot rows
// keyed by their leading monomial.
class SpanBasis {
public:
    explicit SpanBasis(const MonomialOrder& ord) : ord_(ord) {}

    // Reduces p against the pivots; returns the remainder.
    Polynomial reduce(Polynomial p) const {
        while (!p.is_zero()) {
            auto it = pivots_.find(p.lead());
            if (it == pivots_.end()) break;
            p = poly_sub(p, poly_scale(it->second, p.lead_coeff() / it->second.lead_coeff()), ord_);
        }
        return p;
    }
    // Returns true if p enlarged the span.
    bool insert(const Polynomial& p) {
        Polynomial r = reduce(p);
        if (r.is_zero()) return false;
        // fully reduce below the lead as well, keeping the basis echelon
        Polynomial echelon = r;
        for (size_t i = 1; i < echelon.terms.size();) {
            auto it = pivots_.find(echelon.terms[i].first);
            if (it == pivots_.end()) { ++i; continue; }
            echelon = poly_sub(echelon,
                               poly_scale(it->second, echelon.terms[i].second / it->second.lead_coeff()),
                               ord_);
        }
        pivots_.emplace(echelon.lead(), echelon);
        return true;
    }
    bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }
    size_t rank() const { return pivots_.size(); }

private:
    const MonomialOrder& ord_;
    std::unordered_map<Monomial, Polynomial, MonomialHash> pivots_;
};

inline size_t span_rank(const std::vector<Polynomial>& polys, const MonomialOrder& ord) {
    SpanBasis basis(ord);
    for (const auto& p : polys) basis.insert(p);
    return basis.rank();
}

inline bool same_span(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                      const MonomialOrder& ord) {
    SpanBasis sa(ord), sb(ord);
    for (const auto& p : a) sa.insert(p);
    for (const auto& p : b) sb.insert(p);
    if (sa.rank() != sb.rank()) return false;
    for (const auto& p : a)
        if (!sb.contains(p)) return false;
    for (const auto& p : b)
        if (!sa.contains(p)) return false;
    return true;
}

// Shuffle relations spanned by the identity under all variable
// permutations, thinned to a linearly independent generating set.
inline std::vector<Polynomial> multilinear_orbit(const IdentityExpr& id, const ShuffleSignature& sig,
                                                 const MonomialOrder& ord) {
    check_multilinear(id);
    std::vector<int> perm(static_cast<size_t>(id.arity));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Polynomial> out;
    SpanBasis basis(ord);
    do {
        Polynomial p = identity_to_polynomial(id, perm, sig, ord);
        if (!p.is_zero() && basis.insert(p)) out.push_back(std::move(p));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace opd
