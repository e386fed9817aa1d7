#pragma once

#include <stdexcept>
#include <vector>

#include "opd/monomial.hpp"

namespace opd {

enum class Cmp { Less, Equal, Greater };

// Graded path-lexicographic order on shuffle trees. A monomial is keyed by
// the root-to-leaf words of generator ranks read in leaf-LABEL order
// (reading in label order is what makes the order compatible with shuffle
// composition, since relabeling is monotone on labels), tie-broken by the
// leaf labels in planar order. Words compare degree-first then letterwise,
// so the left comb x(x(1 2) 3) beats the right comb x(1 x(2 3)); on a full
// word tie the lexicographically larger planar label sequence wins. The
// order is total and admissible (checked exhaustively for small arities in
// the test suite).
struct MonomialOrder {
    std::vector<int> rank;  // rank[gen id]; higher rank = larger letter

    static MonomialOrder declaration_order(const Alphabet& alpha) {
        MonomialOrder o;
        o.rank.resize(static_cast<size_t>(alpha.size()));
        for (int i = 0; i < alpha.size(); ++i) o.rank[static_cast<size_t>(i)] = i;
        return o;
    }
    // precedence: generator names from smallest to largest letter
    static MonomialOrder from_precedence(const Alphabet& alpha,
                                         const std::vector<std::string>& precedence) {
        if (static_cast<int>(precedence.size()) != alpha.size())
            throw std::invalid_argument("precedence list must name every generator once");
        MonomialOrder o;
        o.rank.assign(static_cast<size_t>(alpha.size()), -1);
        for (size_t i = 0; i < precedence.size(); ++i) {
            int g = alpha.find(precedence[i]);
            if (g < 0) throw std::invalid_argument("unknown generator in precedence: " + precedence[i]);
            if (o.rank[static_cast<size_t>(g)] >= 0)
                throw std::invalid_argument("repeated generator in precedence: " + precedence[i]);
            o.rank[static_cast<size_t>(g)] = static_cast<int>(i);
        }
        return o;
    }
};

struct PathKey {
    std::vector<std::vector<int>> words;  // words[i] = path word of the leaf labeled i+1
    std::vector<int> labels;              // leaf labels in planar order
};

inline PathKey path_key(const Monomial& m, const MonomialOrder& ord) {
    PathKey k;
    k.words.resize(static_cast<size_t>(m.arity()));
    std::vector<int> path;
    struct Walk {
        const Monomial& m;
        const MonomialOrder& ord;
        PathKey& k;
        std::vector<int>& path;
        size_t go(size_t pos) {
            if (m.code[pos] > 0) {
                k.words[static_cast<size_t>(m.code[pos]) - 1] = path;
                k.labels.push_back(m.code[pos]);
                return pos + 1;
            }
            path.push_back(ord.rank[static_cast<size_t>(Monomial::gen_at(m.code[pos]))]);
            size_t next = go(pos + 1);
            next = go(next);
            path.pop_back();
            return next;
        }
    } w{m, ord, k, path};
    w.go(0);
    return k;
}

inline Cmp compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    int na = a.arity(), nb = b.arity();
    if (na != nb) throw std::invalid_argument("compare requires equal arity");
    if (a == b) return Cmp::Equal;
    PathKey ka = path_key(a, ord), kb = path_key(b, ord);
    for (size_t i = 0; i < ka.words.size(); ++i) {
        const auto& u = ka.words[i];
        const auto& v = kb.words[i];
        if (u.size() != v.size()) return u.size() > v.size() ? Cmp::Greater : Cmp::Less;
        for (size_t j = 0; j < u.size(); ++j)
            if (u[j] != v[j]) return u[j] > v[j] ? Cmp::Greater : Cmp::Less;
    }
    for (size_t i = 0; i < ka.labels.size(); ++i)
        if (ka.labels[i] != kb.labels[i])
            return ka.labels[i] > kb.labels[i] ? Cmp::Greater : Cmp::Less;
    return Cmp::Equal;  // unreachable: the key determines the tree
}

inline bool greater(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    return compare(a, b, ord) == Cmp::Greater;
}

}  // namespace opd
