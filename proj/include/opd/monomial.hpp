#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace opd {

// All generators in this engine are binary; higher arities are out of scope.
struct Generator {
    std::string name;
    int arity = 2;
};

struct Alphabet {
    std::vector<Generator> gens;

    int add(const std::string& name) {
        if (find(name) >= 0) throw std::invalid_argument("duplicate generator: " + name);
        gens.push_back({name, 2});
        return static_cast<int>(gens.size()) - 1;
    }
    int find(const std::string& name) const {
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == name) return static_cast<int>(i);
        return -1;
    }
    int size() const { return static_cast<int>(gens.size()); }
};

// A shuffle tree monomial in preorder encoding: an internal node carrying
// generator g is stored as -(g+1), a leaf with label l (1-based) as l.
// The arity-1 identity monomial is the single leaf {1}.
struct Monomial {
    std::vector<int8_t> code;

    bool operator==(const Monomial&) const = default;
    auto operator<=>(const Monomial&) const = default;  // structural only, not the monomial order

    bool empty() const { return code.empty(); }
    static bool is_leaf_at(int8_t c) { return c > 0; }
    static int gen_at(int8_t c) { return -c - 1; }

    int arity() const {
        int n = 0;
        for (int8_t c : code) n += (c > 0);
        return n;
    }
    int weight() const { return static_cast<int>(code.size()) - arity(); }

    // Index one past the subtree starting at pos.
    size_t subtree_end(size_t pos) const {
        int pending = 1;
        while (pending > 0) {
            if (code[pos] > 0) --pending;
            else ++pending;  // binary node: consumes one, adds two
            ++pos;
        }
        return pos;
    }

    int min_leaf(size_t pos, size_t end) const {
        int m = 1 << 20;
        for (size_t i = pos; i < end; ++i)
            if (code[i] > 0) m = std::min(m, static_cast<int>(code[i]));
        return m;
    }
    int min_leaf() const { return min_leaf(0, code.size()); }

    static Monomial leaf(int label) { return Monomial{{static_cast<int8_t>(label)}}; }
    static Monomial node(int gen, const Monomial& l, const Monomial& r) {
        Monomial m;
        m.code.reserve(1 + l.code.size() + r.code.size());
        m.code.push_back(static_cast<int8_t>(-gen - 1));
        m.code.insert(m.code.end(), l.code.begin(), l.code.end());
        m.code.insert(m.code.end(), r.code.begin(), r.code.end());
        return m;
    }
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        size_t h = 1469598103934665603ull;
        for (int8_t c : m.code) {
            h ^= static_cast<uint8_t>(c);
            h *= 1099511628211ull;
        }
        return h;
    }
};

inline bool validate_shuffle(const Monomial& m) {
    if (m.code.empty()) return false;
    int n = m.arity();
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int8_t c : m.code) {
        if (c > 0) {
            if (c > n || seen[static_cast<size_t>(c)]) return false;
            seen[static_cast<size_t>(c)] = true;
        }
    }
    // min-leaf increase at every internal node, checked by parallel descent
    struct Walk {
        const Monomial& m;
        bool ok = true;
        // returns (end, min) of subtree at pos
        std::pair<size_t, int> go(size_t pos) {
            if (m.code[pos] > 0) return {pos + 1, m.code[pos]};
            auto [lend, lmin] = go(pos + 1);
            auto [rend, rmin] = go(lend);
            if (lmin >= rmin) ok = false;
            return {rend, std::min(lmin, rmin)};
        }
    } w{m};
    auto [end, mn] = w.go(0);
    (void)mn;
    return w.ok && end == m.code.size();
}

// Canonical text rendering matching the notation x(z(1 3) 2).
inline std::string render(const Monomial& m, const Alphabet& alpha) {
    std::string out;
    struct Walk {
        const Monomial& m;
        const Alphabet& alpha;
        std::string& out;
        size_t go(size_t pos) {
            if (m.code[pos] > 0) {
                out += std::to_string(static_cast<int>(m.code[pos]));
                return pos + 1;
            }
            out += alpha.gens[static_cast<size_t>(Monomial::gen_at(m.code[pos]))].name;
            out += '(';
            size_t next = go(pos + 1);
            out += ' ';
            next = go(next);
            out += ')';
            return next;
        }
    } w{m, alpha, out};
    w.go(0);
    return out;
}

// Parses the canonical rendering back into a Monomial. Throws on syntax
// errors or unknown generators; does not check the shuffle condition.
inline Monomial parse_monomial(const std::string& text, const Alphabet& alpha) {
    size_t pos = 0;
    auto skip = [&] { while (pos < text.size() && text[pos] == ' ') ++pos; };
    struct Fail : std::invalid_argument {
        using std::invalid_argument::invalid_argument;
    };
    std::function<Monomial()> term = [&]() -> Monomial {
        skip();
        if (pos >= text.size()) throw Fail("unexpected end of monomial: " + text);
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            int label = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                label = label * 10 + (text[pos++] - '0');
            return Monomial::leaf(label);
        }
        size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_' || text[pos] == '-'))
            ++pos;
        std::string name = text.substr(start, pos - start);
        int g = alpha.find(name);
        if (g < 0) throw Fail("unknown generator: " + name);
        skip();
        if (pos >= text.size() || text[pos] != '(') throw Fail("expected ( after " + name);
        ++pos;
        Monomial l = term();
        Monomial r = term();
        skip();
        if (pos >= text.size() || text[pos] != ')') throw Fail("expected ) in " + text);
        ++pos;
        return Monomial::node(g, l, r);
    };
    Monomial m = term();
    skip();
    if (pos != text.size()) throw Fail("trailing input in monomial: " + text);
    return m;
}

// Shuffle composition: substitutes `inner` (arity k) into leaf `slot` of
// `outer` (arity r); `inner_labels` is the sorted set of result labels the
// inner leaves take, the remaining labels go to the other slots of `outer`
// in increasing order. The partition must have increasing block minima,
// which pins min(inner_labels) to position `slot`.
inline Monomial shuffle_compose(const Monomial& outer, int slot, const Monomial& inner,
                                const std::vector<int>& inner_labels) {
    int r = outer.arity();
    int k = inner.arity();
    int n = r + k - 1;
    if (slot < 1 || slot > r) throw std::invalid_argument("invalid composition slot");
    if (static_cast<int>(inner_labels.size()) != k)
        throw std::invalid_argument("label block size must equal inner arity");
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    for (size_t i = 0; i < inner_labels.size(); ++i) {
        int l = inner_labels[i];
        if (l < 1 || l > n || used[static_cast<size_t>(l)])
            throw std::invalid_argument("label block is not a subset of 1..n");
        if (i > 0 && inner_labels[i] <= inner_labels[i - 1])
            throw std::invalid_argument("label block must be strictly increasing");
        used[static_cast<size_t>(l)] = true;
    }
    // increasing-minima condition: exactly slot-1 labels fall below the block min
    int below = 0;
    for (int l = 1; l < inner_labels[0]; ++l) below += !used[static_cast<size_t>(l)];
    if (below != slot - 1)
        throw std::invalid_argument("label block violates the shuffle-minima condition");

    std::vector<int> singles;  // labels for outer slots other than `slot`, ascending
    for (int l = 1; l <= n; ++l)
        if (!used[static_cast<size_t>(l)]) singles.push_back(l);

    Monomial out;
    out.code.reserve(outer.code.size() + inner.code.size() - 1);
    for (int8_t c : outer.code) {
        if (c <= 0) {
            out.code.push_back(c);
        } else if (static_cast<int>(c) == slot) {
            for (int8_t ic : inner.code)
                out.code.push_back(ic > 0 ? static_cast<int8_t>(inner_labels[static_cast<size_t>(ic) - 1])
                                          : ic);
        } else {
            int idx = static_cast<int>(c) - (c > slot ? 2 : 1);
            out.code.push_back(static_cast<int8_t>(singles[static_cast<size_t>(idx)]));
        }
    }
    return out;
}

namespace detail {

// All shuffle trees whose leaves carry exactly the given sorted label set.
inline std::vector<Monomial> enumerate_on(const Alphabet& alpha, const std::vector<int>& labels) {
    if (labels.size() == 1) return {Monomial::leaf(labels[0])};
    std::vector<Monomial> out;
    size_t m = labels.size() - 1;  // labels[0] is forced into the left child
    for (uint32_t mask = 1; mask < (1u << m); ++mask) {
        // mask bit i set: labels[i+1] joins the right child
        std::vector<int> left{labels[0]}, right;
        for (size_t i = 0; i < m; ++i)
            ((mask >> i) & 1 ? right : left).push_back(labels[i + 1]);
        auto ls = enumerate_on(alpha, left);
        auto rs = enumerate_on(alpha, right);
        for (int g = 0; g < alpha.size(); ++g)
            for (const auto& l : ls)
                for (const auto& r : rs) out.push_back(Monomial::node(g, l, r));
    }
    return out;
}

}  // namespace detail

// All valid shuffle tree monomials of arity n, each exactly once.
inline std::vector<Monomial> enumerate_monomials(const Alphabet& alpha, int n) {
    if (n < 1) throw std::invalid_argument("arity must be positive");
    std::vector<int> labels(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<size_t>(i)] = i + 1;
    return detail::enumerate_on(alpha, labels);
}

}  // namespace opd
