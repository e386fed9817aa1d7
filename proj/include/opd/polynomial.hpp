#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opd/monomial.hpp"
#include "opd/order.hpp"
#include "opd/rational.hpp"

namespace opd {

// A linear combination of shuffle tree monomials of one common arity with
// exact rational coefficients. Terms are kept strictly descending in the
// monomial order and never carry a zero coefficient; the zero polynomial is
// the empty term list.
struct Polynomial {
    std::vector<std::pair<Monomial, Rat>> terms;
    int arity = 0;

    bool is_zero() const { return terms.empty(); }
    const Monomial& lead() const {
        if (terms.empty()) throw std::logic_error("lead of zero polynomial");
        return terms.front().first;
    }
    const Rat& lead_coeff() const {
        if (terms.empty()) throw std::logic_error("lead of zero polynomial");
        return terms.front().second;
    }
    bool operator==(const Polynomial&) const = default;
};

// Builds the canonical form from arbitrary (monomial, coefficient) pairs:
// merges like terms, drops zeros, sorts descending.
inline Polynomial make_polynomial(std::vector<std::pair<Monomial, Rat>> raw,
                                  const MonomialOrder& ord, int arity = -1) {
    Polynomial p;
    for (auto& [m, c] : raw) {
        if (arity < 0) arity = m.arity();
        else if (m.arity() != arity)
            throw std::invalid_argument("mixed arities in polynomial");
    }
    std::sort(raw.begin(), raw.end(), [&](const auto& a, const auto& b) {
        return compare(a.first, b.first, ord) == Cmp::Greater;
    });
    for (auto& [m, c] : raw) {
        if (c == 0) continue;
        if (!p.terms.empty() && p.terms.back().first == m) p.terms.back().second += c;
        else p.terms.emplace_back(std::move(m), std::move(c));
        if (p.terms.back().second == 0) p.terms.pop_back();
    }
    p.arity = arity > 0 ? arity : 0;
    if (p.arity == 0 && !p.terms.empty()) p.arity = p.terms.front().first.arity();
    return p;
}

inline Polynomial poly_add(const Polynomial& p, const Polynomial& q, const MonomialOrder& ord) {
    if (!p.terms.empty() && !q.terms.empty() && p.arity != q.arity)
        throw std::invalid_argument("arity mismatch in poly_add");
    Polynomial out;
    out.arity = p.terms.empty() ? q.arity : p.arity;
    size_t i = 0, j = 0;
    while (i < p.terms.size() || j < q.terms.size()) {
        if (i == p.terms.size()) { out.terms.push_back(q.terms[j++]); continue; }
        if (j == q.terms.size()) { out.terms.push_back(p.terms[i++]); continue; }
        Cmp c = compare(p.terms[i].first, q.terms[j].first, ord);
        if (c == Cmp::Greater) out.terms.push_back(p.terms[i++]);
        else if (c == Cmp::Less) out.terms.push_back(q.terms[j++]);
        else {
            Rat s = p.terms[i].second + q.terms[j].second;
            if (s != 0) out.terms.emplace_back(p.terms[i].first, std::move(s));
            ++i; ++j;
        }
    }
    return out;
}

inline Polynomial poly_scale(const Polynomial& p, const Rat& c) {
    Polynomial out;
    out.arity = p.arity;
    if (c == 0) return out;
    out.terms = p.terms;
    for (auto& t : out.terms) t.second *= c;
    return out;
}

inline Polynomial poly_sub(const Polynomial& p, const Polynomial& q, const MonomialOrder& ord) {
    return poly_add(p, poly_scale(q, Rat(-1)), ord);
}

inline Polynomial poly_monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return poly_scale(p, Rat(1) / p.lead_coeff());
}

inline std::string render(const Polynomial& p, const Alphabet& alpha) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms) {
        Rat a = c;
        if (first) {
            if (a < 0) { out += "- "; a = -a; }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (a != 1) out += to_string(a) + " ";
        out += render(m, alpha);
        first = false;
    }
    return out;
}

}  // namespace opd
