#pragma once

// Independent evaluation oracle: interprets a two-operation signature in the
// free Poisson algebra with a derivation d, sending
//
//   mul(a, b)  ->  a * d(b)        (the Novikov-type product)
//   bra(a, b)  ->  {a, b}          (the Poisson bracket)
//
// An identity vanishes under this interpretation iff its image is zero in
// Sym(L(V)), which is decided exactly by expanding every Lie factor in
// associative-word coordinates: Sym of the embedding L(V) -> T(V) is
// injective, so the multiset-of-words coordinates are faithful.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "opd/presentation.hpp"

namespace opd {

namespace pois {

struct Letter {
    int var = 0;    // 1-based variable index
    int order = 0;  // how many times d has been applied
    auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;        // associative word in T(V)
using LieFactor = std::map<Word, Rat>;   // a Lie element in word coordinates

// A commutative product of Lie factors; an element is an unreduced sum.
using PMonomial = std::vector<LieFactor>;
struct Element {
    std::vector<std::pair<Rat, PMonomial>> terms;
};

inline Element variable(int i) {
    LieFactor f;
    f[{Letter{i, 0}}] = 1;
    return {{{Rat(1), {std::move(f)}}}};
}

// d on a Lie factor: the letterwise derivation of T(V) restricted to L(V).
inline LieFactor derive(const LieFactor& f) {
    LieFactor out;
    for (const auto& [w, c] : f)
        for (size_t i = 0; i < w.size(); ++i) {
            Word v = w;
            ++v[i].order;
            out[std::move(v)] += c;
        }
    return out;
}

// d on a product monomial, by Leibniz over the factors.
inline Element derive(const Element& a) {
    Element out;
    for (const auto& [c, mono] : a.terms)
        for (size_t i = 0; i < mono.size(); ++i) {
            PMonomial m = mono;
            m[i] = derive(m[i]);
            out.terms.emplace_back(c, std::move(m));
        }
    return out;
}

inline Element product(const Element& a, const Element& b) {
    Element out;
    for (const auto& [ca, ma] : a.terms)
        for (const auto& [cb, mb] : b.terms) {
            PMonomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.terms.emplace_back(ca * cb, std::move(m));
        }
    return out;
}

// [f, g] = fg - gf in word coordinates; Lie elements are closed under it.
inline LieFactor commutator(const LieFactor& f, const LieFactor& g) {
    LieFactor out;
    for (const auto& [u, cu] : f)
        for (const auto& [v, cv] : g) {
            Word uv = u, vu = v;
            uv.insert(uv.end(), v.begin(), v.end());
            vu.insert(vu.end(), u.begin(), u.end());
            out[std::move(uv)] += cu * cv;
            out[std::move(vu)] -= cu * cv;
        }
    return out;
}

// The Poisson bracket, a biderivation pairing factors through [ , ].
inline Element bracket(const Element& a, const Element& b) {
    Element out;
    for (const auto& [ca, ma] : a.terms)
        for (const auto& [cb, mb] : b.terms)
            for (size_t i = 0; i < ma.size(); ++i)
                for (size_t j = 0; j < mb.size(); ++j) {
                    PMonomial rest;
                    for (size_t k = 0; k < ma.size(); ++k)
                        if (k != i) rest.push_back(ma[k]);
                    for (size_t k = 0; k < mb.size(); ++k)
                        if (k != j) rest.push_back(mb[k]);
                    rest.push_back(commutator(ma[i], mb[j]));
                    out.terms.emplace_back(ca * cb, std::move(rest));
                }
    return out;
}

// Faithful coordinates: multisets of associative words.
using Coordinates = std::map<std::vector<Word>, Rat>;

inline Coordinates expand(const Element& a) {
    Coordinates out;
    struct Walk {
        Coordinates& out;
        const PMonomial& mono;
        std::vector<Word> key;
        void go(size_t i, Rat c) {
            if (c == 0) return;
            if (i == mono.size()) {
                std::vector<Word> sorted = key;
                std::sort(sorted.begin(), sorted.end());
                auto it = out.emplace(std::move(sorted), 0).first;
                it->second += c;
                if (it->second == 0) out.erase(it);
                return;
            }
            for (const auto& [w, cw] : mono[i]) {
                key.push_back(w);
                go(i + 1, c * cw);
                key.pop_back();
            }
        }
    };
    for (const auto& [c, mono] : a.terms) {
        Walk w{out, mono, {}};
        w.go(0, c);
    }
    return out;
}

inline bool is_zero(const Element& a) { return expand(a).empty(); }

}  // namespace pois

// Evaluates a term under the interpretation above; the presentation supplies
// the op names ("mul" and "bra").
inline pois::Element tau_term(const TermNode& t, const Presentation& pres) {
    if (t.op < 0) return pois::variable(t.var);
    pois::Element l = tau_term(t.children[0], pres);
    pois::Element r = tau_term(t.children[1], pres);
    const std::string& name = pres.ops[static_cast<size_t>(t.op)].name;
    if (name == "mul") return pois::product(l, pois::derive(r));
    if (name == "bra") return pois::bracket(l, r);
    throw std::invalid_argument("the differential Poisson oracle only interprets mul and bra");
}

inline pois::Element tau_identity(const IdentityExpr& id, const Presentation& pres) {
    pois::Element out;
    for (const auto& [c, t] : id.terms) {
        pois::Element e = tau_term(t, pres);
        for (auto& [ec, mono] : e.terms) out.terms.emplace_back(c * ec, std::move(mono));
    }
    return out;
}

struct TauReport {
    std::string identity;
    bool vanishes = false;
    size_t support = 0;  // nonzero coordinates of the image
};

inline TauReport tau_check(const IdentityExpr& id, const Presentation& pres) {
    check_multilinear(id);
    pois::Coordinates coords = pois::expand(tau_identity(id, pres));
    return {id.name, coords.empty(), coords.size()};
}

}  // namespace opd
