#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "opd/polynomial.hpp"

namespace opd {

// An embedding of a divisor monomial (a rule's lead) inside a monomial m:
// the matched internal nodes of m plus, for every leaf j of the divisor,
// the span of the branch of m hanging there. Replaying shuffle
// compositions along the branches reconstructs m exactly.
struct Occurrence {
    size_t root_pos = 0;                               // preorder index of the matched root in m
    std::vector<size_t> nodes;                         // matched internal nodes, divisor-preorder order
    std::vector<std::pair<size_t, size_t>> branches;   // branches[j-1] = code span for divisor leaf j

    bool operator==(const Occurrence&) const = default;
};

namespace detail {

// Parallel descent of divisor and m. Returns false on a structural or
// generator mismatch; fills matched nodes and branches (indexed by the
// divisor's planar leaf position first, remapped by label afterwards).
inline bool match_at(const Monomial& lead, const Monomial& m, size_t mpos, Occurrence& occ) {
    occ.root_pos = mpos;
    occ.nodes.clear();
    occ.branches.assign(static_cast<size_t>(lead.arity()), {0, 0});
    struct Walk {
        const Monomial& lead;
        const Monomial& m;
        Occurrence& occ;
        bool ok = true;
        // returns (next lead pos, next m pos)
        std::pair<size_t, size_t> go(size_t lpos, size_t mpos) {
            if (!ok) return {lpos, mpos};
            int8_t lc = lead.code[lpos];
            if (lc > 0) {
                size_t end = m.subtree_end(mpos);
                occ.branches[static_cast<size_t>(lc) - 1] = {mpos, end};
                return {lpos + 1, end};
            }
            if (m.code[mpos] > 0 || m.code[mpos] != lc) {
                ok = false;
                return {lpos, mpos};
            }
            occ.nodes.push_back(mpos);
            auto [l1, m1] = go(lpos + 1, mpos + 1);
            return go(l1, m1);
        }
    } w{lead, m, occ};
    w.go(0, mpos);
    if (!w.ok) return false;
    // label compatibility: branch minima must be increasing in the divisor's
    // leaf labels, otherwise m is not a shuffle composition over this copy
    int prev = 0;
    for (const auto& [b, e] : occ.branches) {
        int mn = m.min_leaf(b, e);
        if (mn <= prev) return false;
        prev = mn;
    }
    return true;
}

}  // namespace detail

// All distinct embeddings of lead into m as an operadic divisor.
inline std::vector<Occurrence> find_divisor_embeddings(const Monomial& lead, const Monomial& m) {
    std::vector<Occurrence> out;
    if (lead.arity() > m.arity()) return out;
    Occurrence occ;
    for (size_t pos = 0; pos < m.code.size(); ++pos) {
        if (m.code[pos] > 0) continue;
        if (detail::match_at(lead, m, pos, occ)) out.push_back(occ);
    }
    return out;
}

inline bool divides(const Monomial& lead, const Monomial& m) {
    if (lead.arity() > m.arity()) return false;
    Occurrence occ;
    for (size_t pos = 0; pos < m.code.size(); ++pos)
        if (m.code[pos] <= 0 && detail::match_at(lead, m, pos, occ)) return true;
    return false;
}

// Replaces the embedded divisor copy in m by the monomial t (same arity as
// the divisor): t's leaf j picks up the branch that divisor leaf j carried.
inline Monomial splice(const Monomial& m, const Occurrence& occ, const Monomial& t) {
    Monomial out;
    size_t copy_end = occ.root_pos;
    out.code.assign(m.code.begin(), m.code.begin() + static_cast<long>(copy_end));
    for (int8_t tc : t.code) {
        if (tc > 0) {
            auto [b, e] = occ.branches[static_cast<size_t>(tc) - 1];
            out.code.insert(out.code.end(), m.code.begin() + static_cast<long>(b),
                            m.code.begin() + static_cast<long>(e));
        } else {
            out.code.push_back(tc);
        }
    }
    size_t old_end = m.subtree_end(occ.root_pos);
    out.code.insert(out.code.end(), m.code.begin() + static_cast<long>(old_end), m.code.end());
    return out;
}

// A monic rewrite rule lead -> tail; the underlying relation is lead - tail
// and every tail monomial is strictly below lead.
struct RewriteRule {
    Monomial lead;
    Polynomial tail;
    int arity = 0;

    Polynomial relation(const MonomialOrder& ord) const {
        Polynomial l;
        l.arity = arity;
        l.terms.emplace_back(lead, Rat(1));
        return poly_sub(l, tail, ord);
    }
};

inline RewriteRule make_rule(const Polynomial& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw std::invalid_argument("cannot orient the zero polynomial");
    Polynomial monic = poly_monic(p);
    RewriteRule r;
    r.lead = monic.lead();
    r.arity = monic.arity;
    monic.terms.erase(monic.terms.begin());
    r.tail = poly_scale(monic, Rat(-1));
    return r;
}

// Applies rule at occ inside m: returns the polynomial that replaces m.
inline Polynomial rewrite_monomial(const Monomial& m, const RewriteRule& rule, const Occurrence& occ,
                                   const MonomialOrder& ord) {
    std::vector<std::pair<Monomial, Rat>> raw;
    raw.reserve(rule.tail.terms.size());
    for (const auto& [t, c] : rule.tail.terms) raw.emplace_back(splice(m, occ, t), c);
    return make_polynomial(std::move(raw), ord, m.arity());
}

// One recorded rewrite step of a reduction certificate.
struct CertStep {
    int rule_id = -1;
    Monomial rewritten;      // the monomial that was replaced
    size_t occurrence_root;  // preorder index of the embedding root
    Polynomial result;       // the whole polynomial after this step
};

struct Certificate {
    Polynomial input;
    std::vector<CertStep> steps;
};

enum class ReduceStrategy { LeftmostLargest, RandomOccurrence };

// Rewrites p to normal form with respect to rules. The deterministic
// strategy always rewrites the largest reducible monomial with the first
// applicable rule at its first occurrence; the randomized strategy is used
// by the confluence property tests. Certificate recording is optional.
inline Polynomial normal_form(const Polynomial& p, const std::vector<RewriteRule>& rules,
                              const MonomialOrder& ord, Certificate* cert = nullptr,
                              ReduceStrategy strategy = ReduceStrategy::LeftmostLargest,
                              std::mt19937* rng = nullptr, int skip_rule = -1) {
    if (cert) {
        cert->input = p;
        cert->steps.clear();
    }
    Polynomial cur = p;
    while (true) {
        struct Red {
            size_t term;
            int rule;
            Occurrence occ;
        };
        std::optional<Red> pick;
        if (strategy == ReduceStrategy::LeftmostLargest) {
            for (size_t ti = 0; ti < cur.terms.size() && !pick; ++ti) {
                for (size_t ri = 0; ri < rules.size() && !pick; ++ri) {
                    if (static_cast<int>(ri) == skip_rule) continue;
                    if (rules[ri].arity > cur.arity) continue;
                    auto occs = find_divisor_embeddings(rules[ri].lead, cur.terms[ti].first);
                    if (!occs.empty()) pick = Red{ti, static_cast<int>(ri), occs.front()};
                }
            }
        } else {
            std::vector<Red> all;
            for (size_t ti = 0; ti < cur.terms.size(); ++ti)
                for (size_t ri = 0; ri < rules.size(); ++ri) {
                    if (static_cast<int>(ri) == skip_rule) continue;
                    if (rules[ri].arity > cur.arity) continue;
                    for (auto& occ : find_divisor_embeddings(rules[ri].lead, cur.terms[ti].first))
                        all.push_back({ti, static_cast<int>(ri), occ});
                }
            if (!all.empty()) {
                size_t k = rng ? (*rng)() % all.size() : 0;
                pick = all[k];
            }
        }
        if (!pick) break;
        const auto& [m, c] = cur.terms[pick->term];
        Monomial rewritten = m;
        Rat coeff = c;
        Polynomial replacement = poly_scale(
            rewrite_monomial(m, rules[static_cast<size_t>(pick->rule)], pick->occ, ord), coeff);
        Polynomial removed;
        removed.arity = cur.arity;
        removed.terms.emplace_back(m, coeff);
        cur = poly_add(poly_sub(cur, removed, ord), replacement, ord);
        if (cert)
            cert->steps.push_back({pick->rule, std::move(rewritten), pick->occ.root_pos, cur});
    }
    return cur;
}

// Replays a certificate from its input; returns false if any step fails to
// reproduce the recorded intermediate polynomial.
inline bool replay_certificate(const Certificate& cert, const std::vector<RewriteRule>& rules,
                               const MonomialOrder& ord) {
    Polynomial cur = cert.input;
    for (const auto& step : cert.steps) {
        if (step.rule_id < 0 || step.rule_id >= static_cast<int>(rules.size())) return false;
        const RewriteRule& rule = rules[static_cast<size_t>(step.rule_id)];
        auto it = std::find_if(cur.terms.begin(), cur.terms.end(),
                               [&](const auto& t) { return t.first == step.rewritten; });
        if (it == cur.terms.end()) return false;
        auto occs = find_divisor_embeddings(rule.lead, step.rewritten);
        auto oit = std::find_if(occs.begin(), occs.end(),
                                [&](const Occurrence& o) { return o.root_pos == step.occurrence_root; });
        if (oit == occs.end()) return false;
        Polynomial removed;
        removed.arity = cur.arity;
        removed.terms.emplace_back(it->first, it->second);
        Polynomial replacement = poly_scale(rewrite_monomial(step.rewritten, rule, *oit, ord), it->second);
        cur = poly_add(poly_sub(cur, removed, ord), replacement, ord);
        if (!(cur == step.result)) return false;
    }
    return true;
}

}  // namespace opd
