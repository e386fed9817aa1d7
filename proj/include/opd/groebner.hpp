#pragma once

#include <atomic>
#include <map>
#include <thread>
#include <unordered_set>
#include <vector>

#include "opd/rewrite.hpp"

namespace opd {

// Monic rewrite rules certified through all critical pairs of arity <=
// certified_arity. Rules are pairwise inter-reduced.
struct GroebnerBasis {
    std::vector<RewriteRule> rules;
    int certified_arity = 0;
};

// Shared cache of monomial enumerations per arity.
class MonomialCache {
public:
    explicit MonomialCache(const Alphabet& alpha) : alpha_(alpha) {}
    const std::vector<Monomial>& arity(int n) {
        auto it = by_arity_.find(n);
        if (it == by_arity_.end())
            it = by_arity_.emplace(n, enumerate_monomials(alpha_, n)).first;
        return it->second;
    }
    const Alphabet& alphabet() const { return alpha_; }

private:
    Alphabet alpha_;
    std::map<int, std::vector<Monomial>> by_arity_;
};

// A critical pair: two embeddings of rule leads into a common multiple w
// which share at least one internal node and jointly cover all of w.
struct Overlap {
    Monomial w;
    int rule1 = 0, rule2 = 0;
    Occurrence occ1, occ2;
};

namespace detail {

inline bool share_and_cover(const Occurrence& a, const Occurrence& b, int total_nodes) {
    // node lists are sorted preorder indices
    size_t i = 0, j = 0, both = 0, uni = 0;
    while (i < a.nodes.size() && j < b.nodes.size()) {
        if (a.nodes[i] == b.nodes[j]) { ++both; ++uni; ++i; ++j; }
        else if (a.nodes[i] < b.nodes[j]) { ++uni; ++i; }
        else { ++uni; ++j; }
    }
    uni += a.nodes.size() - i + b.nodes.size() - j;
    return both > 0 && uni == static_cast<size_t>(total_nodes);
}

inline std::string overlap_key(const Overlap& o, const std::vector<RewriteRule>& rules) {
    std::string k;
    auto put = [&](const Monomial& m) {
        k.append(reinterpret_cast<const char*>(m.code.data()), m.code.size());
        k.push_back(0);
    };
    put(rules[static_cast<size_t>(o.rule1)].lead);
    k += std::to_string(o.occ1.root_pos) + "|";
    put(rules[static_cast<size_t>(o.rule2)].lead);
    k += std::to_string(o.occ2.root_pos) + "|";
    put(o.w);
    return k;
}

template <class F>
void parallel_for(size_t n, int workers, F&& f) {
    if (workers <= 1 || n < 2) {
        for (size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    int count = std::min<int>(workers, static_cast<int>(n));
    for (int t = 0; t < count; ++t)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace detail

// All overlap critical pairs of the given rule set on the monomial w.
inline std::vector<Overlap> overlaps_on(const Monomial& w, const std::vector<RewriteRule>& rules) {
    std::vector<Overlap> out;
    int total = w.weight();
    std::vector<std::vector<Occurrence>> embs(rules.size());
    for (size_t r = 0; r < rules.size(); ++r)
        if (rules[r].arity <= w.arity()) embs[r] = find_divisor_embeddings(rules[r].lead, w);
    for (size_t r1 = 0; r1 < rules.size(); ++r1)
        for (size_t r2 = r1; r2 < rules.size(); ++r2)
            for (size_t i = 0; i < embs[r1].size(); ++i) {
                size_t jstart = (r1 == r2) ? i + 1 : 0;
                for (size_t j = jstart; j < embs[r2].size(); ++j)
                    if (detail::share_and_cover(embs[r1][i], embs[r2][j], total))
                        out.push_back({w, static_cast<int>(r1), static_cast<int>(r2),
                                       embs[r1][i], embs[r2][j]});
            }
    return out;
}

// All minimal common multiples of two rules up to max_arity, with both
// embeddings recorded. Disjoint-support pairs are excluded.
inline std::vector<Overlap> common_multiples(const RewriteRule& r1, const RewriteRule& r2,
                                             int max_arity, MonomialCache& cache) {
    bool same = r1.lead == r2.lead && r1.tail == r2.tail;
    std::vector<RewriteRule> set = same ? std::vector<RewriteRule>{r1}
                                        : std::vector<RewriteRule>{r1, r2};
    std::vector<Overlap> out;
    for (int n = std::max(r1.arity, r2.arity); n <= max_arity; ++n)
        for (const auto& w : cache.arity(n))
            for (auto& o : overlaps_on(w, set))
                if (same || (o.rule1 == 0 && o.rule2 == 1)) out.push_back(std::move(o));
    return out;
}

// S-polynomial of an overlap: the difference of the two one-step rewrites.
inline Polynomial s_polynomial(const Overlap& o, const std::vector<RewriteRule>& rules,
                               const MonomialOrder& ord) {
    return poly_sub(rewrite_monomial(o.w, rules[static_cast<size_t>(o.rule1)], o.occ1, ord),
                    rewrite_monomial(o.w, rules[static_cast<size_t>(o.rule2)], o.occ2, ord), ord);
}

// Reduces every rule against the others until the set is inter-reduced;
// returns whether anything changed. Rules are processed smaller arity
// first, equal-arity rules by lead descending.
inline bool inter_reduce(std::vector<RewriteRule>& rules, const MonomialOrder& ord) {
    auto sort_rules = [&] {
        std::sort(rules.begin(), rules.end(), [&](const RewriteRule& a, const RewriteRule& b) {
            if (a.arity != b.arity) return a.arity < b.arity;
            return compare(a.lead, b.lead, ord) == Cmp::Greater;
        });
    };
    bool changed_any = false;
    bool changed = true;
    while (changed) {
        changed = false;
        sort_rules();
        for (size_t i = 0; i < rules.size(); ++i) {
            Polynomial p = rules[i].relation(ord);
            Polynomial q = normal_form(p, rules, ord, nullptr, ReduceStrategy::LeftmostLargest,
                                       nullptr, static_cast<int>(i));
            if (q == p) continue;
            if (q.is_zero()) rules.erase(rules.begin() + static_cast<long>(i));
            else rules[static_cast<size_t>(i)] = make_rule(q, ord);
            changed = changed_any = true;
            break;
        }
    }
    sort_rules();
    return changed_any;
}

// Truncated Buchberger completion: processes critical pairs arity level by
// arity level, inter-reducing at each stable point, until all S-polynomials
// of arity <= max_arity reduce to zero against the final rule set. Output
// is deterministic for a fixed order regardless of the worker count.
inline GroebnerBasis complete(const std::vector<Polynomial>& relations, MonomialCache& cache,
                              const MonomialOrder& ord, int max_arity, int workers = 1) {
    std::vector<std::vector<Polynomial>> by_arity(static_cast<size_t>(max_arity) + 1);
    for (const auto& rel : relations) {
        if (rel.is_zero()) continue;  // degenerate input, nothing to orient
        if (rel.arity < 2) throw std::invalid_argument("relation arity must be at least 2");
        if (rel.arity > max_arity)
            throw std::invalid_argument("relation arity exceeds the completion bound");
        by_arity[static_cast<size_t>(rel.arity)].push_back(rel);
    }

    GroebnerBasis basis;
    basis.certified_arity = max_arity;
    std::unordered_set<std::string> done;

    auto poly_desc = [&](const Polynomial& a, const Polynomial& b) {
        return compare(a.lead(), b.lead(), ord) == Cmp::Greater;
    };

    for (int level = 2; level <= max_arity; ++level) {
        std::vector<Polynomial> pending = by_arity[static_cast<size_t>(level)];
        std::sort(pending.begin(), pending.end(), poly_desc);
        while (true) {
            for (const auto& p : pending) {
                Polynomial q = normal_form(p, basis.rules, ord);
                if (!q.is_zero()) basis.rules.push_back(make_rule(q, ord));
            }
            pending.clear();

            // sweep all unprocessed overlaps up to the current level
            std::vector<Overlap> todo;
            for (int a = 2; a <= level; ++a)
                for (const auto& w : cache.arity(a))
                    for (auto& o : overlaps_on(w, basis.rules)) {
                        std::string key = detail::overlap_key(o, basis.rules);
                        if (done.insert(std::move(key)).second) todo.push_back(std::move(o));
                    }

            std::vector<Polynomial> reduced(todo.size());
            detail::parallel_for(todo.size(), workers, [&](size_t i) {
                reduced[i] = normal_form(s_polynomial(todo[i], basis.rules, ord), basis.rules, ord);
            });
            for (auto& q : reduced)
                if (!q.is_zero()) pending.push_back(std::move(q));
            std::sort(pending.begin(), pending.end(), poly_desc);

            if (pending.empty()) {
                if (inter_reduce(basis.rules, ord)) {
                    // leads may have changed; re-verify every overlap
                    done.clear();
                    continue;
                }
                break;
            }
        }
    }
    return basis;
}

inline bool is_normal(const Monomial& m, const GroebnerBasis& basis) {
    for (const auto& r : basis.rules)
        if (r.arity <= m.arity() && divides(r.lead, m)) return false;
    return true;
}

// Number of basis monomials (normal forms) of the quotient in arity n.
inline long dims(const GroebnerBasis& basis, MonomialCache& cache, int n) {
    if (n > basis.certified_arity) throw std::invalid_argument("arity exceeds certified bound");
    if (n == 1) return 1;  // the identity operation
    long count = 0;
    for (const auto& m : cache.arity(n)) count += is_normal(m, basis);
    return count;
}

}  // namespace opd
