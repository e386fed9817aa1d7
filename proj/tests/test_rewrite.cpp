#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "opd/groebner.hpp"
#include "opd/rewrite.hpp"

using namespace opd;

namespace {

Alphabet xz() {
    Alphabet a;
    a.add("x");
    a.add("z");
    return a;
}

std::vector<RewriteRule> published_rule_set(const Alphabet& a, const MonomialOrder& ord) {
    std::vector<RewriteRule> rules;
    for (const auto& r : fixtures::comgd_published_rules())
        rules.push_back(make_rule(fixtures::rule_relation(r, a, ord), ord));
    return rules;
}

}  // namespace

TEST_CASE("divisor embeddings") {
    Alphabet a = xz();
    auto x12 = parse_monomial("x(1 2)", a);
    CHECK(find_divisor_embeddings(x12, parse_monomial("x(x(1 2) 3)", a)).size() == 2);
    auto lead = parse_monomial("z(z(1 2) 3)", a);
    auto self = find_divisor_embeddings(lead, lead);
    REQUIRE(self.size() == 1);
    CHECK(self[0].root_pos == 0);
    CHECK(find_divisor_embeddings(parse_monomial("x(x(1 2) 3)", a),
                                  parse_monomial("x(1 x(2 3))", a))
              .empty());
    // label-compatibility rejects the comb with permuted minima
    CHECK(find_divisor_embeddings(parse_monomial("x(x(1 2) 3)", a),
                                  parse_monomial("x(x(1 3) 2)", a))
              .empty());
}

TEST_CASE("splice reconstructs the divided monomial on the identity tail") {
    Alphabet a = xz();
    std::mt19937 rng(3);
    for (int n = 3; n <= 5; ++n) {
        auto ms = enumerate_monomials(a, n);
        auto leads = enumerate_monomials(a, 3);
        for (int t = 0; t < 300; ++t) {
            const Monomial& m = ms[rng() % ms.size()];
            const Monomial& lead = leads[rng() % leads.size()];
            for (const auto& occ : find_divisor_embeddings(lead, m)) {
                CHECK(splice(m, occ, lead) == m);
                // replacing by any same-arity monomial keeps the tree valid
                const Monomial& other = leads[rng() % leads.size()];
                CHECK(validate_shuffle(splice(m, occ, other)));
            }
        }
    }
}

TEST_CASE("the order orients every published rule as printed") {
    Alphabet a = xz();
    auto ord = MonomialOrder::declaration_order(a);
    for (const auto& pr : fixtures::comgd_published_rules()) {
        RewriteRule r = make_rule(fixtures::rule_relation(pr, a, ord), ord);
        CHECK(render(r.lead, a) == pr.lead);
    }
}

TEST_CASE("normal form against the published rule set") {
    Alphabet a = xz();
    auto ord = MonomialOrder::declaration_order(a);
    auto rules = published_rule_set(a, ord);

    // left side of rule (8) reduces to its printed right side
    Polynomial lhs = fixtures::poly(a, ord, {{1, "z(x(1 3) 2)"}});
    Polynomial rhs = fixtures::poly(
        a, ord, {{2, "x(z(1 3) 2)"}, {-1, "z(1 x(2 3))"}, {-2, "x(1 z(2 3))"}});
    CHECK(normal_form(lhs, rules, ord) == rhs);

    // a normal monomial reduces to itself with an empty certificate
    Certificate cert;
    Polynomial nf = fixtures::poly(a, ord, {{1, "x(1 x(2 3))"}});
    CHECK(normal_form(nf, rules, ord, &cert) == nf);
    CHECK(cert.steps.empty());

    // each rule's (left - right) reduces to zero
    for (const auto& pr : fixtures::comgd_published_rules())
        CHECK(normal_form(fixtures::rule_relation(pr, a, ord), rules, ord).is_zero());
}

TEST_CASE("certificates replay to the recorded normal form") {
    Alphabet a = xz();
    auto ord = MonomialOrder::declaration_order(a);
    auto rules = published_rule_set(a, ord);
    std::mt19937 rng(17);
    auto ms = enumerate_monomials(a, 4);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::pair<Monomial, Rat>> raw;
        for (int i = 0; i < 4; ++i)
            raw.emplace_back(ms[rng() % ms.size()], Rat(1 + static_cast<int>(rng() % 5)));
        Polynomial p = make_polynomial(std::move(raw), ord, 4);
        Certificate cert;
        Polynomial nf = normal_form(p, rules, ord, &cert);
        CHECK(replay_certificate(cert, rules, ord));
        CHECK((cert.steps.empty() ? p : cert.steps.back().result) == nf);
    }
}

TEST_CASE("classical pentagon overlap of associativity") {
    Alphabet a;
    a.add("x");
    auto ord = MonomialOrder::declaration_order(a);
    RewriteRule assoc = make_rule(
        fixtures::poly(a, ord, {{1, "x(x(1 2) 3)"}, {-1, "x(1 x(2 3))"}}), ord);
    MonomialCache cache(a);
    auto overlaps = common_multiples(assoc, assoc, 4, cache);
    REQUIRE(overlaps.size() == 1);
    CHECK(render(overlaps[0].w, a) == "x(x(x(1 2) 3) 4)");
    CHECK(overlaps[0].occ1.nodes != overlaps[0].occ2.nodes);
}

TEST_CASE("disjoint-support pairs are excluded from overlaps") {
    Alphabet a = xz();
    auto ord = MonomialOrder::declaration_order(a);
    auto rules = published_rule_set(a, ord);
    MonomialCache cache(a);
    for (const auto& w : cache.arity(4))
        for (const auto& o : overlaps_on(w, rules)) {
            // every reported overlap genuinely shares a node
            std::vector<size_t> inter;
            std::set_intersection(o.occ1.nodes.begin(), o.occ1.nodes.end(), o.occ2.nodes.begin(),
                                  o.occ2.nodes.end(), std::back_inserter(inter));
            CHECK(!inter.empty());
        }
}

TEST_CASE("rules (4) and (5) overlap in arity 4") {
    Alphabet a = xz();
    auto ord = MonomialOrder::declaration_order(a);
    const auto& prs = fixtures::comgd_published_rules();
    RewriteRule r4 = make_rule(fixtures::rule_relation(prs[1], a, ord), ord);  // x over x
    RewriteRule r5 = make_rule(fixtures::rule_relation(prs[2], a, ord), ord);  // z over x
    MonomialCache cache(a);
    auto overlaps = common_multiples(r4, r5, 4, cache);
    CHECK(!overlaps.empty());
    for (const auto& o : overlaps) {
        CHECK(o.w.arity() == 4);
        CHECK(!find_divisor_embeddings(r4.lead, o.w).empty());
        CHECK(!find_divisor_embeddings(r5.lead, o.w).empty());
    }
}
