#include "doctest.h"

#include <random>

#include "opd/monomial.hpp"
#include "opd/order.hpp"
#include "opd/polynomial.hpp"

using namespace opd;

namespace {

Alphabet xz() {
    Alphabet a;
    a.add("x");
    a.add("z");
    return a;
}

long double_factorial(int k) {  // k!!
    long r = 1;
    for (; k > 1; k -= 2) r *= k;
    return r;
}

// all legal label blocks for composing arity-k inner into slot of arity-r outer
std::vector<std::vector<int>> label_blocks(int r, int k, int slot) {
    int n = r + k - 1;
    std::vector<std::vector<int>> out;
    std::vector<int> idx(static_cast<size_t>(k));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            std::vector<bool> used(static_cast<size_t>(n) + 1, false);
            for (int v : idx) used[static_cast<size_t>(v)] = true;
            int below = 0;
            for (int l = 1; l < idx[0]; ++l) below += !used[static_cast<size_t>(l)];
            if (below == slot - 1) out.push_back(idx);
            return;
        }
        for (int v = start; v <= n; ++v) {
            idx[static_cast<size_t>(depth)] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(1, 0);
    return out;
}

}  // namespace

TEST_CASE("validate_shuffle on the spec examples") {
    Alphabet a = xz();
    CHECK(validate_shuffle(parse_monomial("x(1 x(2 3))", a)));
    CHECK_FALSE(validate_shuffle(parse_monomial("x(x(2 3) 1)", a)));
    CHECK(validate_shuffle(parse_monomial("z(x(1 3) 2)", a)));
    CHECK_FALSE(validate_shuffle(parse_monomial("x(1 x(2 2))", a)));  // repeated label
    CHECK_FALSE(validate_shuffle(parse_monomial("x(1 x(2 4))", a)));  // label gap
}

TEST_CASE("render and parse round trip") {
    Alphabet a = xz();
    for (int n = 2; n <= 4; ++n)
        for (const auto& m : enumerate_monomials(a, n))
            CHECK(parse_monomial(render(m, a), a) == m);
}

TEST_CASE("monomial order orients the classical rules") {
    Alphabet a = xz();
    auto ord = MonomialOrder::declaration_order(a);
    auto m = parse_monomial("z(x(1 3) 2)", a);
    CHECK(compare(m, m, ord) == Cmp::Equal);
    CHECK(compare(parse_monomial("z(z(1 2) 3)", a), parse_monomial("z(1 z(2 3))", a), ord) ==
          Cmp::Greater);
    CHECK(compare(parse_monomial("x(x(1 2) 3)", a), parse_monomial("x(1 x(2 3))", a), ord) ==
          Cmp::Greater);
    CHECK_THROWS(compare(parse_monomial("x(1 2)", a), parse_monomial("x(x(1 2) 3)", a), ord));
}

TEST_CASE("order is total and trichotomous on all monomials up to arity 5") {
    Alphabet a = xz();
    auto ord = MonomialOrder::declaration_order(a);
    std::mt19937 rng(7);
    for (int n = 2; n <= 5; ++n) {
        auto ms = enumerate_monomials(a, n);
        // antisymmetry + trichotomy on random pairs, exhaustive for small n
        size_t pairs = n <= 4 ? ms.size() * ms.size() : 20000;
        for (size_t t = 0; t < pairs; ++t) {
            const Monomial& p = n <= 4 ? ms[t / ms.size()] : ms[rng() % ms.size()];
            const Monomial& q = n <= 4 ? ms[t % ms.size()] : ms[rng() % ms.size()];
            Cmp c = compare(p, q, ord);
            Cmp cr = compare(q, p, ord);
            if (p == q) {
                CHECK(c == Cmp::Equal);
            } else {
                CHECK(c != Cmp::Equal);
                CHECK((c == Cmp::Greater) == (cr == Cmp::Less));
            }
        }
        // transitivity on random triples
        for (int t = 0; t < 2000; ++t) {
            const Monomial& p = ms[rng() % ms.size()];
            const Monomial& q = ms[rng() % ms.size()];
            const Monomial& r = ms[rng() % ms.size()];
            if (compare(p, q, ord) == Cmp::Greater && compare(q, r, ord) == Cmp::Greater)
                CHECK(compare(p, r, ord) == Cmp::Greater);
        }
    }
}

TEST_CASE("shuffle composition matches the spec examples") {
    Alphabet a = xz();
    auto x12 = parse_monomial("x(1 2)", a);
    auto z12 = parse_monomial("z(1 2)", a);
    CHECK(shuffle_compose(x12, 1, x12, {1, 2}) == parse_monomial("x(x(1 2) 3)", a));
    CHECK(shuffle_compose(x12, 2, z12, {2, 3}) == parse_monomial("x(1 z(2 3))", a));
    CHECK(shuffle_compose(x12, 1, z12, {1, 3}) == parse_monomial("x(z(1 3) 2)", a));
    CHECK_THROWS(shuffle_compose(x12, 3, z12, {2, 3}));      // bad slot
    CHECK_THROWS(shuffle_compose(x12, 1, z12, {2, 3}));      // minima condition broken
    CHECK_THROWS(shuffle_compose(x12, 1, z12, {1, 2, 3}));   // block size mismatch
}

TEST_CASE("every composition result is a valid shuffle tree") {
    Alphabet a = xz();
    for (int r = 2; r <= 3; ++r)
        for (int k = 2; k <= 3; ++k)
            for (const auto& outer : enumerate_monomials(a, r))
                for (const auto& inner : enumerate_monomials(a, k))
                    for (int slot = 1; slot <= r; ++slot)
                        for (const auto& blk : label_blocks(r, k, slot))
                            CHECK(validate_shuffle(shuffle_compose(outer, slot, inner, blk)));
}

TEST_CASE("order is compatible with shuffle composition") {
    Alphabet a = xz();
    auto ord = MonomialOrder::declaration_order(a);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 4000; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        int nc = 2 + static_cast<int>(rng() % 2);
        auto ms = enumerate_monomials(a, n);
        auto cs = enumerate_monomials(a, nc);
        const Monomial& p = ms[rng() % ms.size()];
        const Monomial& q = ms[rng() % ms.size()];
        if (compare(p, q, ord) != Cmp::Greater) continue;
        const Monomial& c = cs[rng() % cs.size()];
        {
            int slot = 1 + static_cast<int>(rng() % nc);
            auto blocks = label_blocks(nc, n, slot);
            const auto& blk = blocks[rng() % blocks.size()];
            CHECK(compare(shuffle_compose(c, slot, p, blk), shuffle_compose(c, slot, q, blk), ord) ==
                  Cmp::Greater);
        }
        {
            int slot = 1 + static_cast<int>(rng() % n);
            auto blocks = label_blocks(n, nc, slot);
            const auto& blk = blocks[rng() % blocks.size()];
            CHECK(compare(shuffle_compose(p, slot, c, blk), shuffle_compose(q, slot, c, blk), ord) ==
                  Cmp::Greater);
        }
    }
}

TEST_CASE("enumeration counts") {
    Alphabet one;
    one.add("x");
    CHECK(enumerate_monomials(one, 2).size() == 1);
    CHECK(enumerate_monomials(one, 3).size() == 3);
    Alphabet two = xz();
    CHECK(enumerate_monomials(two, 3).size() == 12);
    for (int n = 2; n <= 7; ++n) {
        auto ms = enumerate_monomials(one, n);
        CHECK(static_cast<long>(ms.size()) == double_factorial(2 * n - 3));
        for (const auto& m : ms) CHECK(validate_shuffle(m));
        // distinctness
        auto copy = ms;
        std::sort(copy.begin(), copy.end());
        CHECK(std::adjacent_find(copy.begin(), copy.end()) == copy.end());
    }
}

TEST_CASE("polynomial arithmetic is exact and canonical") {
    Alphabet a = xz();
    auto ord = MonomialOrder::declaration_order(a);
    auto m = parse_monomial("x(z(1 3) 2)", a);

    Polynomial p = make_polynomial({{m, Rat(2)}, {m, Rat(3)}}, ord);
    REQUIRE(p.terms.size() == 1);
    CHECK(p.terms[0].second == 5);

    auto ms = enumerate_monomials(a, 4);
    std::mt19937 rng(23);
    auto random_poly = [&]() {
        std::vector<std::pair<Monomial, Rat>> raw;
        for (int i = 0; i < 6; ++i)
            raw.emplace_back(ms[rng() % ms.size()],
                             Rat(static_cast<int>(rng() % 19) - 9, 1 + static_cast<int>(rng() % 7)));
        return make_polynomial(std::move(raw), ord, 4);
    };
    for (int t = 0; t < 200; ++t) {
        Polynomial p1 = random_poly(), q1 = random_poly();
        CHECK(poly_add(p1, poly_scale(p1, Rat(-1)), ord).is_zero());
        CHECK(poly_sub(poly_add(p1, q1, ord), q1, ord) == p1);
        // strictly descending, nonzero coefficients
        Polynomial s = poly_add(p1, q1, ord);
        for (size_t i = 0; i + 1 < s.terms.size(); ++i)
            CHECK(compare(s.terms[i].first, s.terms[i + 1].first, ord) == Cmp::Greater);
        for (const auto& [mm, cc] : s.terms) CHECK(cc != 0);
    }
}

TEST_CASE("rule (10) right-hand side builds as a 4-term polynomial") {
    Alphabet a = xz();
    auto ord = MonomialOrder::declaration_order(a);
    Polynomial rhs = make_polynomial(
        {
            {parse_monomial("z(1 x(2 x(3 4)))", a), Rat(1)},
            {parse_monomial("x(1 x(z(2 4) 3))", a), Rat(3)},
            {parse_monomial("x(1 z(2 x(3 4)))", a), Rat(-2)},
            {parse_monomial("x(1 x(2 z(3 4)))", a), Rat(-2)},
        },
        ord);
    CHECK(rhs.terms.size() == 4);
    Rat sum = 0;
    for (const auto& [m, c] : rhs.terms) sum += c;
    CHECK(sum == 0);  // 1 + 3 - 2 - 2
    for (const auto& [m, c] : rhs.terms) CHECK(validate_shuffle(m));
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("-3/6") == Rat(-1, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}
