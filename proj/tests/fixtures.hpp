#pragma once

// Shared fixtures: the published rewriting system of the commutative
// Gelfand-Dorfman operad and the classical shuffle relation lists used as
// ground truth in tests.

#include <string>
#include <utility>
#include <vector>

#include "opd/polynomial.hpp"

namespace fixtures {

using opd::Alphabet;
using opd::MonomialOrder;
using opd::Polynomial;
using opd::Rat;

inline Polynomial poly(const Alphabet& alpha, const MonomialOrder& ord,
                       std::vector<std::pair<Rat, std::string>> terms) {
    std::vector<std::pair<opd::Monomial, Rat>> raw;
    for (auto& [c, s] : terms) raw.emplace_back(opd::parse_monomial(s, alpha), c);
    return opd::make_polynomial(std::move(raw), ord);
}

struct OrientedRule {
    std::string lead;
    std::vector<std::pair<Rat, std::string>> rhs;
};

// The twelve oriented rules of the Com-GD rewriting system, degree <= 4.
inline const std::vector<OrientedRule>& comgd_published_rules() {
    static const std::vector<OrientedRule> rules = {
        {"x(x(1 3) 2)", {{1, "x(1 x(2 3))"}}},
        {"x(x(1 2) 3)", {{1, "x(1 x(2 3))"}}},
        {"z(x(1 2) 3)", {{2, "x(z(1 3) 2)"}, {-1, "z(1 x(2 3))"}}},
        {"x(z(1 2) 3)", {{1, "x(z(1 3) 2)"}, {-1, "x(1 z(2 3))"}}},
        {"z(z(1 2) 3)", {{1, "z(z(1 3) 2)"}, {1, "z(1 z(2 3))"}}},
        {"z(x(1 3) 2)", {{2, "x(z(1 3) 2)"}, {-1, "z(1 x(2 3))"}, {-2, "x(1 z(2 3))"}}},
        {"x(z(1 4) z(2 3))",
         {{1, "x(z(1 3) z(2 4))"}, {-1, "x(z(1 z(3 4)) 2)"}, {1, "x(1 z(2 z(3 4)))"}}},
        {"x(z(1 3) x(2 4))",
         {{1, "z(1 x(2 x(3 4)))"},
          {3, "x(1 x(z(2 4) 3))"},
          {-2, "x(1 z(2 x(3 4)))"},
          {-2, "x(1 x(2 z(3 4)))"}}},
        {"x(z(1 4) x(2 3))",
         {{1, "z(1 x(2 x(3 4)))"},
          {3, "x(1 x(z(2 4) 3))"},
          {-2, "x(1 z(2 x(3 4)))"},
          {-1, "x(1 x(2 z(3 4)))"}}},
        {"x(z(1 x(3 4)) 2)",
         {{1, "z(1 x(2 x(3 4)))"},
          {2, "x(1 x(z(2 4) 3))"},
          {-1, "x(1 z(2 x(3 4)))"},
          {-1, "x(1 x(2 z(3 4)))"}}},
        {"z(z(1 4) x(2 3))",
         {{1, "z(z(1 x(3 4)) 2)"},
          {-2, "x(z(1 3) z(2 4))"},
          {1, "z(1 x(z(2 4) 3))"},
          {1, "z(1 z(2 x(3 4)))"},
          {2, "x(1 z(z(2 4) 3))"}}},
        {"z(z(1 3) x(2 4))",
         {{1, "z(z(1 x(3 4)) 2)"},
          {-2, "x(z(1 3) z(2 4))"},
          {2, "x(z(1 z(3 4)) 2)"},
          {1, "z(1 x(z(2 4) 3))"},
          {1, "z(1 z(2 x(3 4)))"},
          {-1, "z(1 x(2 z(3 4)))"},
          {2, "x(1 z(z(2 4) 3))"}}},
    };
    return rules;
}

// lead - rhs, as a relation polynomial
inline Polynomial rule_relation(const OrientedRule& r, const Alphabet& alpha,
                                const MonomialOrder& ord) {
    std::vector<std::pair<Rat, std::string>> terms = {{1, r.lead}};
    for (auto& [c, s] : r.rhs) terms.emplace_back(-c, s);
    return poly(alpha, ord, terms);
}

// The three shuffle relations of the commutative GD identity as published.
inline std::vector<Polynomial> comgd_identity_relations(const Alphabet& alpha,
                                                        const MonomialOrder& ord) {
    return {
        poly(alpha, ord,
             {{1, "z(1 x(2 3))"},
              {1, "z(x(1 2) 3)"},
              {-1, "x(z(1 2) 3)"},
              {-1, "x(1 z(2 3))"},
              {-1, "x(z(1 3) 2)"}}),
        poly(alpha, ord,
             {{-1, "z(x(1 3) 2)"},
              {1, "z(x(1 2) 3)"},
              {1, "x(z(1 2) 3)"},
              {-1, "x(z(1 3) 2)"},
              {-1, "x(1 z(2 3))"}}),
        poly(alpha, ord,
             {{-1, "x(z(1 2) 3)"},
              {1, "z(1 x(2 3))"},
              {1, "z(x(1 3) 2)"},
              {-1, "x(z(1 3) 2)"},
              {1, "x(1 z(2 3))"}}),
    };
}

// Full defining relation set of Com-GD over x (commutative associative) and
// z (Lie): the Com relations for x, the Lie relation for z, and the three
// relations of the commutative GD identity.
inline std::vector<Polynomial> comgd_relations(const Alphabet& alpha, const MonomialOrder& ord) {
    std::vector<Polynomial> rels = {
        poly(alpha, ord, {{1, "x(x(1 2) 3)"}, {-1, "x(1 x(2 3))"}}),
        poly(alpha, ord, {{1, "x(x(1 3) 2)"}, {-1, "x(1 x(2 3))"}}),
        poly(alpha, ord,
             {{1, "z(z(1 2) 3)"}, {-1, "z(1 z(2 3))"}, {-1, "z(z(1 3) 2)"}}),
    };
    for (auto& p : comgd_identity_relations(alpha, ord)) rels.push_back(std::move(p));
    return rels;
}

// The six shuffle relations of the associative operad over twins x, y.
inline std::vector<Polynomial> as_relations(const Alphabet& alpha, const MonomialOrder& ord) {
    return {
        poly(alpha, ord, {{1, "x(x(1 2) 3)"}, {-1, "x(1 x(2 3))"}}),
        poly(alpha, ord, {{1, "x(y(1 2) 3)"}, {-1, "y(x(1 3) 2)"}}),
        poly(alpha, ord, {{1, "x(x(1 3) 2)"}, {-1, "x(1 y(2 3))"}}),
        poly(alpha, ord, {{1, "x(y(1 3) 2)"}, {-1, "y(x(1 2) 3)"}}),
        poly(alpha, ord, {{1, "y(1 x(2 3))"}, {-1, "y(y(1 3) 2)"}}),
        poly(alpha, ord, {{1, "y(1 y(2 3))"}, {-1, "y(y(1 2) 3)"}}),
    };
}

// Jacobi + antisymmetry in shuffle form: the single Lie relation.
inline Polynomial lie_relation(const Alphabet& alpha, const MonomialOrder& ord) {
    return poly(alpha, ord,
                {{1, "z(z(1 2) 3)"}, {-1, "z(1 z(2 3))"}, {-1, "z(z(1 3) 2)"}});
}

}  // namespace fixtures
