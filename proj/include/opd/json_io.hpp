#pragma once

#include <string>

#include "json.hpp"
#include "opd/engine.hpp"

namespace opd {

using nlohmann::json;

inline json poly_json(const Polynomial& p, const Alphabet& alpha) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms)
        terms.push_back({{"coeff", to_string(c)}, {"monomial", render(m, alpha)}});
    return {{"arity", p.arity}, {"terms", terms}};
}

inline Polynomial poly_from_json(const json& j, const Alphabet& alpha, const MonomialOrder& ord) {
    std::vector<std::pair<Monomial, Rat>> raw;
    for (const auto& t : j.at("terms"))
        raw.emplace_back(parse_monomial(t.at("monomial").get<std::string>(), alpha),
                         parse_rational(t.at("coeff").get<std::string>()));
    return make_polynomial(std::move(raw), ord, j.at("arity").get<int>());
}

inline json certificate_json(const Certificate& cert, const Alphabet& alpha) {
    json steps = json::array();
    for (const auto& s : cert.steps)
        steps.push_back({{"rule", s.rule_id},
                         {"rewritten", render(s.rewritten, alpha)},
                         {"occurrence_root", s.occurrence_root},
                         {"result", poly_json(s.result, alpha)}});
    return {{"input", poly_json(cert.input, alpha)}, {"steps", steps}};
}

inline Certificate certificate_from_json(const json& j, const Alphabet& alpha,
                                         const MonomialOrder& ord) {
    Certificate cert;
    cert.input = poly_from_json(j.at("input"), alpha, ord);
    for (const auto& s : j.at("steps")) {
        CertStep step;
        step.rule_id = s.at("rule").get<int>();
        step.rewritten = parse_monomial(s.at("rewritten").get<std::string>(), alpha);
        step.occurrence_root = s.at("occurrence_root").get<size_t>();
        step.result = poly_from_json(s.at("result"), alpha, ord);
        cert.steps.push_back(std::move(step));
    }
    return cert;
}

inline json basis_json(const GroebnerBasis& basis, const Alphabet& alpha) {
    json rules = json::array();
    for (const auto& r : basis.rules)
        rules.push_back({{"lead", render(r.lead, alpha)}, {"tail", poly_json(r.tail, alpha)}});
    return {{"certified_arity", basis.certified_arity}, {"rules", rules}};
}

inline GroebnerBasis basis_from_json(const json& j, const Alphabet& alpha,
                                     const MonomialOrder& ord) {
    GroebnerBasis basis;
    basis.certified_arity = j.at("certified_arity").get<int>();
    for (const auto& r : j.at("rules")) {
        RewriteRule rule;
        rule.lead = parse_monomial(r.at("lead").get<std::string>(), alpha);
        rule.arity = rule.lead.arity();
        rule.tail = poly_from_json(r.at("tail"), alpha, ord);
        basis.rules.push_back(std::move(rule));
    }
    return basis;
}

inline json check_json(const IdentityCheck& check, const Alphabet& alpha) {
    json instances = json::array(), residues = json::array(), certs = json::array();
    for (const auto& p : check.instances) instances.push_back(poly_json(p, alpha));
    for (const auto& p : check.residues) residues.push_back(poly_json(p, alpha));
    for (const auto& c : check.certificates) certs.push_back(certificate_json(c, alpha));
    return {{"identity", check.name},
            {"holds", check.holds},
            {"instances", instances},
            {"residues", residues},
            {"certificates", certs}};
}

}  // namespace opd
