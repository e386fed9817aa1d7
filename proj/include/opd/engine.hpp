#pragma once

#include <string>
#include <vector>

#include "opd/groebner.hpp"
#include "opd/presentation.hpp"

namespace opd {

// A presentation compiled to the shuffle alphabet and completed up to a
// certified arity bound.
struct CompletedOperad {
    Presentation pres;
    ShuffleSignature sig;
    MonomialOrder ord;
    MonomialCache cache;
    GroebnerBasis basis;
};

// Shuffle relations of all identities of the presentation, thinned per
// identity orbit.
inline std::vector<Polynomial> presentation_relations(const Presentation& p,
                                                      const ShuffleSignature& sig,
                                                      const MonomialOrder& ord) {
    std::vector<Polynomial> rels;
    for (const auto& id : p.identities)
        for (auto& q : multilinear_orbit(id, sig, ord)) rels.push_back(std::move(q));
    return rels;
}

// Generator precedence from op names, smallest letter first. Naming a plain
// op implicitly places its twin right after it unless the twin is listed
// explicitly.
inline MonomialOrder order_for(const Presentation& p, const ShuffleSignature& sig,
                               const std::vector<std::string>& precedence) {
    if (precedence.empty()) return MonomialOrder::declaration_order(sig.alpha);
    std::vector<std::string> expanded;
    for (const auto& name : precedence) {
        expanded.push_back(name);
        int op = p.find_op(name);
        if (op < 0 || p.ops[static_cast<size_t>(op)].symmetry != Symmetry::Plain) continue;
        std::string twin = name + "_t";
        bool listed = false;
        for (const auto& other : precedence) listed = listed || other == twin;
        if (!listed) expanded.push_back(twin);
    }
    return MonomialOrder::from_precedence(sig.alpha, expanded);
}

inline CompletedOperad make_operad(Presentation p, int max_arity,
                                   const std::vector<std::string>& precedence = {},
                                   int workers = 1) {
    ShuffleSignature sig = compile_alphabet(p.ops);
    MonomialOrder ord = order_for(p, sig, precedence);
    MonomialCache cache(sig.alpha);
    GroebnerBasis basis = complete(presentation_relations(p, sig, ord), cache, ord, max_arity, workers);
    return {std::move(p), std::move(sig), std::move(ord), std::move(cache), std::move(basis)};
}

// Rewrites an identity's op indices from one presentation's op list to
// another's, matching ops by name.
inline IdentityExpr remap_ops(const IdentityExpr& id, const Presentation& from,
                              const Presentation& to) {
    struct Walk {
        const Presentation& from;
        const Presentation& to;
        TermNode go(const TermNode& t) const {
            if (t.op < 0) return t;
            const std::string& name = from.ops[static_cast<size_t>(t.op)].name;
            int op = to.find_op(name);
            if (op < 0)
                throw std::invalid_argument("identity uses operation '" + name +
                                            "' absent from the presentation");
            return TermNode::apply(op, go(t.children[0]), go(t.children[1]));
        }
    } w{from, to};
    IdentityExpr out = id;
    for (auto& [c, t] : out.terms) t = w.go(t);
    return out;
}

// Outcome of checking one identity modulo a completed operad. The identity
// holds iff every orbit relation has normal form zero; each reduction is
// recorded as a replayable certificate.
struct IdentityCheck {
    std::string name;
    bool holds = false;
    std::vector<Polynomial> instances;     // the identity's orbit relations
    std::vector<Polynomial> residues;      // their normal forms
    std::vector<Certificate> certificates; // one reduction trace per instance
};

// id must already use op.pres's op indices (see remap_ops).
inline IdentityCheck verify_identity(CompletedOperad& op, const IdentityExpr& id) {
    if (id.arity > op.basis.certified_arity)
        throw std::invalid_argument("identity arity " + std::to_string(id.arity) +
                                    " exceeds the certified bound " +
                                    std::to_string(op.basis.certified_arity));
    IdentityCheck check;
    check.name = id.name;
    check.instances = multilinear_orbit(id, op.sig, op.ord);
    check.holds = true;
    for (const auto& p : check.instances) {
        Certificate cert;
        Polynomial r = normal_form(p, op.basis.rules, op.ord, &cert);
        check.holds = check.holds && r.is_zero();
        check.residues.push_back(std::move(r));
        check.certificates.push_back(std::move(cert));
    }
    return check;
}

}  // namespace opd
