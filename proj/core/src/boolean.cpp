#include "kao/boolean.hpp"

#include "kao/errors.hpp"

namespace kao {

std::vector<Atom> all_atoms(const Signature& sig) {
    int n = static_cast<int>(sig.observables().size());
    if (n > 16)
        throw SignatureTooLarge("cannot enumerate atoms over " +
                                std::to_string(n) + " observables");
    std::vector<Atom> atoms;
    atoms.reserve(1u << n);
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
        atoms.emplace_back(bits, n);
    return atoms;
}

bool holds(const Prop& p, const Atom& alpha, const Signature& sig) {
    switch (p.kind()) {
        case PropKind::Bot: return false;
        case PropKind::Top: return true;
        case PropKind::Obs: {
            auto idx = sig.observable_index(p.obs_name());
            if (!idx) throw UnknownSymbol(p.obs_name(), "observable");
            return alpha.contains(*idx);
        }
        case PropKind::Or:
            return holds(p.left(), alpha, sig) || holds(p.right(), alpha, sig);
        case PropKind::And:
            return holds(p.left(), alpha, sig) && holds(p.right(), alpha, sig);
        case PropKind::Not:
            return !holds(p.child(), alpha, sig);
    }
    return false;
}

std::vector<Atom> sem_ba(const Prop& p, const Signature& sig) {
    std::vector<Atom> result;
    for (const Atom& alpha : all_atoms(sig))
        if (holds(p, alpha, sig)) result.push_back(alpha);
    return result;
}

Prop pi_atom(const Atom& alpha, const Signature& sig) {
    const auto& names = sig.observables();
    Prop acc;
    for (std::size_t i = 0; i < names.size(); ++i) {
        Prop lit = Prop::obs(names[i]);
        if (!alpha.contains(static_cast<int>(i))) lit = Prop::neg(lit);
        acc = acc.valid() ? Prop::conj(acc, lit) : lit;
    }
    return acc.valid() ? acc : Prop::top();
}

bool ba_leq(const Prop& p, const Prop& q, const Signature& sig) {
    for (const Atom& alpha : all_atoms(sig))
        if (holds(p, alpha, sig) && !holds(q, alpha, sig)) return false;
    return true;
}

std::string render_atom(const Atom& alpha, const Signature& sig) {
    std::string out = "{";
    bool first = true;
    const auto& names = sig.observables();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!alpha.contains(static_cast<int>(i))) continue;
        if (!first) out += ',';
        out += names[i];
        first = false;
    }
    out += '}';
    return out;
}

}  // namespace kao
