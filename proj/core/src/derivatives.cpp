#include "kao/derivatives.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "kao/errors.hpp"

namespace kao {

namespace {

std::vector<Term> sorted_unique(std::vector<Term> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool contains_nullable(const std::vector<Term>& terms) {
    for (const Term& t : terms)
        if (t.nullable()) return true;
    return false;
}

}  // namespace

namespace detail {

class DerivMemo {
  public:
    using DKey = std::pair<std::uint64_t, std::string>;
    using ZKey = std::pair<std::uint64_t, std::uint32_t>;
    std::map<DKey, std::vector<Term>> dmemo;
    std::map<ZKey, std::vector<Term>> zmemo;
};

}  // namespace detail

namespace {

const std::vector<Term>& delta_rec(const Term& e, const std::string& a,
                                   detail::DerivMemo& memo) {
    auto key = detail::DerivMemo::DKey{e.id(), a};
    auto it = memo.dmemo.find(key);
    if (it != memo.dmemo.end()) return it->second;

    std::vector<Term> out;
    switch (e.kind()) {
        case TermKind::Zero:
        case TermKind::One:
        case TermKind::Prop:
            break;
        case TermKind::Act:
            if (e.act_name() == a) out.push_back(Term::one());
            break;
        case TermKind::Plus: {
            out = delta_rec(e.left(), a, memo);
            const auto& r = delta_rec(e.right(), a, memo);
            out.insert(out.end(), r.begin(), r.end());
            break;
        }
        case TermKind::Seq: {
            const auto& l = delta_rec(e.left(), a, memo);
            for (const Term& t : l) out.push_back(Term::seq(t, e.right()));
            if (e.left().nullable()) {
                const auto& r = delta_rec(e.right(), a, memo);
                out.insert(out.end(), r.begin(), r.end());
            }
            break;
        }
        case TermKind::Star: {
            const auto& c = delta_rec(e.child(), a, memo);
            for (const Term& t : c) out.push_back(Term::seq(t, e));
            break;
        }
    }
    return memo.dmemo.emplace(key, sorted_unique(std::move(out)))
        .first->second;
}

const std::vector<Term>& zeta_rec(const Term& e, const Atom& alpha,
                                  const Signature& sig,
                                  detail::DerivMemo& memo) {
    auto key = detail::DerivMemo::ZKey{e.id(), alpha.bits()};
    auto it = memo.zmemo.find(key);
    if (it != memo.zmemo.end()) return it->second;

    std::vector<Term> out;
    switch (e.kind()) {
        case TermKind::Zero:
        case TermKind::One:
        case TermKind::Act:
            break;
        case TermKind::Prop:
            if (holds(e.prop_term(), alpha, sig)) out.push_back(Term::one());
            break;
        case TermKind::Plus: {
            out = zeta_rec(e.left(), alpha, sig, memo);
            const auto& r = zeta_rec(e.right(), alpha, sig, memo);
            out.insert(out.end(), r.begin(), r.end());
            break;
        }
        case TermKind::Seq: {
            const auto& l = zeta_rec(e.left(), alpha, sig, memo);
            for (const Term& t : l) out.push_back(Term::seq(t, e.right()));
            // the observation may be re-used by the right factor when the
            // left factor terminates, possibly by consuming alpha itself
            if (e.left().nullable() || contains_nullable(l)) {
                const auto& r = zeta_rec(e.right(), alpha, sig, memo);
                out.insert(out.end(), r.begin(), r.end());
            }
            break;
        }
        case TermKind::Star: {
            const auto& c = zeta_rec(e.child(), alpha, sig, memo);
            for (const Term& t : c) out.push_back(Term::seq(t, e));
            break;
        }
    }
    return memo.zmemo.emplace(key, sorted_unique(std::move(out)))
        .first->second;
}

}  // namespace

std::vector<Term> delta(const Term& e, std::string_view a) {
    detail::DerivMemo memo;
    return delta_rec(e, std::string(a), memo);
}

std::vector<Term> zeta(const Term& e, const Atom& alpha,
                       const Signature& sig) {
    detail::DerivMemo memo;
    return zeta_rec(e, alpha, sig, memo);
}

// ---------------------------------------------------------------------------
// Reach and initial factors

namespace {

using TermSetMemo = std::map<std::uint64_t, std::vector<Term>>;

const std::vector<Term>& reach_rec(const Term& e, TermSetMemo& memo) {
    auto it = memo.find(e.id());
    if (it != memo.end()) return it->second;

    std::vector<Term> out;
    switch (e.kind()) {
        case TermKind::Zero:
            break;
        case TermKind::One:
            out.push_back(Term::one());
            break;
        case TermKind::Act:
        case TermKind::Prop:
            out.push_back(Term::one());
            out.push_back(e);
            break;
        case TermKind::Plus: {
            out = reach_rec(e.left(), memo);
            const auto& r = reach_rec(e.right(), memo);
            out.insert(out.end(), r.begin(), r.end());
            break;
        }
        case TermKind::Seq: {
            const auto& l = reach_rec(e.left(), memo);
            for (const Term& t : l) out.push_back(Term::seq(t, e.right()));
            const auto& r = reach_rec(e.right(), memo);
            out.insert(out.end(), r.begin(), r.end());
            break;
        }
        case TermKind::Star: {
            out.push_back(Term::one());
            const auto& c = reach_rec(e.child(), memo);
            for (const Term& t : c) out.push_back(Term::seq(t, e));
            break;
        }
    }
    return memo.emplace(e.id(), sorted_unique(std::move(out))).first->second;
}

const std::vector<Term>& initial_rec(const Term& e, TermSetMemo& memo) {
    auto it = memo.find(e.id());
    if (it != memo.end()) return it->second;

    std::vector<Term> out;
    switch (e.kind()) {
        case TermKind::Zero:
            break;
        case TermKind::One:
            out.push_back(Term::one());
            break;
        case TermKind::Act:
        case TermKind::Prop:
            out.push_back(e);
            break;
        case TermKind::Plus: {
            out = initial_rec(e.left(), memo);
            const auto& r = initial_rec(e.right(), memo);
            out.insert(out.end(), r.begin(), r.end());
            break;
        }
        case TermKind::Seq: {
            const auto& l = initial_rec(e.left(), memo);
            for (const Term& t : l) out.push_back(Term::seq(t, e.right()));
            break;
        }
        case TermKind::Star: {
            out.push_back(Term::one());
            const auto& c = initial_rec(e.child(), memo);
            for (const Term& t : c) out.push_back(Term::seq(t, e));
            break;
        }
    }
    return memo.emplace(e.id(), sorted_unique(std::move(out))).first->second;
}

}  // namespace

std::vector<Term> reach(const Term& e) {
    TermSetMemo memo;
    return reach_rec(e, memo);
}

std::vector<Term> initial(const Term& e) {
    TermSetMemo memo;
    return initial_rec(e, memo);
}

Term fundamental_expansion(const Term& e, const Signature& sig) {
    std::vector<Term> parts;
    if (e.nullable()) parts.push_back(Term::one());
    detail::DerivMemo memo;
    for (const auto& a : sig.actions())
        for (const Term& t : delta_rec(e, a, memo))
            parts.push_back(Term::seq(Term::act(a), t));
    for (const Atom& alpha : all_atoms(sig)) {
        Term pi = Term::prop(pi_atom(alpha, sig));
        for (const Term& t : zeta_rec(e, alpha, sig, memo))
            parts.push_back(Term::seq(pi, t));
    }
    return canonical_sum(parts);
}

// ---------------------------------------------------------------------------
// DerivContext

DerivContext::DerivContext(const Signature& sig)
    : sig_(sig), memo_(new detail::DerivMemo()) {}

DerivContext::~DerivContext() { delete memo_; }

const std::vector<Term>& DerivContext::delta(const Term& e, int action_idx) {
    return delta_rec(e, sig_.actions()[action_idx], *memo_);
}

const std::vector<Term>& DerivContext::zeta(const Term& e,
                                            const Atom& alpha) {
    return zeta_rec(e, alpha, sig_, *memo_);
}

}  // namespace kao
