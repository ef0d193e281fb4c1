#ifndef KAO_DERIVATIVES_HPP
#define KAO_DERIVATIVES_HPP

#include <string_view>
#include <vector>

#include "kao/boolean.hpp"
#include "kao/syntax.hpp"

namespace kao {

/// Termination map: 1 iff the term accepts the empty word.
inline int epsilon(const Term& e) { return e.nullable(); }

/// Partial continuations after action a. Deterministically ordered.
std::vector<Term> delta(const Term& e, std::string_view a);

/// Partial continuations after observing atom alpha. The sequential case
/// may re-use the observation for the right factor when the left factor can
/// terminate, possibly by consuming alpha itself.
std::vector<Term> zeta(const Term& e, const Atom& alpha, const Signature& sig);

/// The finite, derivative-closed state space of e. Does not contain e
/// itself in general. |reach(e)| <= 2*size(e)+1.
std::vector<Term> reach(const Term& e);

/// Initial factors: a subset of reach(e) whose sum reconstructs e.
std::vector<Term> initial(const Term& e);

/// The expansion epsilon(e) + sum a.e' + sum pi_alpha.e' as a canonical sum.
Term fundamental_expansion(const Term& e, const Signature& sig);

namespace detail {
class DerivMemo;
}

/// Shared memoisation for delta/zeta/epsilon over one term universe; used
/// when many states of one automaton are differentiated.
class DerivContext {
  public:
    explicit DerivContext(const Signature& sig);
    ~DerivContext();
    DerivContext(const DerivContext&) = delete;
    DerivContext& operator=(const DerivContext&) = delete;

    const std::vector<Term>& delta(const Term& e, int action_idx);
    const std::vector<Term>& zeta(const Term& e, const Atom& alpha);
    const Signature& sig() const { return sig_; }

  private:
    const Signature& sig_;
    detail::DerivMemo* memo_;
};

}  // namespace kao

#endif
