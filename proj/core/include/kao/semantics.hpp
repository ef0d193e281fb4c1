#ifndef KAO_SEMANTICS_HPP
#define KAO_SEMANTICS_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "kao/boolean.hpp"
#include "kao/syntax.hpp"

namespace kao {

/// One letter of an observation word: either an atom or an action index.
struct Letter {
    bool action;
    std::uint32_t value;  // atom bit pattern, or index into sig.actions()

    bool operator==(const Letter& o) const {
        return action == o.action && value == o.value;
    }
    bool operator!=(const Letter& o) const { return !(*this == o); }
    bool operator<(const Letter& o) const {
        if (action != o.action) return !action;  // atoms sort before actions
        return value < o.value;
    }
};

inline Letter atom_letter(const Atom& a) { return Letter{false, a.bits()}; }
inline Letter action_letter(int idx) {
    return Letter{true, static_cast<std::uint32_t>(idx)};
}

using Word = std::vector<Letter>;
using WordSet = std::set<Word>;

std::string render_word(const Word& w, const Signature& sig);

/// Shared cap for the brute-force enumerations below; counts stored words.
struct OracleBudget {
    std::size_t max_words = 10'000'000;
};

/// Default expansion slack for the bounded membership oracle: 2*size(e)+2.
int default_slack(const Term& e);

/// Word membership in the plain (contraction-free) language of e, by
/// structural recursion over word spans with memoisation.
bool wkao_member(const Term& e, const Word& w, const Signature& sig);

/// All single-step contractions of w: one adjacent equal atom pair merged.
WordSet contract_steps(const Word& w);

/// Least superset of L closed under contract_steps, by worklist.
WordSet closure_finite(const WordSet& L);

/// The contraction-free language of e restricted to words of length
/// <= max_len. Exact within the bound.
WordSet wkao_language(const Term& e, int max_len, const Signature& sig,
                      const OracleBudget& budget = {});

/// The closed (contraction-saturated) language of e restricted to words of
/// length <= max_len. Exact within the bound: computed compositionally with
/// the closure pushed through sums, products and stars.
WordSet kao_language(const Term& e, int max_len, const Signature& sig,
                     const OracleBudget& budget = {});

/// Slack-limited under-approximation: the closure of the contraction-free
/// language cut at length n+slack, truncated back to length <= n. Monotone
/// in slack; stabilises to kao_language(e, n) for slack large enough.
WordSet kao_language_bounded(const Term& e, int n, int slack,
                             const Signature& sig,
                             const OracleBudget& budget = {});

/// True iff some expansion of w (duplicating atom letters, at most `slack`
/// extra letters) is in the contraction-free language of e. Sound for
/// membership in the closed language; complete only relative to slack.
bool kao_member_bounded(const Term& e, const Word& w, int slack,
                        const Signature& sig, const OracleBudget& budget = {});

}  // namespace kao

#endif
