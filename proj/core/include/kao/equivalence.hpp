#ifndef KAO_EQUIVALENCE_HPP
#define KAO_EQUIVALENCE_HPP

#include <string>
#include <utility>
#include <vector>

#include "kao/automaton.hpp"
#include "kao/semantics.hpp"

namespace kao {

/// A pair of determinised configurations together with the letters read
/// from the start pair to reach it.
struct RelationEntry {
    StateSet lhs, rhs;
    Word access;
};

using Relation = std::vector<RelationEntry>;

struct Verdict {
    bool equivalent;
    Relation relation;  // certificate when equivalent
    Word witness;       // separating word when inequivalent
};

struct HkcOptions {
    /// Include still-pending pairs in the congruence check (the optimised
    /// variant). Disable for debugging comparisons.
    bool include_pending = true;
};

enum class TraceStatus { Added, Skipped, Mismatch };

struct TraceEntry {
    StateSet lhs, rhs;
    Word access;
    TraceStatus status;
};

/// Membership of (u,v) in the congruence closure of `rules`: both sides are
/// rewritten to union-normal form and compared.
bool congruence_member(const StateSet& u, const StateSet& v,
                       const std::vector<std::pair<StateSet, StateSet>>& rules);

/// Bisimulation-up-to-congruence search over determinised configurations.
/// FIFO worklist; letters explored atoms-first, so witnesses come
/// shortest-first and runs are reproducible.
Verdict hkc_decide(const Nda& nda, const StateSet& u, const StateSet& v,
                   const HkcOptions& opts = {},
                   std::vector<TraceEntry>* trace = nullptr);

/// Decides e == f in the closed-language model (and hence provable
/// equivalence), via the syntactic automaton restricted to their reaches.
Verdict decide(const Term& e, const Term& f, const Signature& sig,
               const HkcOptions& opts = {},
               std::vector<TraceEntry>* trace = nullptr);

/// Plain up-to-equivalence variant: pairs are merged in a union-find and a
/// pair is skipped only when already identified. Same verdicts as decide;
/// witnesses may differ.
Verdict naive_decide(const Term& e, const Term& f, const Signature& sig);

/// Validates the bisimulation-up-to-congruence conditions literally:
/// outputs agree on every pair and every letter-successor pair lies in the
/// congruence closure of R.
bool check_bisim_up_to_congruence(const Nda& nda, const Relation& R);

/// {"result":"equivalent","relation_size":N} or
/// {"result":"inequivalent","witness":"..."}.
std::string verdict_to_json(const Verdict& v, const Signature& sig);

}  // namespace kao

#endif
