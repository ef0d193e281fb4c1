#ifndef KAO_LINSYS_HPP
#define KAO_LINSYS_HPP

#include <utility>
#include <vector>

#include "kao/boolean.hpp"
#include "kao/semantics.hpp"
#include "kao/syntax.hpp"

namespace kao {

/// Vector of terms over a finite index set of terms (rendering order).
struct TermVector {
    std::vector<Term> index;
    std::vector<Term> entries;

    Term at(const Term& q) const;
    std::size_t dim() const { return index.size(); }
};

/// Square matrix of terms over the same kind of index set.
struct TermMatrix {
    std::vector<Term> index;
    std::vector<Term> entries;  // row-major

    Term& at(std::size_t i, std::size_t j) {
        return entries[i * index.size() + j];
    }
    const Term& at(std::size_t i, std::size_t j) const {
        return entries[i * index.size() + j];
    }
    std::size_t dim() const { return index.size(); }
};

/// The linear system of e over Q = reach(e): x marks terminating states,
/// M(q,q') sums the letters stepping q to q'.
std::pair<TermMatrix, TermVector> build_system(const Term& e,
                                               const Signature& sig);

/// Kleene star of a matrix by recursive 2x2 block decomposition; entries
/// are built syntactically with only unit/absorption simplification
/// (e+0, e.1, e.0, 0*), each an axiom instance.
TermMatrix mat_star(const TermMatrix& m);

TermMatrix mat_mul(const TermMatrix& a, const TermMatrix& b);
TermMatrix mat_add(const TermMatrix& a, const TermMatrix& b);
TermVector mat_vec_mul(const TermMatrix& m, const TermVector& x);

/// Least solution of e's system: mat_star(M) * x.
TermVector solve_vector(const Term& e, const Signature& sig);

/// The atomic, closed term equivalent to e: the sum of the least solution
/// over e's initial factors.
Term hat(const Term& e, const Signature& sig);

/// True iff every propositional subterm is exactly a pi_atom conjunction.
bool is_atomic(const Term& e, const Signature& sig);

/// Bounded closedness: the closed and contraction-free languages agree on
/// all words of length <= n. Exact at the bound; `slack` is accepted for
/// interface compatibility but the computation does not depend on it.
bool closed_bounded(const Term& e, int n, int slack, const Signature& sig,
                    const OracleBudget& budget = {});

}  // namespace kao

#endif
