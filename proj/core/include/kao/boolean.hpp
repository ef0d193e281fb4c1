#ifndef KAO_BOOLEAN_HPP
#define KAO_BOOLEAN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kao/syntax.hpp"

namespace kao {

/// A complete truth assignment to the observables: bit i set means
/// observable i holds. Ordered by bit pattern for deterministic iteration.
class Atom {
  public:
    Atom() : bits_(0), width_(0) {}
    Atom(std::uint32_t bits, int width) : bits_(bits), width_(width) {}

    std::uint32_t bits() const { return bits_; }
    int width() const { return width_; }
    bool contains(int i) const { return (bits_ >> i) & 1u; }

    bool operator==(const Atom& o) const {
        return bits_ == o.bits_ && width_ == o.width_;
    }
    bool operator!=(const Atom& o) const { return !(*this == o); }
    bool operator<(const Atom& o) const { return bits_ < o.bits_; }

  private:
    std::uint32_t bits_;
    int width_;
};

/// All 2^|observables| atoms in ascending bit order.
std::vector<Atom> all_atoms(const Signature& sig);

/// Whether the atom satisfies the proposition (structural evaluation).
bool holds(const Prop& p, const Atom& alpha, const Signature& sig);

/// The set of satisfying atoms, in atom order.
std::vector<Atom> sem_ba(const Prop& p, const Signature& sig);

/// The discriminating conjunction for an atom: every observable appears,
/// positively or negated, in signature order, left-associated. The empty
/// conjunction is T.
Prop pi_atom(const Atom& alpha, const Signature& sig);

/// Semantic entailment: every satisfying atom of p satisfies q.
bool ba_leq(const Prop& p, const Prop& q, const Signature& sig);

/// "{o1,o2}" with names in signature order; the empty atom is "{}".
std::string render_atom(const Atom& alpha, const Signature& sig);

}  // namespace kao

#endif
