#ifndef KAO_AUTOMATON_HPP
#define KAO_AUTOMATON_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kao/boolean.hpp"
#include "kao/semantics.hpp"
#include "kao/syntax.hpp"

namespace kao {

/// Subset of an Nda's states as a fixed-width bitset.
class StateSet {
  public:
    StateSet() : n_(0) {}
    explicit StateSet(std::size_t n) : bits_((n + 63) / 64, 0), n_(n) {}

    std::size_t universe_size() const { return n_; }
    bool test(std::size_t i) const {
        return (bits_[i >> 6] >> (i & 63)) & 1ull;
    }
    void set(std::size_t i) { bits_[i >> 6] |= 1ull << (i & 63); }
    void unite(const StateSet& o) {
        for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] |= o.bits_[k];
    }
    bool subset_of(const StateSet& o) const {
        for (std::size_t k = 0; k < bits_.size(); ++k)
            if (bits_[k] & ~o.bits_[k]) return false;
        return true;
    }
    bool empty() const {
        for (auto b : bits_)
            if (b) return false;
        return true;
    }
    std::size_t count() const;
    std::vector<std::size_t> members() const;

    bool operator==(const StateSet& o) const { return bits_ == o.bits_; }
    bool operator!=(const StateSet& o) const { return bits_ != o.bits_; }
    bool operator<(const StateSet& o) const { return bits_ < o.bits_; }
    std::size_t hash() const;

  private:
    std::vector<std::uint64_t> bits_;
    std::size_t n_;
};

struct StateSetHash {
    std::size_t operator()(const StateSet& s) const { return s.hash(); }
};

/// The syntactic automaton restricted to reach(e) + reach(f): states are
/// terms, output is the termination map, transitions are the partial
/// continuation maps. Letters are indexed atoms-first: 0..2^|obs|-1 the
/// atoms in bit order, then the actions in signature order.
struct Nda {
    Signature sig;
    std::vector<Term> states;
    std::vector<Atom> atoms;
    std::vector<char> out;                         // per state
    std::vector<std::vector<StateSet>> trans;      // [state][letter]
    StateSet start_left, start_right;              // iota(e), iota(f)

    int num_letters() const {
        return static_cast<int>(atoms.size() + sig.actions().size());
    }
    Letter letter_at(int idx) const;
    int letter_index(const Letter& l) const;
    int state_index(const Term& t) const;  // -1 if absent
};

Nda build_nda(const Term& e, const Term& f, const Signature& sig);

StateSet det_step(const Nda& nda, const StateSet& v, int letter);
int det_out(const Nda& nda, const StateSet& v);

/// Runs the determinised automaton along w from configuration v. With
/// v = nda.start_left this decides membership in the closed language of e.
bool accepts(const Nda& nda, const StateSet& v, const Word& w);

/// Graphviz export: nodes labelled with rendered terms, accepting states
/// double-circled, start sets as point nodes, dead atom columns omitted.
/// Byte-identical across runs.
std::string to_dot(const Nda& nda, const std::vector<StateSet>& starts);

}  // namespace kao

#endif
