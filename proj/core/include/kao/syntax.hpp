#ifndef KAO_SYNTAX_HPP
#define KAO_SYNTAX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kao/errors.hpp"

namespace kao {

/// A declared alphabet: observables (propositional symbols, at most 16) and
/// actions. The two name sets are disjoint and duplicate-free.
class Signature {
  public:
    Signature() = default;
    Signature(std::vector<std::string> observables,
              std::vector<std::string> actions);

    const std::vector<std::string>& observables() const { return observables_; }
    const std::vector<std::string>& actions() const { return actions_; }

    std::optional<int> observable_index(std::string_view name) const;
    std::optional<int> action_index(std::string_view name) const;

  private:
    std::vector<std::string> observables_;
    std::vector<std::string> actions_;
};

enum class PropKind : std::uint8_t { Bot, Top, Obs, Or, And, Not };

namespace detail {
struct PropNode;
struct TermNode;
}  // namespace detail

/// Immutable propositional term. Nodes are interned, so structural equality
/// is pointer equality and `id()` is stable within a run.
class Prop {
  public:
    Prop() : node_(nullptr) {}

    static Prop bot();
    static Prop top();
    static Prop obs(std::string_view name);
    static Prop disj(Prop a, Prop b);
    static Prop conj(Prop a, Prop b);
    static Prop neg(Prop a);

    PropKind kind() const;
    const std::string& obs_name() const;
    Prop left() const;
    Prop right() const;
    Prop child() const;

    bool valid() const { return node_ != nullptr; }
    std::uint64_t id() const;

    bool operator==(const Prop& o) const { return node_ == o.node_; }
    bool operator!=(const Prop& o) const { return node_ != o.node_; }
    bool operator<(const Prop& o) const { return id() < o.id(); }

    const detail::PropNode* raw() const { return node_; }

  private:
    explicit Prop(const detail::PropNode* n) : node_(n) {}
    const detail::PropNode* node_;
    friend class Term;
};

enum class TermKind : std::uint8_t { Zero, One, Act, Prop, Plus, Seq, Star };

/// Immutable guarded rational term. Structural equality is syntactic (no
/// implicit normalisation); interning makes it a pointer comparison.
class Term {
  public:
    Term() : node_(nullptr) {}

    static Term zero();
    static Term one();
    static Term act(std::string_view name);
    static Term prop(Prop p);
    static Term plus(Term a, Term b);
    static Term seq(Term a, Term b);
    static Term star(Term a);

    TermKind kind() const;
    const std::string& act_name() const;
    Prop prop_term() const;
    Term left() const;
    Term right() const;
    Term child() const;

    /// Node count of the term AST (an embedded proposition counts as one).
    int size() const;
    /// Cached value of the termination map.
    int nullable() const;

    bool valid() const { return node_ != nullptr; }
    std::uint64_t id() const;

    bool operator==(const Term& o) const { return node_ == o.node_; }
    bool operator!=(const Term& o) const { return node_ != o.node_; }
    /// Interning order; deterministic for a fixed construction order.
    bool operator<(const Term& o) const { return id() < o.id(); }

    const detail::TermNode* raw() const { return node_; }

  private:
    explicit Term(const detail::TermNode* n) : node_(n) {}
    const detail::TermNode* node_;
};

struct TermHash {
    std::size_t operator()(const Term& t) const {
        return static_cast<std::size_t>(t.id() * 0x9e3779b97f4a7c15ull);
    }
};

Term parse_term(std::string_view text, const Signature& sig);

/// Re-parses to a structurally identical term; parenthesized wherever the
/// grammar would otherwise regroup.
std::string render_term(const Term& e);
std::string render_prop(const Prop& p);

/// Deterministic n-ary sum: dedup, sort summands by rendering, left-associate.
/// The empty sum is 0, a singleton is the term itself.
Term canonical_sum(const std::vector<Term>& terms);

/// Scans expression texts and collects identifiers into a signature:
/// names inside [...] become observables, names outside become actions.
Signature infer_signature(const std::vector<std::string_view>& texts);

/// Sorts by render_term; ties cannot occur since rendering is injective.
std::vector<Term> sort_by_rendering(std::vector<Term> terms);

}  // namespace kao

#endif
