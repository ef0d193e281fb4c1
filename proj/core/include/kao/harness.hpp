#ifndef KAO_HARNESS_HPP
#define KAO_HARNESS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kao/syntax.hpp"

namespace kao {

/// Deterministic random source; all draws go through hand-rolled bounded
/// sampling so results are identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [0, 1).
    double unit();
    /// Index into a discrete weight vector.
    int pick(const std::vector<double>& weights);

  private:
    std::mt19937_64 eng_;
};

struct GenConfig {
    std::uint64_t seed = 1;
    int max_size = 6;
    int n_obs = 2;
    int n_act = 2;

    struct Weights {
        double zero = 0.04;
        double one = 0.08;
        double act = 0.28;
        double prop = 0.20;
        double plus = 0.16;
        double seq = 0.16;
        double star = 0.08;
    } weights;

    /// Stars are not nested deeper than this; keeps bounded oracles fast.
    int max_star_depth = 2;

    void validate() const;  // throws Error on bad fields
};

/// Signature used by generated terms: observables o1..oN, actions x1..xN.
Signature gen_signature(const GenConfig& cfg);

/// Deterministic random term of size <= cfg.max_size; every constructor is
/// reachable with positive probability.
Term gen_term(const GenConfig& cfg);
Term gen_term(const GenConfig& cfg, Rng& rng);
Prop gen_prop(const GenConfig& cfg, Rng& rng, int depth = 2);

struct PairRecord {
    int pair_index = 0;
    std::uint64_t seed_left = 0, seed_right = 0;
    std::string term_left, term_right;
    bool verdicts_agree = false;
    bool equivalent = false;
    bool witness_verified = false;   // inequivalent pairs
    bool languages_equal = false;    // equivalent pairs
    bool certificate_ok = false;     // equivalent pairs
    bool ok = false;
    std::string note;
};

struct CrossValReport {
    int pairs = 0;
    int failures = 0;
    std::vector<PairRecord> records;

    bool ok() const { return failures == 0; }
    /// One JSON object per line, in pair order.
    std::string to_jsonl() const;
};

/// Cross-validates the congruence-based decider against the plain
/// union-find decider and the brute-force language oracle on random pairs.
/// `n` bounds the word length used for language comparison.
CrossValReport cross_validate(const GenConfig& cfg, int pairs, int n);

}  // namespace kao

#endif
