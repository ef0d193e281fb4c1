#include "kao/harness.hpp"

#include <algorithm>

#include "kao/equivalence.hpp"
#include "kao/errors.hpp"
#include "kao/semantics.hpp"

namespace kao {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw Error("Rng::below(0)");
    // rejection sampling to avoid modulo bias
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = eng_();
    } while (x >= limit);
    return x % n;
}

double Rng::unit() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

int Rng::pick(const std::vector<double>& weights) {
    double total = 0;
    for (double w : weights) total += w;
    double r = unit() * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        r -= weights[i];
        if (r < 0) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size()) - 1;
}

// ---------------------------------------------------------------------------
// Generation

void GenConfig::validate() const {
    if (max_size < 1) throw Error("max_size must be positive");
    if (n_obs < 1 || n_obs > 16) throw Error("n_obs must be in 1..16");
    if (n_act < 1) throw Error("n_act must be positive");
    if (max_star_depth < 0) throw Error("max_star_depth must be nonnegative");
    const double ws[] = {weights.zero, weights.one, weights.act,
                         weights.prop, weights.plus, weights.seq,
                         weights.star};
    double total = 0;
    for (double w : ws) {
        if (w < 0) throw Error("weights must be nonnegative");
        total += w;
    }
    if (total <= 0) throw Error("weights must not all be zero");
}

Signature gen_signature(const GenConfig& cfg) {
    std::vector<std::string> obs, act;
    for (int i = 1; i <= cfg.n_obs; ++i) obs.push_back("o" + std::to_string(i));
    for (int i = 1; i <= cfg.n_act; ++i) act.push_back("x" + std::to_string(i));
    return Signature(obs, act);
}

Prop gen_prop(const GenConfig& cfg, Rng& rng, int depth) {
    if (depth <= 0 || rng.unit() < 0.55) {
        std::uint64_t k = rng.below(static_cast<std::uint64_t>(cfg.n_obs) + 2);
        if (k == static_cast<std::uint64_t>(cfg.n_obs)) return Prop::top();
        if (k == static_cast<std::uint64_t>(cfg.n_obs) + 1) return Prop::bot();
        return Prop::obs("o" + std::to_string(k + 1));
    }
    switch (rng.below(3)) {
        case 0:
            return Prop::disj(gen_prop(cfg, rng, depth - 1),
                              gen_prop(cfg, rng, depth - 1));
        case 1:
            return Prop::conj(gen_prop(cfg, rng, depth - 1),
                              gen_prop(cfg, rng, depth - 1));
        default:
            return Prop::neg(gen_prop(cfg, rng, depth - 1));
    }
}

namespace {

Term gen_rec(const GenConfig& cfg, Rng& rng, int budget, int star_depth) {
    const auto& w = cfg.weights;
    // the node itself costs 1, children share the rest
    bool binary_ok = budget >= 3;
    bool star_ok = budget >= 2 && star_depth < cfg.max_star_depth;
    std::vector<double> weights = {
        w.zero,
        w.one,
        w.act,
        w.prop,
        binary_ok ? w.plus : 0.0,
        binary_ok ? w.seq : 0.0,
        star_ok ? w.star : 0.0,
    };
    switch (rng.pick(weights)) {
        case 0:
            return Term::zero();
        case 1:
            return Term::one();
        case 2: {
            std::uint64_t k =
                rng.below(static_cast<std::uint64_t>(cfg.n_act));
            return Term::act("x" + std::to_string(k + 1));
        }
        case 3:
            return Term::prop(gen_prop(cfg, rng, 2));
        case 4: {
            int left = 1 + static_cast<int>(rng.below(
                               static_cast<std::uint64_t>(budget - 2)));
            return Term::plus(gen_rec(cfg, rng, left, star_depth),
                              gen_rec(cfg, rng, budget - 1 - left, star_depth));
        }
        case 5: {
            int left = 1 + static_cast<int>(rng.below(
                               static_cast<std::uint64_t>(budget - 2)));
            return Term::seq(gen_rec(cfg, rng, left, star_depth),
                             gen_rec(cfg, rng, budget - 1 - left, star_depth));
        }
        default:
            return Term::star(gen_rec(cfg, rng, budget - 1, star_depth + 1));
    }
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

Term gen_term(const GenConfig& cfg, Rng& rng) {
    cfg.validate();
    return gen_rec(cfg, rng, cfg.max_size, 0);
}

Term gen_term(const GenConfig& cfg) {
    Rng rng(cfg.seed);
    return gen_term(cfg, rng);
}

// ---------------------------------------------------------------------------
// Cross-validation

std::string CrossValReport::to_jsonl() const {
    std::string out;
    for (const PairRecord& r : records) {
        out += "{\"pair\":" + std::to_string(r.pair_index);
        out += ",\"seed_left\":" + std::to_string(r.seed_left);
        out += ",\"seed_right\":" + std::to_string(r.seed_right);
        out += ",\"left\":\"" + json_escape(r.term_left) + "\"";
        out += ",\"right\":\"" + json_escape(r.term_right) + "\"";
        out += ",\"equivalent\":";
        out += r.equivalent ? "true" : "false";
        out += ",\"verdicts_agree\":";
        out += r.verdicts_agree ? "true" : "false";
        if (r.equivalent) {
            out += ",\"languages_equal\":";
            out += r.languages_equal ? "true" : "false";
            out += ",\"certificate_ok\":";
            out += r.certificate_ok ? "true" : "false";
        } else {
            out += ",\"witness_verified\":";
            out += r.witness_verified ? "true" : "false";
        }
        out += ",\"ok\":";
        out += r.ok ? "true" : "false";
        if (!r.note.empty()) out += ",\"note\":\"" + json_escape(r.note) + "\"";
        out += "}\n";
    }
    return out;
}

CrossValReport cross_validate(const GenConfig& cfg, int pairs, int n) {
    cfg.validate();
    Signature sig = gen_signature(cfg);
    CrossValReport report;
    report.pairs = pairs;

    for (int i = 0; i < pairs; ++i) {
        PairRecord rec;
        rec.pair_index = i;
        rec.seed_left = cfg.seed + 2 * static_cast<std::uint64_t>(i);
        rec.seed_right = cfg.seed + 2 * static_cast<std::uint64_t>(i) + 1;

        GenConfig c = cfg;
        c.seed = rec.seed_left;
        Term e = gen_term(c);
        c.seed = rec.seed_right;
        Term f = gen_term(c);
        rec.term_left = render_term(e);
        rec.term_right = render_term(f);

        try {
            Nda nda = build_nda(e, f, sig);
            Verdict v = hkc_decide(nda, nda.start_left, nda.start_right);
            Verdict nv = naive_decide(e, f, sig);
            rec.verdicts_agree = v.equivalent == nv.equivalent;
            rec.equivalent = v.equivalent;

            if (v.equivalent) {
                rec.languages_equal =
                    kao_language(e, n, sig) == kao_language(f, n, sig);
                rec.certificate_ok =
                    check_bisim_up_to_congruence(nda, v.relation);
                rec.ok = rec.verdicts_agree && rec.languages_equal &&
                         rec.certificate_ok;
            } else {
                int slack = std::max(default_slack(e), default_slack(f));
                bool in_e = kao_member_bounded(e, v.witness, slack, sig);
                bool in_f = kao_member_bounded(f, v.witness, slack, sig);
                bool automaton_agrees =
                    accepts(nda, nda.start_left, v.witness) == in_e &&
                    accepts(nda, nda.start_right, v.witness) == in_f;
                rec.witness_verified = (in_e != in_f) && automaton_agrees;
                rec.ok = rec.verdicts_agree && rec.witness_verified;
            }
        } catch (const std::exception& ex) {
            rec.ok = false;
            rec.note = ex.what();
        }
        if (!rec.ok) ++report.failures;
        report.records.push_back(std::move(rec));
    }
    return report;
}

}  // namespace kao
