// Command-line front end: decide / derive / automaton / hat / oracle /
// crossval over guarded rational expressions.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kao/boolean.hpp"
#include "kao/derivatives.hpp"
#include "kao/equivalence.hpp"
#include "kao/harness.hpp"
#include "kao/linsys.hpp"
#include "kao/semantics.hpp"
#include "kao/syntax.hpp"

namespace {

kao::Signature make_signature(const std::vector<std::string>& obs,
                              const std::vector<std::string>& act,
                              const std::vector<std::string>& exprs) {
    std::vector<std::string_view> views(exprs.begin(), exprs.end());
    kao::Signature inferred = kao::infer_signature(views);
    return kao::Signature(obs.empty() ? inferred.observables() : obs,
                          act.empty() ? inferred.actions() : act);
}

std::string render_set(const std::vector<kao::Term>& terms) {
    std::vector<kao::Term> sorted = kao::sort_by_rendering(terms);
    std::string out = "{";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i) out += ", ";
        out += kao::render_term(sorted[i]);
    }
    out += "}";
    return out;
}

int cmd_decide(const std::string& lhs, const std::string& rhs,
               const kao::Signature& sig, bool json) {
    kao::Verdict v = kao::decide(kao::parse_term(lhs, sig),
                                 kao::parse_term(rhs, sig), sig);
    if (json) {
        std::cout << kao::verdict_to_json(v, sig) << "\n";
    } else if (v.equivalent) {
        std::cout << "equivalent\n";
    } else {
        std::cout << "inequivalent: " << kao::render_word(v.witness, sig)
                  << "\n";
    }
    return v.equivalent ? 0 : 1;
}

int cmd_derive(const std::string& expr, const kao::Signature& sig) {
    kao::Term e = kao::parse_term(expr, sig);
    std::cout << "epsilon: " << kao::epsilon(e) << "\n";
    for (const kao::Atom& alpha : kao::all_atoms(sig))
        std::cout << "zeta " << kao::render_atom(alpha, sig) << ": "
                  << render_set(kao::zeta(e, alpha, sig)) << "\n";
    for (const std::string& a : sig.actions())
        std::cout << "delta " << a << ": " << render_set(kao::delta(e, a))
                  << "\n";
    return 0;
}

int cmd_automaton(const std::string& lhs, const std::string& rhs,
                  const kao::Signature& sig, const std::string& out_file) {
    kao::Term e = kao::parse_term(lhs, sig);
    kao::Term f = rhs.empty() ? e : kao::parse_term(rhs, sig);
    kao::Nda nda = kao::build_nda(e, f, sig);
    std::vector<kao::StateSet> starts = {nda.start_left};
    if (!rhs.empty()) starts.push_back(nda.start_right);
    std::string dot = kao::to_dot(nda, starts);
    if (out_file.empty()) {
        std::cout << dot;
    } else {
        std::ofstream out(out_file);
        if (!out) throw kao::Error("cannot open output file: " + out_file);
        out << dot;
    }
    return 0;
}

int cmd_hat(const std::string& expr, const kao::Signature& sig, bool check) {
    kao::Term e = kao::parse_term(expr, sig);
    kao::Term h = kao::hat(e, sig);
    std::cout << kao::render_term(h) << "\n";
    if (!check) return 0;

    bool atomic = kao::is_atomic(h, sig);
    bool equiv = kao::decide(e, h, sig).equivalent;
    bool closed = kao::closed_bounded(h, 5, kao::default_slack(h), sig);
    std::cout << "atomic: " << (atomic ? "yes" : "no") << "\n"
              << "equivalent: " << (equiv ? "yes" : "no") << "\n"
              << "closed (words up to length 5): " << (closed ? "yes" : "no")
              << "\n";
    return atomic && equiv && closed ? 0 : 1;
}

int cmd_oracle(const std::string& expr, const kao::Signature& sig,
               int max_len, int slack) {
    kao::Term e = kao::parse_term(expr, sig);
    if (slack < 0) slack = kao::default_slack(e);
    for (const kao::Word& w :
         kao::kao_language_bounded(e, max_len, slack, sig))
        std::cout << kao::render_word(w, sig) << "\n";
    return 0;
}

int cmd_crossval(std::uint64_t seed, int pairs, int size) {
    kao::GenConfig cfg;
    cfg.seed = seed;
    cfg.max_size = size;
    kao::CrossValReport report = kao::cross_validate(cfg, pairs, 6);
    std::cout << report.to_jsonl();
    std::cerr << "pairs: " << report.pairs
              << ", failures: " << report.failures << "\n";
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"guarded rational expression equivalence toolkit"};
    app.require_subcommand(1);

    std::vector<std::string> obs, act;
    std::string expr1, expr2, out_file;
    bool json = false, check = false;
    int max_len = 4, slack = -1, pairs = 100, size = 6;
    std::uint64_t seed = 1;

    auto add_sig = [&](CLI::App* sub) {
        sub->add_option("--obs", obs, "observable names")->delimiter(',');
        sub->add_option("--act", act, "action names")->delimiter(',');
    };

    CLI::App* decide = app.add_subcommand("decide", "decide equivalence");
    add_sig(decide);
    decide->add_option("expr1", expr1)->required();
    decide->add_option("expr2", expr2)->required();
    decide->add_flag("--json", json, "JSON verdict");

    CLI::App* derive = app.add_subcommand("derive", "print derivative tables");
    add_sig(derive);
    derive->add_option("expr", expr1)->required();

    CLI::App* automaton =
        app.add_subcommand("automaton", "export the syntactic automaton");
    add_sig(automaton);
    automaton->add_flag("--dot", "DOT output (the only supported format)");
    automaton->add_option("-o,--output", out_file, "write to file");
    automaton->add_option("expr1", expr1)->required();
    automaton->add_option("expr2", expr2);

    CLI::App* hat = app.add_subcommand("hat", "atomic closed equivalent");
    add_sig(hat);
    hat->add_flag("--check", check, "verify the transformation");
    hat->add_option("expr", expr1)->required();

    CLI::App* oracle =
        app.add_subcommand("oracle", "bounded closed-language words");
    add_sig(oracle);
    oracle->add_option("--max-len", max_len, "maximum word length")
        ->required();
    oracle->add_option("--slack", slack, "closure expansion slack");
    oracle->add_option("expr", expr1)->required();

    CLI::App* crossval =
        app.add_subcommand("crossval", "random cross-validation campaign");
    crossval->add_option("--seed", seed, "base seed");
    crossval->add_option("--pairs", pairs, "number of pairs");
    crossval->add_option("--size", size, "maximum term size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::vector<std::string> exprs;
        if (!expr1.empty()) exprs.push_back(expr1);
        if (!expr2.empty()) exprs.push_back(expr2);
        kao::Signature sig = make_signature(obs, act, exprs);

        if (decide->parsed()) return cmd_decide(expr1, expr2, sig, json);
        if (derive->parsed()) return cmd_derive(expr1, sig);
        if (automaton->parsed())
            return cmd_automaton(expr1, expr2, sig, out_file);
        if (hat->parsed()) return cmd_hat(expr1, sig, check);
        if (oracle->parsed()) return cmd_oracle(expr1, sig, max_len, slack);
        if (crossval->parsed()) return cmd_crossval(seed, pairs, size);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
