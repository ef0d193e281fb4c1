#include "kao/automaton.hpp"

#include <algorithm>
#include <unordered_map>

#include "kao/derivatives.hpp"
#include "kao/errors.hpp"

namespace kao {

std::size_t StateSet::count() const {
    std::size_t n = 0;
    for (auto b : bits_) n += static_cast<std::size_t>(__builtin_popcountll(b));
    return n;
}

std::vector<std::size_t> StateSet::members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
        if (test(i)) out.push_back(i);
    return out;
}

std::size_t StateSet::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto b : bits_) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
}

Letter Nda::letter_at(int idx) const {
    if (idx < static_cast<int>(atoms.size()))
        return atom_letter(atoms[static_cast<std::size_t>(idx)]);
    return action_letter(idx - static_cast<int>(atoms.size()));
}

int Nda::letter_index(const Letter& l) const {
    if (l.action) return static_cast<int>(atoms.size() + l.value);
    return static_cast<int>(l.value);
}

int Nda::state_index(const Term& t) const {
    auto it = std::lower_bound(states.begin(), states.end(), t);
    if (it != states.end() && *it == t)
        return static_cast<int>(it - states.begin());
    return -1;
}

Nda build_nda(const Term& e, const Term& f, const Signature& sig) {
    Nda nda;
    nda.sig = sig;
    nda.atoms = all_atoms(sig);

    std::vector<Term> states = reach(e);
    {
        std::vector<Term> rf = reach(f);
        states.insert(states.end(), rf.begin(), rf.end());
        std::sort(states.begin(), states.end());
        states.erase(std::unique(states.begin(), states.end()), states.end());
    }
    nda.states = std::move(states);

    const std::size_t n = nda.states.size();
    const int letters = nda.num_letters();
    nda.out.resize(n);
    nda.trans.assign(n, std::vector<StateSet>(
                            static_cast<std::size_t>(letters), StateSet(n)));

    DerivContext ctx(sig);
    for (std::size_t q = 0; q < n; ++q) {
        const Term& t = nda.states[q];
        nda.out[q] = static_cast<char>(t.nullable());
        for (int l = 0; l < letters; ++l) {
            const std::vector<Term>& succ =
                l < static_cast<int>(nda.atoms.size())
                    ? ctx.zeta(t, nda.atoms[static_cast<std::size_t>(l)])
                    : ctx.delta(t, l - static_cast<int>(nda.atoms.size()));
            StateSet& row = nda.trans[q][static_cast<std::size_t>(l)];
            for (const Term& s : succ) {
                int idx = nda.state_index(s);
                // reach-closure guarantees every successor is a state
                if (idx < 0) throw Error("derivative escaped the reach set");
                row.set(static_cast<std::size_t>(idx));
            }
        }
    }

    auto start_of = [&](const Term& t) {
        StateSet s(n);
        for (const Term& q : initial(t)) {
            int idx = nda.state_index(q);
            if (idx < 0) throw Error("initial factor escaped the reach set");
            s.set(static_cast<std::size_t>(idx));
        }
        return s;
    };
    nda.start_left = start_of(e);
    nda.start_right = start_of(f);
    return nda;
}

StateSet det_step(const Nda& nda, const StateSet& v, int letter) {
    StateSet out(nda.states.size());
    for (std::size_t q = 0; q < nda.states.size(); ++q)
        if (v.test(q)) out.unite(nda.trans[q][static_cast<std::size_t>(letter)]);
    return out;
}

int det_out(const Nda& nda, const StateSet& v) {
    for (std::size_t q = 0; q < nda.states.size(); ++q)
        if (v.test(q) && nda.out[q]) return 1;
    return 0;
}

bool accepts(const Nda& nda, const StateSet& v, const Word& w) {
    StateSet cur = v;
    for (const Letter& l : w) cur = det_step(nda, cur, nda.letter_index(l));
    return det_out(nda, cur) == 1;
}

std::string to_dot(const Nda& nda, const std::vector<StateSet>& starts) {
    // display order: states sorted by rendering
    std::vector<std::size_t> order(nda.states.size());
    {
        std::vector<std::pair<std::string, std::size_t>> keyed;
        for (std::size_t q = 0; q < nda.states.size(); ++q)
            keyed.emplace_back(render_term(nda.states[q]), q);
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < keyed.size(); ++i)
            order[i] = keyed[i].second;
    }
    std::vector<std::size_t> display_of(nda.states.size());
    for (std::size_t i = 0; i < order.size(); ++i) display_of[order[i]] = i;

    // atoms whose column is empty everywhere are omitted
    std::vector<bool> live_letter(static_cast<std::size_t>(nda.num_letters()),
                                  false);
    for (int l = 0; l < nda.num_letters(); ++l) {
        if (l >= static_cast<int>(nda.atoms.size())) {
            live_letter[static_cast<std::size_t>(l)] = true;
            continue;
        }
        for (std::size_t q = 0; q < nda.states.size(); ++q)
            if (!nda.trans[q][static_cast<std::size_t>(l)].empty()) {
                live_letter[static_cast<std::size_t>(l)] = true;
                break;
            }
    }

    auto escape = [](const std::string& s) {
        std::string out;
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out;
    };

    std::string dot = "digraph nda {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::size_t q = order[i];
        dot += "  s" + std::to_string(i) + " [label=\"" +
               escape(render_term(nda.states[q])) + "\", shape=" +
               (nda.out[q] ? "doublecircle" : "circle") + "];\n";
    }
    for (std::size_t s = 0; s < starts.size(); ++s) {
        dot += "  start" + std::to_string(s) + " [shape=point];\n";
        for (std::size_t q : starts[s].members())
            dot += "  start" + std::to_string(s) + " -> s" +
                   std::to_string(display_of[q]) + ";\n";
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::size_t q = order[i];
        for (int l = 0; l < nda.num_letters(); ++l) {
            if (!live_letter[static_cast<std::size_t>(l)]) continue;
            Letter letter = nda.letter_at(l);
            std::string label =
                letter.action
                    ? nda.sig.actions()[letter.value]
                    : render_atom(Atom(letter.value,
                                       static_cast<int>(
                                           nda.sig.observables().size())),
                                  nda.sig);
            for (std::size_t t :
                 nda.trans[q][static_cast<std::size_t>(l)].members())
                dot += "  s" + std::to_string(i) + " -> s" +
                       std::to_string(display_of[t]) + " [label=\"" +
                       escape(label) + "\"];\n";
        }
    }
    dot += "}\n";
    return dot;
}

}  // namespace kao
