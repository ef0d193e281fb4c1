#include "kao/semantics.hpp"

#include <unordered_map>

#include "kao/errors.hpp"

namespace kao {

std::string render_word(const Word& w, const Signature& sig) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        if (w[i].action)
            out += sig.actions()[w[i].value];
        else
            out += render_atom(Atom(w[i].value,
                                    static_cast<int>(sig.observables().size())),
                               sig);
    }
    return out;
}

int default_slack(const Term& e) { return 2 * e.size() + 2; }

// ---------------------------------------------------------------------------
// Word membership in the contraction-free language

namespace {

struct SpanKey {
    std::uint64_t term;
    int i, j;
    bool operator==(const SpanKey& o) const {
        return term == o.term && i == o.i && j == o.j;
    }
};
struct SpanKeyHash {
    std::size_t operator()(const SpanKey& k) const {
        std::uint64_t h = k.term * 0x9e3779b97f4a7c15ull;
        h ^= (static_cast<std::uint64_t>(k.i) << 32) ^
             static_cast<std::uint64_t>(k.j);
        return static_cast<std::size_t>(h * 0xff51afd7ed558ccdull);
    }
};

struct Matcher {
    const Word& w;
    const Signature& sig;
    std::unordered_map<SpanKey, bool, SpanKeyHash> memo;

    bool match(const Term& e, int i, int j) {
        SpanKey key{e.id(), i, j};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool r = compute(e, i, j);
        memo.emplace(key, r);
        return r;
    }

    bool compute(const Term& e, int i, int j) {
        switch (e.kind()) {
            case TermKind::Zero: return false;
            case TermKind::One: return i == j;
            case TermKind::Act: {
                if (j != i + 1 || !w[i].action) return false;
                return sig.actions()[w[i].value] == e.act_name();
            }
            case TermKind::Prop: {
                if (j != i + 1 || w[i].action) return false;
                Atom alpha(w[i].value,
                           static_cast<int>(sig.observables().size()));
                return holds(e.prop_term(), alpha, sig);
            }
            case TermKind::Plus:
                return match(e.left(), i, j) || match(e.right(), i, j);
            case TermKind::Seq:
                for (int k = i; k <= j; ++k)
                    if (match(e.left(), i, k) && match(e.right(), k, j))
                        return true;
                return false;
            case TermKind::Star:
                if (i == j) return true;
                // first factor consumes at least one letter
                for (int k = i + 1; k <= j; ++k)
                    if (match(e.child(), i, k) && match(e, k, j)) return true;
                return false;
        }
        return false;
    }
};

}  // namespace

bool wkao_member(const Term& e, const Word& w, const Signature& sig) {
    Matcher m{w, sig, {}};
    return m.match(e, 0, static_cast<int>(w.size()));
}

// ---------------------------------------------------------------------------
// Contraction

WordSet contract_steps(const Word& w) {
    WordSet result;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i].action || w[i + 1].action) continue;
        if (w[i].value != w[i + 1].value) continue;
        Word v;
        v.reserve(w.size() - 1);
        v.insert(v.end(), w.begin(), w.begin() + static_cast<long>(i));
        v.insert(v.end(), w.begin() + static_cast<long>(i) + 1, w.end());
        result.insert(std::move(v));
    }
    return result;
}

WordSet closure_finite(const WordSet& L) {
    WordSet result = L;
    std::vector<Word> worklist(L.begin(), L.end());
    while (!worklist.empty()) {
        Word w = std::move(worklist.back());
        worklist.pop_back();
        for (const Word& v : contract_steps(w))
            if (result.insert(v).second) worklist.push_back(v);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Bounded language enumeration

namespace {

struct Counter {
    std::size_t used = 0;
    std::size_t cap;
    void charge(std::size_t n = 1) {
        used += n;
        if (used > cap)
            throw BudgetExceeded("language enumeration exceeded " +
                                 std::to_string(cap) + " words");
    }
};

// Pairwise concatenations of length <= max_len. When `merge_boundary` is
// set, also the boundary contractions uav for u.a in A and a.v in B; with
// closed operands this yields exactly the closed product cut at the bound.
WordSet concat_bounded(const WordSet& a, const WordSet& b, int max_len,
                       bool merge_boundary, Counter& counter) {
    WordSet result;
    for (const Word& u : a) {
        if (static_cast<int>(u.size()) > max_len) continue;
        for (const Word& v : b) {
            counter.charge();
            if (static_cast<int>(u.size() + v.size()) <= max_len) {
                Word uv = u;
                uv.insert(uv.end(), v.begin(), v.end());
                result.insert(std::move(uv));
            }
            if (merge_boundary && !u.empty() && !v.empty() &&
                !u.back().action && u.back() == v.front() &&
                static_cast<int>(u.size() + v.size()) - 1 <= max_len) {
                Word uv = u;
                uv.insert(uv.end(), v.begin() + 1, v.end());
                result.insert(std::move(uv));
            }
        }
    }
    return result;
}

WordSet star_bounded(const WordSet& base, int max_len, bool merge_boundary,
                     Counter& counter) {
    WordSet result;
    result.insert(Word{});
    for (;;) {
        WordSet next = concat_bounded(base, result, max_len, merge_boundary,
                                      counter);
        std::size_t before = result.size();
        result.insert(next.begin(), next.end());
        if (result.size() == before) return result;
    }
}

WordSet language_bounded(const Term& e, int max_len, const Signature& sig,
                         bool closed, Counter& counter) {
    switch (e.kind()) {
        case TermKind::Zero: return {};
        case TermKind::One: return {Word{}};
        case TermKind::Act: {
            if (max_len < 1) return {};
            auto idx = sig.action_index(e.act_name());
            if (!idx) throw UnknownSymbol(e.act_name(), "action");
            counter.charge();
            return {Word{action_letter(*idx)}};
        }
        case TermKind::Prop: {
            if (max_len < 1) return {};
            WordSet result;
            for (const Atom& alpha : sem_ba(e.prop_term(), sig)) {
                counter.charge();
                result.insert(Word{atom_letter(alpha)});
            }
            return result;
        }
        case TermKind::Plus: {
            WordSet l = language_bounded(e.left(), max_len, sig, closed,
                                         counter);
            WordSet r = language_bounded(e.right(), max_len, sig, closed,
                                         counter);
            l.insert(r.begin(), r.end());
            return l;
        }
        case TermKind::Seq: {
            WordSet l = language_bounded(e.left(), max_len, sig, closed,
                                         counter);
            WordSet r = language_bounded(e.right(), max_len, sig, closed,
                                         counter);
            return concat_bounded(l, r, max_len, closed, counter);
        }
        case TermKind::Star: {
            WordSet base = language_bounded(e.child(), max_len, sig, closed,
                                            counter);
            return star_bounded(base, max_len, closed, counter);
        }
    }
    return {};
}

}  // namespace

WordSet wkao_language(const Term& e, int max_len, const Signature& sig,
                      const OracleBudget& budget) {
    Counter counter{0, budget.max_words};
    return language_bounded(e, max_len, sig, /*closed=*/false, counter);
}

WordSet kao_language(const Term& e, int max_len, const Signature& sig,
                     const OracleBudget& budget) {
    Counter counter{0, budget.max_words};
    return language_bounded(e, max_len, sig, /*closed=*/true, counter);
}

WordSet kao_language_bounded(const Term& e, int n, int slack,
                             const Signature& sig,
                             const OracleBudget& budget) {
    WordSet raw = wkao_language(e, n + slack, sig, budget);
    WordSet closed = closure_finite(raw);
    WordSet result;
    for (const Word& w : closed)
        if (static_cast<int>(w.size()) <= n) result.insert(w);
    return result;
}

// ---------------------------------------------------------------------------
// Bounded membership in the closed language

namespace {

// Expansions of w obtained by duplicating atom letters, at most `extra`
// additional letters in total; returns true on the first expansion accepted
// by the contraction-free matcher.
bool try_expansions(const Term& e, const Word& w, std::size_t pos,
                    Word& prefix, int extra, const Signature& sig,
                    Counter& counter) {
    if (pos == w.size()) {
        counter.charge();
        return wkao_member(e, prefix, sig);
    }
    const Letter& l = w[pos];
    int copies_max = l.action ? 0 : extra;
    for (int copies = 0; copies <= copies_max; ++copies) {
        for (int c = 0; c < 1 + copies; ++c) prefix.push_back(l);
        bool found = try_expansions(e, w, pos + 1, prefix, extra - copies,
                                    sig, counter);
        for (int c = 0; c < 1 + copies; ++c) prefix.pop_back();
        if (found) return true;
    }
    return false;
}

}  // namespace

bool kao_member_bounded(const Term& e, const Word& w, int slack,
                        const Signature& sig, const OracleBudget& budget) {
    Counter counter{0, budget.max_words};
    Word prefix;
    prefix.reserve(w.size() + static_cast<std::size_t>(slack));
    return try_expansions(e, w, 0, prefix, slack, sig, counter);
}

}  // namespace kao
