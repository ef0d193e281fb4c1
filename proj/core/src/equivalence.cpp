#include "kao/equivalence.hpp"

#include <deque>
#include <unordered_map>

namespace kao {

// ---------------------------------------------------------------------------
// Congruence closure membership

namespace {

// Rewrites s to a normal form under { C -> C u D, D -> C u D } for each rule
// (C, D): keep uniting in the other side of any rule whose one side is
// contained in s, until a fixpoint.
StateSet normal_form(StateSet s,
                     const std::vector<std::pair<StateSet, StateSet>>& rules) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [c, d] : rules) {
            if (c.subset_of(s) && !d.subset_of(s)) {
                s.unite(d);
                changed = true;
            }
            if (d.subset_of(s) && !c.subset_of(s)) {
                s.unite(c);
                changed = true;
            }
        }
    }
    return s;
}

}  // namespace

bool congruence_member(
    const StateSet& u, const StateSet& v,
    const std::vector<std::pair<StateSet, StateSet>>& rules) {
    if (u == v) return true;
    return normal_form(u, rules) == normal_form(v, rules);
}

// ---------------------------------------------------------------------------
// HKC

Verdict hkc_decide(const Nda& nda, const StateSet& u, const StateSet& v,
                   const HkcOptions& opts, std::vector<TraceEntry>* trace) {
    std::deque<RelationEntry> todo;
    todo.push_back({u, v, {}});
    Relation done;

    auto rules_for_check = [&](std::size_t skip_from_todo) {
        std::vector<std::pair<StateSet, StateSet>> rules;
        rules.reserve(done.size() + todo.size());
        for (const auto& r : done) rules.emplace_back(r.lhs, r.rhs);
        if (opts.include_pending)
            for (std::size_t i = skip_from_todo; i < todo.size(); ++i)
                rules.emplace_back(todo[i].lhs, todo[i].rhs);
        return rules;
    };

    while (!todo.empty()) {
        RelationEntry cur = std::move(todo.front());
        todo.pop_front();

        if (det_out(nda, cur.lhs) != det_out(nda, cur.rhs)) {
            if (trace)
                trace->push_back(
                    {cur.lhs, cur.rhs, cur.access, TraceStatus::Mismatch});
            return Verdict{false, {}, cur.access};
        }

        if (congruence_member(cur.lhs, cur.rhs, rules_for_check(0))) {
            if (trace)
                trace->push_back(
                    {cur.lhs, cur.rhs, cur.access, TraceStatus::Skipped});
            continue;
        }
        if (trace)
            trace->push_back(
                {cur.lhs, cur.rhs, cur.access, TraceStatus::Added});

        for (int l = 0; l < nda.num_letters(); ++l) {
            RelationEntry next;
            next.lhs = det_step(nda, cur.lhs, l);
            next.rhs = det_step(nda, cur.rhs, l);
            next.access = cur.access;
            next.access.push_back(nda.letter_at(l));
            todo.push_back(std::move(next));
        }
        done.push_back(std::move(cur));
    }
    return Verdict{true, std::move(done), {}};
}

Verdict decide(const Term& e, const Term& f, const Signature& sig,
               const HkcOptions& opts, std::vector<TraceEntry>* trace) {
    Nda nda = build_nda(e, f, sig);
    return hkc_decide(nda, nda.start_left, nda.start_right, opts, trace);
}

// ---------------------------------------------------------------------------
// Plain up-to-equivalence decider with a union-find over configurations

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;

    std::size_t make() {
        parent.push_back(parent.size());
        return parent.size() - 1;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

Verdict naive_decide(const Term& e, const Term& f, const Signature& sig) {
    Nda nda = build_nda(e, f, sig);

    std::unordered_map<StateSet, std::size_t, StateSetHash> ids;
    UnionFind uf;
    auto id_of = [&](const StateSet& s) {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        std::size_t id = uf.make();
        ids.emplace(s, id);
        return id;
    };

    std::deque<RelationEntry> todo;
    todo.push_back({nda.start_left, nda.start_right, {}});
    Relation done;

    while (!todo.empty()) {
        RelationEntry cur = std::move(todo.front());
        todo.pop_front();

        if (det_out(nda, cur.lhs) != det_out(nda, cur.rhs))
            return Verdict{false, {}, cur.access};

        if (!uf.unite(id_of(cur.lhs), id_of(cur.rhs))) continue;

        for (int l = 0; l < nda.num_letters(); ++l) {
            RelationEntry next;
            next.lhs = det_step(nda, cur.lhs, l);
            next.rhs = det_step(nda, cur.rhs, l);
            next.access = cur.access;
            next.access.push_back(nda.letter_at(l));
            todo.push_back(std::move(next));
        }
        done.push_back(std::move(cur));
    }
    return Verdict{true, std::move(done), {}};
}

bool check_bisim_up_to_congruence(const Nda& nda, const Relation& R) {
    std::vector<std::pair<StateSet, StateSet>> rules;
    rules.reserve(R.size());
    for (const auto& r : R) rules.emplace_back(r.lhs, r.rhs);

    for (const auto& r : R) {
        if (det_out(nda, r.lhs) != det_out(nda, r.rhs)) return false;
        for (int l = 0; l < nda.num_letters(); ++l) {
            StateSet a = det_step(nda, r.lhs, l);
            StateSet b = det_step(nda, r.rhs, l);
            if (!congruence_member(a, b, rules)) return false;
        }
    }
    return true;
}

std::string verdict_to_json(const Verdict& v, const Signature& sig) {
    if (v.equivalent)
        return "{\"result\":\"equivalent\",\"relation_size\":" +
               std::to_string(v.relation.size()) + "}";
    std::string w = render_word(v.witness, sig);
    std::string escaped;
    for (char c : w) {
        if (c == '"' || c == '\\') escaped += '\\';
        escaped += c;
    }
    return "{\"result\":\"inequivalent\",\"witness\":\"" + escaped + "\"}";
}

}  // namespace kao
