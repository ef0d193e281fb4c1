#include "kao/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace kao {

// ---------------------------------------------------------------------------
// Signature

Signature::Signature(std::vector<std::string> observables,
                     std::vector<std::string> actions)
    : observables_(std::move(observables)), actions_(std::move(actions)) {
    if (observables_.size() > 16)
        throw SignatureTooLarge("at most 16 observables are supported, got " +
                                std::to_string(observables_.size()));
    std::unordered_set<std::string> seen;
    for (const auto& o : observables_)
        if (!seen.insert(o).second)
            throw Error("duplicate observable '" + o + "'");
    for (const auto& a : actions_)
        if (!seen.insert(a).second)
            throw Error("action '" + a +
                        "' duplicates another declared name");
}

std::optional<int> Signature::observable_index(std::string_view name) const {
    for (std::size_t i = 0; i < observables_.size(); ++i)
        if (observables_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

std::optional<int> Signature::action_index(std::string_view name) const {
    for (std::size_t i = 0; i < actions_.size(); ++i)
        if (actions_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Interned nodes

namespace detail {

struct PropNode {
    PropKind kind;
    std::string name;
    const PropNode* a;
    const PropNode* b;
    std::uint64_t id;
};

struct TermNode {
    TermKind kind;
    std::string name;
    const PropNode* prop;
    const TermNode* a;
    const TermNode* b;
    std::uint64_t id;
    int size;
    int nullable;
};

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

struct PropKey {
    PropKind kind;
    std::string_view name;
    const PropNode* a;
    const PropNode* b;
    bool operator==(const PropKey& o) const {
        return kind == o.kind && name == o.name && a == o.a && b == o.b;
    }
};
struct PropKeyHash {
    std::size_t operator()(const PropKey& k) const {
        std::uint64_t h = static_cast<std::uint64_t>(k.kind);
        h = mix(h, std::hash<std::string_view>{}(k.name));
        h = mix(h, reinterpret_cast<std::uintptr_t>(k.a));
        h = mix(h, reinterpret_cast<std::uintptr_t>(k.b));
        return static_cast<std::size_t>(h);
    }
};

struct TermKey {
    TermKind kind;
    std::string_view name;
    const PropNode* prop;
    const TermNode* a;
    const TermNode* b;
    bool operator==(const TermKey& o) const {
        return kind == o.kind && name == o.name && prop == o.prop &&
               a == o.a && b == o.b;
    }
};
struct TermKeyHash {
    std::size_t operator()(const TermKey& k) const {
        std::uint64_t h = static_cast<std::uint64_t>(k.kind);
        h = mix(h, std::hash<std::string_view>{}(k.name));
        h = mix(h, reinterpret_cast<std::uintptr_t>(k.prop));
        h = mix(h, reinterpret_cast<std::uintptr_t>(k.a));
        h = mix(h, reinterpret_cast<std::uintptr_t>(k.b));
        return static_cast<std::size_t>(h);
    }
};

struct Interner {
    std::mutex mu;
    std::unordered_map<PropKey, std::unique_ptr<PropNode>, PropKeyHash> props;
    std::unordered_map<TermKey, std::unique_ptr<TermNode>, TermKeyHash> terms;
    std::uint64_t next_prop_id = 1;
    std::uint64_t next_term_id = 1;

    static Interner& instance() {
        static Interner in;
        return in;
    }

    const PropNode* prop(PropKind kind, std::string_view name,
                         const PropNode* a, const PropNode* b) {
        std::lock_guard<std::mutex> lock(mu);
        PropKey key{kind, name, a, b};
        auto it = props.find(key);
        if (it != props.end()) return it->second.get();
        auto node = std::make_unique<PropNode>(
            PropNode{kind, std::string(name), a, b, next_prop_id++});
        const PropNode* raw = node.get();
        props.emplace(PropKey{kind, raw->name, a, b}, std::move(node));
        return raw;
    }

    const TermNode* term(TermKind kind, std::string_view name,
                         const PropNode* prop, const TermNode* a,
                         const TermNode* b) {
        std::lock_guard<std::mutex> lock(mu);
        TermKey key{kind, name, prop, a, b};
        auto it = terms.find(key);
        if (it != terms.end()) return it->second.get();
        int size = 1 + (a ? a->size : 0) + (b ? b->size : 0);
        int nullable = 0;
        switch (kind) {
            case TermKind::One:
            case TermKind::Star: nullable = 1; break;
            case TermKind::Plus:
                nullable = std::max(a->nullable, b->nullable); break;
            case TermKind::Seq:
                nullable = std::min(a->nullable, b->nullable); break;
            default: nullable = 0; break;
        }
        auto node = std::make_unique<TermNode>(TermNode{
            kind, std::string(name), prop, a, b, next_term_id++, size,
            nullable});
        const TermNode* raw = node.get();
        terms.emplace(TermKey{kind, raw->name, prop, a, b}, std::move(node));
        return raw;
    }
};

}  // namespace
}  // namespace detail

// ---------------------------------------------------------------------------
// Prop

Prop Prop::bot() {
    return Prop(detail::Interner::instance().prop(PropKind::Bot, "", nullptr,
                                                  nullptr));
}
Prop Prop::top() {
    return Prop(detail::Interner::instance().prop(PropKind::Top, "", nullptr,
                                                  nullptr));
}
Prop Prop::obs(std::string_view name) {
    return Prop(detail::Interner::instance().prop(PropKind::Obs, name,
                                                  nullptr, nullptr));
}
Prop Prop::disj(Prop a, Prop b) {
    return Prop(detail::Interner::instance().prop(PropKind::Or, "", a.node_,
                                                  b.node_));
}
Prop Prop::conj(Prop a, Prop b) {
    return Prop(detail::Interner::instance().prop(PropKind::And, "", a.node_,
                                                  b.node_));
}
Prop Prop::neg(Prop a) {
    return Prop(detail::Interner::instance().prop(PropKind::Not, "", a.node_,
                                                  nullptr));
}

PropKind Prop::kind() const { return node_->kind; }
const std::string& Prop::obs_name() const { return node_->name; }
Prop Prop::left() const { return Prop(node_->a); }
Prop Prop::right() const { return Prop(node_->b); }
Prop Prop::child() const { return Prop(node_->a); }
std::uint64_t Prop::id() const { return node_ ? node_->id : 0; }

// ---------------------------------------------------------------------------
// Term

Term Term::zero() {
    return Term(detail::Interner::instance().term(TermKind::Zero, "", nullptr,
                                                  nullptr, nullptr));
}
Term Term::one() {
    return Term(detail::Interner::instance().term(TermKind::One, "", nullptr,
                                                  nullptr, nullptr));
}
Term Term::act(std::string_view name) {
    return Term(detail::Interner::instance().term(TermKind::Act, name,
                                                  nullptr, nullptr, nullptr));
}
Term Term::prop(Prop p) {
    return Term(detail::Interner::instance().term(TermKind::Prop, "", p.raw(),
                                                  nullptr, nullptr));
}
Term Term::plus(Term a, Term b) {
    return Term(detail::Interner::instance().term(TermKind::Plus, "", nullptr,
                                                  a.node_, b.node_));
}
Term Term::seq(Term a, Term b) {
    return Term(detail::Interner::instance().term(TermKind::Seq, "", nullptr,
                                                  a.node_, b.node_));
}
Term Term::star(Term a) {
    return Term(detail::Interner::instance().term(TermKind::Star, "", nullptr,
                                                  a.node_, nullptr));
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::act_name() const { return node_->name; }
Prop Term::prop_term() const { return Prop(node_->prop); }
Term Term::left() const { return Term(node_->a); }
Term Term::right() const { return Term(node_->b); }
Term Term::child() const { return Term(node_->a); }
int Term::size() const { return node_->size; }
int Term::nullable() const { return node_->nullable; }
std::uint64_t Term::id() const { return node_ ? node_->id : 0; }

// ---------------------------------------------------------------------------
// Rendering

namespace {

void render_prop_into(const Prop& p, std::string& out, int parent_level) {
    // levels: 0 = or, 1 = and, 2 = neg/leaf
    switch (p.kind()) {
        case PropKind::Bot: out += 'F'; return;
        case PropKind::Top: out += 'T'; return;
        case PropKind::Obs: out += p.obs_name(); return;
        case PropKind::Not:
            out += '!';
            render_prop_into(p.child(), out, 2);
            return;
        case PropKind::Or: {
            bool paren = parent_level > 0;
            if (paren) out += '(';
            render_prop_into(p.left(), out, 0);
            out += " \\/ ";
            render_prop_into(p.right(), out, 1);
            if (paren) out += ')';
            return;
        }
        case PropKind::And: {
            bool paren = parent_level > 1;
            if (paren) out += '(';
            render_prop_into(p.left(), out, 1);
            out += " /\\ ";
            render_prop_into(p.right(), out, 2);
            if (paren) out += ')';
            return;
        }
    }
}

void render_term_into(const Term& e, std::string& out, int parent_level) {
    // levels: 0 = plus, 1 = seq, 2 = star/atom
    switch (e.kind()) {
        case TermKind::Zero: out += '0'; return;
        case TermKind::One: out += '1'; return;
        case TermKind::Act: out += e.act_name(); return;
        case TermKind::Prop:
            out += '[';
            render_prop_into(e.prop_term(), out, 0);
            out += ']';
            return;
        case TermKind::Star:
            render_term_into(e.child(), out, 2);
            out += '*';
            return;
        case TermKind::Plus: {
            bool paren = parent_level > 0;
            if (paren) out += '(';
            render_term_into(e.left(), out, 0);
            out += " + ";
            render_term_into(e.right(), out, 1);
            if (paren) out += ')';
            return;
        }
        case TermKind::Seq: {
            bool paren = parent_level > 1;
            if (paren) out += '(';
            render_term_into(e.left(), out, 1);
            out += " ; ";
            render_term_into(e.right(), out, 2);
            if (paren) out += ')';
            return;
        }
    }
}

}  // namespace

std::string render_prop(const Prop& p) {
    std::string out;
    render_prop_into(p, out, 0);
    return out;
}

std::string render_term(const Term& e) {
    std::string out;
    render_term_into(e, out, 0);
    return out;
}

std::vector<Term> sort_by_rendering(std::vector<Term> terms) {
    std::vector<std::pair<std::string, Term>> keyed;
    keyed.reserve(terms.size());
    for (const auto& t : terms) keyed.emplace_back(render_term(t), t);
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < keyed.size(); ++i) terms[i] = keyed[i].second;
    return terms;
}

Term canonical_sum(const std::vector<Term>& terms) {
    std::vector<Term> uniq;
    {
        std::unordered_set<std::uint64_t> seen;
        for (const auto& t : terms)
            if (seen.insert(t.id()).second) uniq.push_back(t);
    }
    if (uniq.empty()) return Term::zero();
    uniq = sort_by_rendering(std::move(uniq));
    Term acc = uniq[0];
    for (std::size_t i = 1; i < uniq.size(); ++i)
        acc = Term::plus(acc, uniq[i]);
    return acc;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    const Signature& sig;

    explicit Parser(std::string_view t, const Signature& s)
        : text(t), sig(s) {}

    void skip_ws() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool consume_str(std::string_view s) {
        skip_ws();
        if (text.substr(pos, s.size()) == s) {
            pos += s.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw SyntaxError(pos, msg);
    }

    static bool ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string ident() {
        skip_ws();
        if (pos >= text.size() || !ident_start(text[pos]))
            fail("expected identifier");
        std::size_t start = pos;
        while (pos < text.size() && ident_char(text[pos])) ++pos;
        return std::string(text.substr(start, pos - start));
    }

    Term expr() {
        Term e = seq_expr();
        while (consume('+')) e = Term::plus(e, seq_expr());
        return e;
    }

    Term seq_expr() {
        Term e = star_expr();
        while (consume(';')) e = Term::seq(e, star_expr());
        return e;
    }

    Term star_expr() {
        Term e = atom_expr();
        while (consume('*')) e = Term::star(e);
        return e;
    }

    Term atom_expr() {
        skip_ws();
        if (consume('0')) return Term::zero();
        if (consume('1')) return Term::one();
        if (consume('(')) {
            Term e = expr();
            if (!consume(')')) fail("expected ')'");
            return e;
        }
        if (consume('[')) {
            Prop p = bexp();
            if (!consume(']')) fail("expected ']'");
            return Term::prop(p);
        }
        if (pos < text.size() && ident_start(text[pos])) {
            std::string name = ident();
            if (!sig.action_index(name)) throw UnknownSymbol(name, "action");
            return Term::act(name);
        }
        fail("expected '0', '1', an action, '[', or '('");
    }

    Prop bexp() {
        Prop p = bconj();
        while (true) {
            if (consume_str("\\/") || consume('|')) p = Prop::disj(p, bconj());
            else break;
        }
        return p;
    }

    Prop bconj() {
        Prop p = bneg();
        while (true) {
            if (consume_str("/\\") || consume('&')) p = Prop::conj(p, bneg());
            else break;
        }
        return p;
    }

    Prop bneg() {
        skip_ws();
        if (consume('!')) return Prop::neg(bneg());
        if (consume('(')) {
            Prop p = bexp();
            if (!consume(')')) fail("expected ')'");
            return p;
        }
        if (pos < text.size() && ident_start(text[pos])) {
            std::string name = ident();
            if (name == "T") return Prop::top();
            if (name == "F") return Prop::bot();
            if (!sig.observable_index(name))
                throw UnknownSymbol(name, "observable");
            return Prop::obs(name);
        }
        fail("expected '!', 'T', 'F', an observable, or '('");
    }
};

}  // namespace

Term parse_term(std::string_view text, const Signature& sig) {
    Parser p(text, sig);
    Term e = p.expr();
    if (!p.at_end()) p.fail("trailing input");
    return e;
}

Signature infer_signature(const std::vector<std::string_view>& texts) {
    std::vector<std::string> obs, act;
    std::unordered_set<std::string> obs_seen, act_seen;
    for (auto text : texts) {
        int bracket_depth = 0;
        std::size_t i = 0;
        while (i < text.size()) {
            char c = text[i];
            if (c == '[') { ++bracket_depth; ++i; continue; }
            if (c == ']') { if (bracket_depth > 0) --bracket_depth; ++i; continue; }
            if (Parser::ident_start(c)) {
                std::size_t start = i;
                while (i < text.size() && Parser::ident_char(text[i])) ++i;
                std::string name(text.substr(start, i - start));
                if (bracket_depth > 0) {
                    if (name == "T" || name == "F") continue;
                    if (obs_seen.insert(name).second) obs.push_back(name);
                } else {
                    if (act_seen.insert(name).second) act.push_back(name);
                }
                continue;
            }
            ++i;
        }
    }
    for (const auto& o : obs)
        if (act_seen.count(o))
            throw Error("'" + o + "' is used both as an action and inside brackets");
    return Signature(std::move(obs), std::move(act));
}

}  // namespace kao
