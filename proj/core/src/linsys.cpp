#include "kao/linsys.hpp"

#include <algorithm>

#include "kao/derivatives.hpp"
#include "kao/errors.hpp"

namespace kao {

Term TermVector::at(const Term& q) const {
    for (std::size_t i = 0; i < index.size(); ++i)
        if (index[i] == q) return entries[i];
    throw Error("term not in vector index");
}

// ---------------------------------------------------------------------------
// Smart constructors: each rewrite is a single axiom instance, so matrix
// entries stay provably equal to their unsimplified forms.

namespace {

Term splus(const Term& a, const Term& b) {
    if (a.kind() == TermKind::Zero) return b;
    if (b.kind() == TermKind::Zero) return a;
    return Term::plus(a, b);
}

Term sseq(const Term& a, const Term& b) {
    if (a.kind() == TermKind::Zero || b.kind() == TermKind::Zero)
        return Term::zero();
    if (a.kind() == TermKind::One) return b;
    if (b.kind() == TermKind::One) return a;
    return Term::seq(a, b);
}

Term sstar(const Term& a) {
    if (a.kind() == TermKind::Zero) return Term::one();
    return Term::star(a);
}

}  // namespace

// ---------------------------------------------------------------------------
// System construction

std::pair<TermMatrix, TermVector> build_system(const Term& e,
                                               const Signature& sig) {
    std::vector<Term> q = reach(e);
    q = sort_by_rendering(std::move(q));
    const std::size_t n = q.size();

    TermVector x;
    x.index = q;
    x.entries.reserve(n);
    for (const Term& t : q)
        x.entries.push_back(t.nullable() ? Term::one() : Term::zero());

    TermMatrix m;
    m.index = q;
    m.entries.assign(n * n, Term::zero());

    DerivContext ctx(sig);
    std::vector<Atom> atoms = all_atoms(sig);
    // position of each state in the rendering order
    std::vector<std::pair<Term, std::size_t>> pos;
    pos.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pos.emplace_back(q[i], i);
    std::sort(pos.begin(), pos.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    auto index_of = [&](const Term& t) {
        auto it = std::lower_bound(
            pos.begin(), pos.end(), t,
            [](const auto& a, const Term& b) { return a.first < b; });
        return it->second;
    };

    std::vector<std::vector<std::vector<Term>>> letters(
        n, std::vector<std::vector<Term>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (int a = 0; a < static_cast<int>(sig.actions().size()); ++a) {
            Term act = Term::act(sig.actions()[static_cast<std::size_t>(a)]);
            for (const Term& t : ctx.delta(q[i], a))
                letters[i][index_of(t)].push_back(act);
        }
        for (const Atom& alpha : atoms) {
            Term pi = Term::prop(pi_atom(alpha, sig));
            for (const Term& t : ctx.zeta(q[i], alpha))
                letters[i][index_of(t)].push_back(pi);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!letters[i][j].empty())
                m.at(i, j) = canonical_sum(letters[i][j]);

    return {std::move(m), std::move(x)};
}

// ---------------------------------------------------------------------------
// Matrix algebra

namespace {

TermMatrix submatrix(const TermMatrix& m, std::size_t r0, std::size_t r1,
                     std::size_t c0, std::size_t c1) {
    TermMatrix out;
    // rectangular blocks reuse the row index; only dim() of square blocks
    // is ever consulted
    out.index.assign(m.index.begin() + static_cast<long>(r0),
                     m.index.begin() + static_cast<long>(r1));
    std::size_t cols = c1 - c0;
    out.entries.reserve((r1 - r0) * cols);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j)
            out.entries.push_back(m.at(i, j));
    return out;
}

// general product on possibly rectangular blocks: a is rows x inner,
// b is inner x cols
std::vector<Term> block_mul(const std::vector<Term>& a, std::size_t rows,
                            std::size_t inner, const std::vector<Term>& b,
                            std::size_t cols) {
    std::vector<Term> out(rows * cols, Term::zero());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Term acc = Term::zero();
            for (std::size_t k = 0; k < inner; ++k)
                acc = splus(acc, sseq(a[i * inner + k], b[k * cols + j]));
            out[i * cols + j] = acc;
        }
    return out;
}

std::vector<Term> block_add(const std::vector<Term>& a,
                            const std::vector<Term>& b) {
    std::vector<Term> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(splus(a[i], b[i]));
    return out;
}

// star of a square block given as a flat entry vector
std::vector<Term> block_star(const std::vector<Term>& m, std::size_t n) {
    if (n == 0) return {};
    if (n == 1) return {sstar(m[0])};
    std::size_t h = (n + 1) / 2;  // top-left block size
    std::size_t r = n - h;

    auto slice = [&](std::size_t r0, std::size_t r1, std::size_t c0,
                     std::size_t c1) {
        std::vector<Term> out;
        out.reserve((r1 - r0) * (c1 - c0));
        for (std::size_t i = r0; i < r1; ++i)
            for (std::size_t j = c0; j < c1; ++j)
                out.push_back(m[i * n + j]);
        return out;
    };

    std::vector<Term> a = slice(0, h, 0, h);
    std::vector<Term> b = slice(0, h, h, n);
    std::vector<Term> c = slice(h, n, 0, h);
    std::vector<Term> d = slice(h, n, h, n);

    std::vector<Term> ds = block_star(d, r);
    // f = a + b d* c
    std::vector<Term> f = block_add(
        a, block_mul(block_mul(b, h, r, ds, r), h, r, c, h));
    std::vector<Term> fs = block_star(f, h);

    std::vector<Term> tl = fs;
    std::vector<Term> tr = block_mul(block_mul(fs, h, h, b, r), h, r, ds, r);
    std::vector<Term> bl = block_mul(block_mul(ds, r, r, c, h), r, h, fs, h);
    std::vector<Term> br = block_add(
        ds, block_mul(block_mul(bl, r, h, b, r), r, r, ds, r));

    std::vector<Term> out(n * n, Term::zero());
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) out[i * n + j] = tl[i * h + j];
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < r; ++j)
            out[i * n + h + j] = tr[i * r + j];
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < h; ++j)
            out[(h + i) * n + j] = bl[i * h + j];
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            out[(h + i) * n + h + j] = br[i * r + j];
    return out;
}

}  // namespace

TermMatrix mat_star(const TermMatrix& m) {
    if (m.entries.size() != m.index.size() * m.index.size())
        throw NotSquare("mat_star requires a square matrix");
    TermMatrix out;
    out.index = m.index;
    out.entries = block_star(m.entries, m.dim());
    return out;
}

TermMatrix mat_mul(const TermMatrix& a, const TermMatrix& b) {
    if (a.dim() != b.dim()) throw NotSquare("dimension mismatch");
    TermMatrix out;
    out.index = a.index;
    out.entries = block_mul(a.entries, a.dim(), a.dim(), b.entries, b.dim());
    return out;
}

TermMatrix mat_add(const TermMatrix& a, const TermMatrix& b) {
    if (a.dim() != b.dim()) throw NotSquare("dimension mismatch");
    TermMatrix out;
    out.index = a.index;
    out.entries = block_add(a.entries, b.entries);
    return out;
}

TermVector mat_vec_mul(const TermMatrix& m, const TermVector& x) {
    if (m.dim() != x.dim()) throw NotSquare("dimension mismatch");
    TermVector out;
    out.index = m.index;
    out.entries = block_mul(m.entries, m.dim(), m.dim(), x.entries, 1);
    return out;
}

TermVector solve_vector(const Term& e, const Signature& sig) {
    auto [m, x] = build_system(e, sig);
    return mat_vec_mul(mat_star(m), x);
}

Term hat(const Term& e, const Signature& sig) {
    TermVector s = solve_vector(e, sig);
    std::vector<Term> parts;
    for (const Term& q : initial(e)) parts.push_back(s.at(q));
    return canonical_sum(parts);
}

// ---------------------------------------------------------------------------
// Atomicity and bounded closedness

namespace {

// matches the exact literal-conjunction shape produced by pi_atom
bool is_pi_atom(const Prop& p, const Signature& sig) {
    for (const Atom& alpha : all_atoms(sig))
        if (p == pi_atom(alpha, sig)) return true;
    return false;
}

bool atomic_rec(const Term& e, const Signature& sig) {
    switch (e.kind()) {
        case TermKind::Zero:
        case TermKind::One:
        case TermKind::Act:
            return true;
        case TermKind::Prop:
            return is_pi_atom(e.prop_term(), sig);
        case TermKind::Plus:
        case TermKind::Seq:
            return atomic_rec(e.left(), sig) && atomic_rec(e.right(), sig);
        case TermKind::Star:
            return atomic_rec(e.child(), sig);
    }
    return false;
}

}  // namespace

bool is_atomic(const Term& e, const Signature& sig) {
    return atomic_rec(e, sig);
}

bool closed_bounded(const Term& e, int n, int /*slack*/, const Signature& sig,
                    const OracleBudget& budget) {
    return kao_language(e, n, sig, budget) == wkao_language(e, n, sig, budget);
}

}  // namespace kao
