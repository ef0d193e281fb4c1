#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kao/boolean.hpp"
#include "kao/harness.hpp"

using namespace kao;

namespace {
Signature sig2() { return Signature({"a", "b"}, {"x"}); }
}  // namespace

TEST_CASE("atom enumeration in bit order") {
    auto atoms = all_atoms(sig2());
    REQUIRE(atoms.size() == 4);
    for (std::uint32_t i = 0; i < 4; ++i) CHECK(atoms[i].bits() == i);

    Signature empty({}, {"x"});
    CHECK(all_atoms(empty).size() == 1);
}

TEST_CASE("holds evaluates structurally") {
    Signature s = sig2();
    Atom a_only(0b01, 2), b_only(0b10, 2), both(0b11, 2), none(0, 2);
    Prop p = Prop::conj(Prop::obs("a"), Prop::neg(Prop::obs("b")));
    CHECK(holds(p, a_only, s));
    CHECK_FALSE(holds(p, both, s));
    CHECK(holds(Prop::top(), none, s));
    CHECK_FALSE(holds(Prop::bot(), both, s));
    CHECK(holds(Prop::disj(Prop::obs("a"), Prop::obs("b")), b_only, s));
    CHECK_THROWS_AS(holds(Prop::obs("q"), none, s), UnknownSymbol);
}

TEST_CASE("contradiction holds nowhere") {
    Signature s = sig2();
    Prop p = Prop::conj(Prop::obs("a"), Prop::neg(Prop::obs("a")));
    for (const Atom& alpha : all_atoms(s)) CHECK_FALSE(holds(p, alpha, s));
}

TEST_CASE("sem_ba lists satisfying atoms in order") {
    Signature s = sig2();
    auto sat = sem_ba(Prop::disj(Prop::obs("a"), Prop::obs("b")), s);
    REQUIRE(sat.size() == 3);
    CHECK(sat[0].bits() == 0b01);
    CHECK(sat[1].bits() == 0b10);
    CHECK(sat[2].bits() == 0b11);
}

TEST_CASE("pi_atom discriminates exactly its atom") {
    Signature s = sig2();
    for (const Atom& alpha : all_atoms(s)) {
        Prop pi = pi_atom(alpha, s);
        for (const Atom& beta : all_atoms(s))
            CHECK(holds(pi, beta, s) == (alpha == beta));
    }
    CHECK(render_prop(pi_atom(Atom(0b01, 2), s)) == "a /\\ !b");
    Signature empty({}, {"x"});
    CHECK(pi_atom(Atom(0, 0), empty) == Prop::top());
}

TEST_CASE("ba_leq is semantic entailment") {
    Signature s = sig2();
    Prop a = Prop::obs("a"), b = Prop::obs("b");
    CHECK(ba_leq(Prop::conj(a, b), a, s));
    CHECK_FALSE(ba_leq(a, Prop::conj(a, b), s));
    CHECK(ba_leq(Prop::bot(), a, s));
    CHECK(ba_leq(a, Prop::top(), s));
}

TEST_CASE("atom rendering") {
    Signature s = sig2();
    CHECK(render_atom(Atom(0, 2), s) == "{}");
    CHECK(render_atom(Atom(0b10, 2), s) == "{b}");
    CHECK(render_atom(Atom(0b11, 2), s) == "{a,b}");
}

TEST_CASE("boolean-algebra laws hold pointwise at every atom") {
    GenConfig cfg;
    cfg.n_obs = 3;
    Signature s(std::vector<std::string>{"o1", "o2", "o3"},
                std::vector<std::string>{"x1"});
    Rng rng(42);
    for (int i = 0; i < 500; ++i) {
        Prop p = gen_prop(cfg, rng, 3);
        Prop q = gen_prop(cfg, rng, 3);
        Prop r = gen_prop(cfg, rng, 3);
        for (const Atom& al : all_atoms(s)) {
            auto h = [&](const Prop& t) { return holds(t, al, s); };
            CHECK(h(Prop::disj(p, q)) == h(Prop::disj(q, p)));
            CHECK(h(Prop::conj(p, q)) == h(Prop::conj(q, p)));
            CHECK(h(Prop::disj(p, Prop::disj(q, r))) ==
                  h(Prop::disj(Prop::disj(p, q), r)));
            CHECK(h(Prop::conj(p, Prop::conj(q, r))) ==
                  h(Prop::conj(Prop::conj(p, q), r)));
            CHECK(h(Prop::disj(p, Prop::bot())) == h(p));
            CHECK(h(Prop::conj(p, Prop::top())) == h(p));
            CHECK(h(Prop::disj(p, Prop::conj(q, r))) ==
                  h(Prop::conj(Prop::disj(p, q), Prop::disj(p, r))));
            CHECK(h(Prop::conj(p, Prop::disj(q, r))) ==
                  h(Prop::disj(Prop::conj(p, q), Prop::conj(p, r))));
            CHECK(h(Prop::disj(p, Prop::neg(p))));
            CHECK_FALSE(h(Prop::conj(p, Prop::neg(p))));
        }
    }
}
