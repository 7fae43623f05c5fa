#include "doctest.h"
#include "qdom/quantale.hpp"

using namespace qdom;

TEST_CASE("all fixture quantales satisfy the laws") {
    for (const auto& id : fixtureQuantaleIds()) {
        CAPTURE(id);
        auto L = fixtureQuantale(id);
        auto laws = L->validate();
        CHECK_MESSAGE(laws.allPass(), id, ": ", laws.summary());
        auto res = L->checkResiduationLaws();
        CHECK_MESSAGE(res.allPass(), id, ": ", res.summary());
    }
}

TEST_CASE("boolean quantale arithmetic") {
    auto L = fixtureQuantale("boolean");
    Elem f = L->indexOf("0"), t = L->indexOf("1");
    CHECK(L->bottom() == f);
    CHECK(L->top() == t);
    CHECK(L->unit() == t);
    CHECK(L->isIntegral());
    CHECK(L->tensor(t, t) == t);
    CHECK(L->tensor(t, f) == f);
    CHECK(L->join(f, t) == t);
    CHECK(L->meet(f, t) == f);
    CHECK(L->residuate(t, f) == f);
    CHECK(L->residuate(f, f) == t);
    CHECK(L->residuate(f, t) == t);
}

TEST_CASE("three-element Lukasiewicz chain: frozen residuation values") {
    auto L = fixtureQuantale("lukasiewicz-3");
    Elem z = L->indexOf("0"), h = L->indexOf("half"), o = L->indexOf("1");
    CHECK(L->tensor(h, h) == z);
    CHECK(L->tensor(h, o) == h);
    // half -> 0 = join{c : half (x) c <= 0} = half
    CHECK(L->residuate(h, z) == h);
    CHECK(L->residuate(o, h) == h);
    CHECK(L->residuate(h, h) == o);
    CHECK(L->residuate(z, z) == o);
}

TEST_CASE("residuation table matches an independent adjunction search") {
    for (const auto& id : {"lukasiewicz-3", "goedel-3", "nonintegral-3", "boolean-square"}) {
        auto L = fixtureQuantale(id);
        const auto n = static_cast<Elem>(L->size());
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
                // largest c with a (x) c <= b, found by direct scan
                Elem best = -1;
                for (Elem c = 0; c < n; ++c)
                    if (L->leq(L->tensor(a, c), b) && (best < 0 || L->leq(best, c))) best = c;
                CAPTURE(id);
                CHECK(L->residuate(a, b) == best);
            }
    }
}

TEST_CASE("Goedel chain residuation is the classical relative pseudocomplement") {
    auto L = fixtureQuantale("goedel-3");
    const auto n = static_cast<Elem>(L->size());
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            CHECK(L->residuate(a, b) == (L->leq(a, b) ? L->top() : b));
}

TEST_CASE("the non-integral fixture has unit strictly below top") {
    auto L = fixtureQuantale("nonintegral-3");
    CHECK_FALSE(L->isIntegral());
    CHECK(L->unit() == L->indexOf("u"));
    CHECK(L->top() == L->indexOf("1"));
    CHECK(L->tensor(L->top(), L->top()) == L->top());
}

TEST_CASE("structural construction rejects defects") {
    CHECK_THROWS_AS(FiniteQuantale::fromTriples("bad", {"a", "b"}, {{"a", "zzz"}},
                                                {{"a", "a", "a"},
                                                 {"a", "b", "a"},
                                                 {"b", "b", "b"}},
                                                "b"),
                    StructuralError);
    // non-total tensor
    CHECK_THROWS_AS(FiniteQuantale::fromTriples("bad", {"a", "b"}, {{"a", "b"}},
                                                {{"a", "a", "a"}}, "b"),
                    StructuralError);
    // duplicate labels
    CHECK_THROWS_AS(FiniteQuantale::fromTables("bad", {"a", "a"},
                                               {{true, true}, {false, true}},
                                               {{0, 0}, {0, 1}}, 1),
                    StructuralError);
}

TEST_CASE("a broken unit law is caught by validation, not construction") {
    // Lukasiewicz-3 with half (x) 1 corrupted to 1.
    auto q = FiniteQuantale::fromTables(
        "corrupted", {"0", "half", "1"},
        {{true, true, true}, {false, true, true}, {false, false, true}},
        {{0, 0, 0}, {0, 0, 2}, {0, 2, 2}}, 2);
    auto rep = q.validate();
    CHECK_FALSE(rep.allPass());
}

TEST_CASE("structural hash separates the fixtures") {
    CHECK(fixtureQuantale("boolean")->structuralHash() ==
          fixtureQuantale("boolean")->structuralHash());
    CHECK(fixtureQuantale("boolean")->structuralHash() !=
          fixtureQuantale("goedel-3")->structuralHash());
    CHECK(fixtureQuantale("goedel-3")->structuralHash() !=
          fixtureQuantale("lukasiewicz-3")->structuralHash());
}
