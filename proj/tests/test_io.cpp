#include "doctest.h"
#include "qdom/harness.hpp"
#include "qdom/io.hpp"

using namespace qdom;

TEST_CASE("quantale files round-trip semantically") {
    for (const auto& id : {"boolean", "lukasiewicz-3", "nonintegral-3"}) {
        auto L = fixtureQuantale(id);
        auto j = toJson(*L);
        auto back = quantaleFromJson(j);
        CAPTURE(id);
        CHECK(back.structuralHash() == L->structuralHash());
    }
}

TEST_CASE("generated L-ordered sets round-trip through JSON") {
    GenConfig cfg;
    cfg.quantaleId = "lukasiewicz-3";
    Rng rng(5);
    for (int i = 0; i < 5; ++i) {
        LOrderedSet P = genLOrderedSet(cfg, rng);
        LOrderedSet Q = lorderFromJson(toJson(P));
        CHECK(Q.points == P.points);
        CHECK(Q.e == P.e);
        CHECK(Q.L->structuralHash() == P.L->structuralHash());
    }
}

TEST_CASE("closure spaces and relations round-trip through JSON") {
    GenConfig cfg;
    cfg.quantaleId = "boolean";
    cfg.maxPoints = 3;
    Rng rng(9);
    ClosureSpace S = genInterpolativeSpace(cfg, rng);
    ClosureSpace T = closureFromJson(toJson(S));
    CHECK(T.points == S.points);
    for (std::size_t x = 0; x < S.size(); ++x)
        CHECK(T.pointClosureOf(x).v == S.pointClosureOf(x).v);

    ApproxRelation id = identityRelation(S);
    ApproxRelation back = relationFromJson(toJson(id));
    CHECK(back.theta == id.theta);
    CHECK(back.source.points == id.source.points);
}

TEST_CASE("fixture quantales serialize as bare ids, ad-hoc ones inline") {
    auto L = fixtureQuantale("boolean");
    LOrderedSet P;
    P.id = "t";
    P.L = L;
    P.points = {"x"};
    P.e = {L->unit()};
    auto j = toJson(P);
    CHECK(j["quantale"].is_string());

    auto custom = std::make_shared<const FiniteQuantale>(FiniteQuantale::fromTables(
        "custom", {"0", "1"}, {{true, true}, {false, true}}, {{0, 0}, {0, 1}}, 1));
    P.L = custom;
    auto j2 = toJson(P);
    CHECK(j2["quantale"].is_object());
    CHECK(lorderFromJson(j2).L->structuralHash() == custom->structuralHash());
}

TEST_CASE("structural defects are parse-time errors") {
    nlohmann::json j = {{"kind", "lordered-set"},
                        {"id", "bad"},
                        {"quantale", "boolean"},
                        {"carrier", {"a", "b"}},
                        {"e", {{"a", "zzz", "1"}}}};
    CHECK_THROWS_AS(lorderFromJson(j), StructuralError);
    nlohmann::json k = {{"kind", "mystery"}};
    CHECK_THROWS_AS(loadAny(k), StructuralError);
}

TEST_CASE("unknown degree labels are refused") {
    nlohmann::json j = {{"kind", "lordered-set"},
                        {"id", "bad"},
                        {"quantale", "boolean"},
                        {"carrier", {"a"}},
                        {"e", {{"a", "a", "threequarters"}}}};
    CHECK_THROWS_AS(lorderFromJson(j), StructuralError);
}
