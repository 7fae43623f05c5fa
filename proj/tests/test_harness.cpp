#include "doctest.h"
#include "qdom/harness.hpp"

using namespace qdom;

TEST_CASE("generators are deterministic in the seed") {
    GenConfig cfg;
    cfg.quantaleId = "lukasiewicz-3";
    cfg.seed = 7;
    Rng a(cfg.seed), b(cfg.seed);
    LOrderedSet P = genLOrderedSet(cfg, a);
    LOrderedSet Q = genLOrderedSet(cfg, b);
    CHECK(P.points == Q.points);
    CHECK(P.e == Q.e);
}

TEST_CASE("generated structures re-validate") {
    for (const auto& id : {"boolean", "lukasiewicz-3", "goedel-3"}) {
        GenConfig cfg;
        cfg.quantaleId = id;
        Rng rng(42);
        for (int i = 0; i < 10; ++i) {
            LOrderedSet P = genLOrderedSet(cfg, rng);
            CAPTURE(id);
            CHECK(P.validate().allPass());
            CHECK(P.size() >= cfg.minPoints);
            CHECK(P.size() <= cfg.maxPoints);
        }
    }
}

TEST_CASE("generated interpolative spaces validate as such") {
    GenConfig cfg;
    cfg.quantaleId = "boolean";
    Rng rng(3);
    for (int i = 0; i < 5; ++i) {
        ClosureSpace S = genInterpolativeSpace(cfg, rng);
        CHECK(validateGeneralized(S).pass);
        CHECK(isInterpolative(S).pass);
    }
}

TEST_CASE("the classical oracle agrees on random boolean instances") {
    GenConfig cfg;
    cfg.quantaleId = "boolean";
    cfg.maxPoints = 4;
    Rng rng(11);
    for (int i = 0; i < 10; ++i) {
        LOrderedSet P = genLOrderedSet(cfg, rng);
        auto r = classicalOracle(P);
        CHECK_MESSAGE(r.pass, r.axiom, " ", r.witness);
    }
}

TEST_CASE("the oracle refuses non-boolean quantales") {
    GenConfig cfg;
    cfg.quantaleId = "goedel-3";
    Rng rng(1);
    LOrderedSet P = genLOrderedSet(cfg, rng);
    CHECK_THROWS_AS(classicalOracle(P), PreconditionError);
}

TEST_CASE("suite reports are byte-identical across runs and worker counts") {
    GenConfig cfg;
    cfg.quantaleId = "boolean";
    cfg.instances = 4;
    cfg.maxPoints = 3;
    std::string a = runSuite("waybelow", cfg).toJson();
    std::string b = runSuite("waybelow", cfg).toJson();
    CHECK(a == b);
    int saved = worker_count();
    worker_count() = 4;
    std::string c = runSuite("waybelow", cfg).toJson();
    worker_count() = saved;
    CHECK(a == c);
}

TEST_CASE("suite gates: unknown ids and integrality refusals") {
    GenConfig cfg;
    CHECK_THROWS_AS(runSuite("nope", cfg), StructuralError);
    cfg.quantaleId = "nonintegral-3";
    CHECK_THROWS_AS(runSuite("dense", cfg), PreconditionError);
    cfg.quantaleId = "goedel-3";
    CHECK_THROWS_AS(runSuite("oracle", cfg), PreconditionError);
}

TEST_CASE("small suites pass end to end") {
    GenConfig cfg;
    cfg.quantaleId = "boolean";
    cfg.instances = 3;
    cfg.maxPoints = 3;
    for (const auto& name : {"core", "oracle", "waybelow", "rep1", "rep2"}) {
        CAPTURE(name);
        SuiteReport rep = runSuite(name, cfg);
        CHECK_MESSAGE(rep.allPass(), rep.toText());
    }
}
