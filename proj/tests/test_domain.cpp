#include "doctest.h"
#include "qdom/domain.hpp"
#include "qdom/harness.hpp"

using namespace qdom;

namespace {

LOrderedSet crisp(const QuantalePtr& L, std::vector<std::string> pts,
                  const std::vector<std::pair<int, int>>& lt, const std::string& id) {
    LOrderedSet P;
    P.id = id;
    P.L = L;
    P.points = std::move(pts);
    const std::size_t n = P.points.size();
    P.e.assign(n * n, L->bottom());
    for (std::size_t x = 0; x < n; ++x) P.e[x * n + x] = L->unit();
    for (auto [a, b] : lt) P.e[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = L->unit();
    // transitive closure
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                Elem t = L->tensor(P.e[x * n + k], P.e[k * n + y]);
                P.e[x * n + y] = L->join(P.e[x * n + y], t);
            }
    REQUIRE(P.validate().allPass());
    return P;
}

}  // namespace

TEST_CASE("way-below in a crisp finite poset is the order itself") {
    auto L = fixtureQuantale("boolean");
    auto P = crisp(L, {"bot", "l", "r", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, "diamond");
    for (std::size_t x = 0; x < P.size(); ++x) {
        LSubset wb = wayBelow(P, x);
        CHECK(wb.v == downSet(P, x).v);
    }
    CHECK(isContinuous(P).pass);
    CHECK(isAlgebraic(P).pass);
    CHECK(compactElements(P).size() == P.size());
}

TEST_CASE("crisp chains over the Lukasiewicz quantale are not L-dcpos") {
    // The fuzzy subset {a: 0, b: 1, c: half} of the crisp 3-chain is directed
    // but has no supremum: no point sits at inclusion degree half below b.
    auto L = fixtureQuantale("lukasiewicz-3");
    auto P = crisp(L, {"a", "b", "c"}, {{0, 1}, {1, 2}}, "chain3");
    auto r = isLDcpo(P);
    CHECK_FALSE(r.pass);
    CHECK_THROWS_AS(wayBelow(P, 0), PreconditionError);
}

TEST_CASE("the two way-below forms agree on generated L-dcpos") {
    for (const auto& id : {"boolean", "lukasiewicz-3", "goedel-3"}) {
        GenConfig cfg;
        cfg.quantaleId = id;
        cfg.maxPoints = 3;
        Rng rng(17);
        for (int i = 0; i < 4; ++i) {
            LOrderedSet P = genLDcpo(cfg, rng);
            for (std::size_t x = 0; x < P.size(); ++x) {
                CAPTURE(id);
                CHECK(wayBelow(P, x).v == wayBelowAlt(P, x).v);
            }
        }
    }
}

TEST_CASE("way-below sits below the order") {
    GenConfig cfg;
    cfg.quantaleId = "lukasiewicz-3";
    cfg.maxPoints = 3;
    Rng rng(29);
    LOrderedSet P = genLDcpo(cfg, rng);
    const auto& L = P.L;
    for (std::size_t x = 0; x < P.size(); ++x) {
        LSubset wb = wayBelow(P, x);
        for (std::size_t y = 0; y < P.size(); ++y) CHECK(L->leq(wb(y), P.ord(y, x)));
    }
}

TEST_CASE("k-subsets drive algebraicity") {
    auto L = fixtureQuantale("boolean");
    auto P = crisp(L, {"a", "b"}, {{0, 1}}, "chain2");
    for (std::size_t x = 0; x < P.size(); ++x) {
        LSubset k = kSubset(P, x);
        CHECK(isDirected(P, k).pass);
        CHECK(supremum(P, k) == x);
    }
    CHECK(isAlgebraic(P).pass);
}

TEST_CASE("restriction keeps the order table") {
    auto L = fixtureQuantale("goedel-3");
    auto P = crisp(L, {"a", "b", "c"}, {{0, 1}, {1, 2}}, "chain3");
    auto R = restrictOrder(P, {0, 2}, "ends");
    CHECK(R.size() == 2);
    CHECK(R.ord(0, 1) == P.ord(0, 2));
    CHECK(R.validate().allPass());
}

TEST_CASE("domain analysis is cached and reports consistently") {
    auto L = fixtureQuantale("boolean");
    auto P = crisp(L, {"a", "b", "c"}, {{0, 1}, {0, 2}}, "vee");
    auto a1 = analyzeDomain(P);
    auto a2 = analyzeDomain(P);
    CHECK(a1.subjectHash == a2.subjectHash);
    CHECK(a1.dcpo.pass == a2.dcpo.pass);
    CHECK(a1.compactPoints == a2.compactPoints);
    CHECK(a1.dcpo.pass);
    CHECK(a1.continuous.pass);
    CHECK(a1.algebraic.pass);
}

TEST_CASE("way-below demands an L-dcpo") {
    // Over the Lukasiewicz chain this 2-point antichain admits a directed
    // subset without a supremum: the constant map at half.
    auto L = fixtureQuantale("lukasiewicz-3");
    LOrderedSet P;
    P.id = "anti";
    P.L = L;
    P.points = {"a", "b"};
    P.e = {L->unit(), L->bottom(), L->bottom(), L->unit()};
    REQUIRE(P.validate().allPass());
    if (!isLDcpo(P).pass) CHECK_THROWS_AS(wayBelow(P, 0), PreconditionError);
}
