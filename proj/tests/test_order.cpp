#include "doctest.h"
#include "qdom/order.hpp"

using namespace qdom;

namespace {

LOrderedSet chain(const QuantalePtr& L, std::size_t n, const std::string& id = "chain") {
    LOrderedSet P;
    P.id = id;
    P.L = L;
    for (std::size_t i = 0; i < n; ++i) P.points.push_back("p" + std::to_string(i));
    P.e.assign(n * n, L->bottom());
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x; y < n; ++y) P.e[x * n + y] = L->unit();
    return P;
}

LOrderedSet antichain(const QuantalePtr& L, std::size_t n) {
    LOrderedSet P;
    P.id = "antichain";
    P.L = L;
    for (std::size_t i = 0; i < n; ++i) P.points.push_back("a" + std::to_string(i));
    P.e.assign(n * n, L->bottom());
    for (std::size_t x = 0; x < n; ++x) P.e[x * n + x] = L->unit();
    return P;
}

LOrderedSet diamond(const QuantalePtr& L) {
    LOrderedSet P;
    P.id = "diamond";
    P.L = L;
    P.points = {"bot", "l", "r", "top"};
    const std::size_t n = 4;
    P.e.assign(n * n, L->bottom());
    for (std::size_t x = 0; x < n; ++x) P.e[x * n + x] = L->unit();
    auto set = [&](std::size_t x, std::size_t y) { P.e[x * n + y] = L->unit(); };
    set(0, 1);
    set(0, 2);
    set(0, 3);
    set(1, 3);
    set(2, 3);
    return P;
}

}  // namespace

TEST_CASE("chains and diamonds are L-ordered sets") {
    for (const auto& id : {"boolean", "lukasiewicz-3", "nonintegral-3"}) {
        auto L = fixtureQuantale(id);
        CHECK(chain(L, 3).validate().allPass());
        CHECK(diamond(L).validate().allPass());
    }
}

TEST_CASE("a symmetric non-trivial relation breaks antisymmetry") {
    auto L = fixtureQuantale("boolean");
    LOrderedSet P = antichain(L, 2);
    P.e[0 * 2 + 1] = L->unit();
    P.e[1 * 2 + 0] = L->unit();
    auto rep = P.validate();
    CHECK_FALSE(rep.allPass());
    CHECK(rep.firstFailure()->law == "e-antisymmetric");
}

TEST_CASE("frozen inclusion degrees in the Lukasiewicz chain") {
    auto L = fixtureQuantale("lukasiewicz-3");
    Elem z = L->indexOf("0"), h = L->indexOf("half"), o = L->indexOf("1");
    LSubset A{"c", {o, h}}, B{"c", {z, h}}, C{"c", {h, o}};
    // min(1 -> 0, half -> half) = min(0, 1) = 0
    CHECK(subdeg(*L, A, B) == z);
    // min(half -> 0, 1 -> half) = min(half, half) = half
    CHECK(subdeg(*L, C, B) == h);
    CHECK(subdeg(*L, A, A) == o);
}

TEST_CASE("principal up and down sets behave as in the classical picture") {
    auto L = fixtureQuantale("boolean");
    LOrderedSet P = diamond(L);
    for (std::size_t x = 0; x < P.size(); ++x) {
        CHECK(isLowerSet(P, downSet(P, x)).pass);
        CHECK(isUpperSet(P, upSet(P, x)).pass);
        CHECK(isIdeal(P, downSet(P, x)).pass);
        CHECK(supremum(P, downSet(P, x)) == x);
        CHECK(infimum(P, upSet(P, x)) == x);
    }
}

TEST_CASE("supremum of the crisp pair {l, r} in the diamond is the top point") {
    auto L = fixtureQuantale("boolean");
    LOrderedSet P = diamond(L);
    LSubset pair{P.id, {L->bottom(), L->top(), L->top(), L->bottom()}};
    CHECK(supremum(P, pair) == std::size_t{3});
    // the pair is not directed (no upper bound inside the subset)
    CHECK_FALSE(isDirected(P, pair).pass);
}

TEST_CASE("subset enumeration is a lexicographic bijection") {
    auto L = fixtureQuantale("lukasiewicz-3");
    LSubsetEnum en("c", 3, *L);
    CHECK(en.count() == 27);
    CHECK(en.at(0).v == std::vector<Elem>{0, 0, 0});
    CHECK(en.at(26).v == std::vector<Elem>{2, 2, 2});
    CHECK(en.at(1).v == std::vector<Elem>{0, 0, 1});  // index 0 most significant
    for (std::size_t r = 0; r < en.count(); ++r) CHECK(en.rankOf(en.at(r)) == r);
}

TEST_CASE("finite crisp structures are L-dcpos") {
    auto L = fixtureQuantale("boolean");
    CHECK(isLDcpo(chain(L, 4)).pass);
    CHECK(isLDcpo(antichain(L, 3)).pass);
    CHECK(isLDcpo(diamond(L)).pass);
}

TEST_CASE("Scott continuity: identity passes, an order swap fails") {
    auto L = fixtureQuantale("boolean");
    LOrderedSet P = chain(L, 2);
    CHECK(isScottContinuous({0, 1}, P, P).pass);
    auto r = isScottContinuous({1, 0}, P, P);
    CHECK_FALSE(r.pass);
}

TEST_CASE("isomorphism search finds relabelings and rejects shape changes") {
    auto L = fixtureQuantale("boolean");
    LOrderedSet P = chain(L, 2, "left");
    LOrderedSet Q = chain(L, 2, "right");
    Q.points = {"q0", "q1"};
    auto iso = findLOrderIso(P, Q);
    REQUIRE(iso.has_value());
    CHECK(checkIsoVia(*iso, P, Q));
    CHECK_FALSE(findLOrderIso(P, antichain(L, 2)).has_value());
}

TEST_CASE("Zadeh forward image collects joins along fibers") {
    auto L = fixtureQuantale("lukasiewicz-3");
    Elem h = L->indexOf("half"), o = L->indexOf("1");
    LSubset A{"src", {h, o, h}};
    // f maps all three points onto target point 0
    LSubset img = zadehForward({0, 0, 0}, A, "dst", 2, *L);
    CHECK(img.v == std::vector<Elem>{o, L->bottom()});
}

TEST_CASE("carrier mismatches are refused loudly") {
    auto L = fixtureQuantale("boolean");
    LOrderedSet P = chain(L, 2);
    LSubset wrong{"other", {0, 0}};
    CHECK_THROWS_AS(isDirected(P, wrong), StructuralError);
}
