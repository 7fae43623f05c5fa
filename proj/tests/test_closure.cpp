#include "doctest.h"
#include "qdom/closure.hpp"

using namespace qdom;

namespace {

LOrderedSet chain2(const QuantalePtr& L) {
    LOrderedSet P;
    P.id = "chain2";
    P.L = L;
    P.points = {"p0", "p1"};
    P.e = {L->unit(), L->unit(), L->bottom(), L->unit()};
    return P;
}

ClosureSpace downsetSpace(const QuantalePtr& L) {
    // point closures are the down-sets of the two-chain
    ClosureSpace S;
    S.id = "ds2";
    S.points = {"p0", "p1"};
    S.L = L;
    ClosureSpace::PointGenerated pg;
    pg.closures.push_back({S.id, {L->unit(), L->bottom()}});
    pg.closures.push_back({S.id, {L->unit(), L->unit()}});
    S.op = std::move(pg);
    return S;
}

}  // namespace

TEST_CASE("the down-set space of a two-chain is an interpolative L-closure space") {
    auto L = fixtureQuantale("boolean");
    ClosureSpace S = downsetSpace(L);
    CHECK(validateGeneralized(S).pass);
    CHECK(isInterpolative(S).pass);
    CHECK(isLClosureSpace(S).pass);
}

TEST_CASE("a non-transitive point closure family fails GC2") {
    auto L = fixtureQuantale("boolean");
    ClosureSpace S;
    S.id = "bad";
    S.points = {"a", "b", "c"};
    S.L = L;
    ClosureSpace::PointGenerated pg;
    pg.closures.push_back({S.id, {1, 1, 0}});
    pg.closures.push_back({S.id, {0, 1, 1}});
    pg.closures.push_back({S.id, {0, 0, 1}});
    S.op = std::move(pg);
    auto r = validateGeneralized(S);
    CHECK_FALSE(r.pass);
    CHECK(r.axiom == "GC2");
}

TEST_CASE("directed closed sets of the two-chain down-set space are its ideals") {
    auto L = fixtureQuantale("boolean");
    DirClosedFamily F = dirClosedSets(downsetSpace(L));
    REQUIRE(F.carrier.size() == 2);
    CHECK(F.carrier[0].v == std::vector<Elem>{1, 0});
    CHECK(F.carrier[1].v == std::vector<Elem>{1, 1});
    // inclusion order: a two-chain again
    CHECK(F.order.ord(0, 1) == L->top());
    CHECK(F.order.ord(1, 0) == L->bottom());
    CHECK(F.pointClosureIndex == std::vector<std::size_t>{0, 1});
}

TEST_CASE("closureOfDomain reproduces the down-set operator on a crisp chain") {
    auto L = fixtureQuantale("boolean");
    LOrderedSet P = chain2(L);
    REQUIRE(P.validate().allPass());
    ClosureSpace S = closureOfDomain(P);
    ClosureSpace D = downsetSpace(L);
    const auto& pg = std::get<ClosureSpace::PointGenerated>(S.op);
    const auto& dg = std::get<ClosureSpace::PointGenerated>(D.op);
    for (std::size_t x = 0; x < 2; ++x) CHECK(pg.closures[x].v == dg.closures[x].v);
}

TEST_CASE("the empty subset satisfies the fixed-point identity but is not directed closed") {
    auto L = fixtureQuantale("boolean");
    ClosureSpace S = downsetSpace(L);
    LSubset zero = S.constant(L->bottom());
    CHECK(checkFixedPointCharacterization(S, zero));
    auto r = isDirectedClosed(S, zero);
    CHECK_FALSE(r.pass);
}

TEST_CASE("closure evaluation distributes over the generating family") {
    auto L = fixtureQuantale("lukasiewicz-3");
    ClosureSpace S;
    S.id = "l3";
    S.points = {"a", "b"};
    S.L = L;
    Elem h = L->indexOf("half"), o = L->indexOf("1"), z = L->indexOf("0");
    ClosureSpace::PointGenerated pg;
    pg.closures.push_back({S.id, {o, z}});
    pg.closures.push_back({S.id, {h, o}});
    S.op = std::move(pg);
    REQUIRE(validateGeneralized(S).pass);
    LSubset A{S.id, {z, h}};
    // <A> = A(a) (x) C_a v A(b) (x) C_b = half (x) {half, 1} = {0, half}
    CHECK(S.close(A).v == std::vector<Elem>{z, h});
}

TEST_CASE("restriction to a subspace keeps point closures of kept points") {
    auto L = fixtureQuantale("boolean");
    ClosureSpace S = downsetSpace(L);
    ClosureSpace R = restrictToSubspace(S, {1}, "ds2|p1");
    CHECK(R.size() == 1);
    CHECK(R.pointClosureOf(0).v == std::vector<Elem>{1});
    CHECK(isLClosureSpace(R).pass);
}

TEST_CASE("dense subspace checks: full carrier is dense, gate refuses non-integral") {
    auto L = fixtureQuantale("boolean");
    ClosureSpace S = downsetSpace(L);
    CHECK(isDenseSubspace(S, {0, 1}).pass);

    auto N = fixtureQuantale("nonintegral-3");
    ClosureSpace T;
    T.id = "ni";
    T.points = {"a"};
    T.L = N;
    ClosureSpace::PointGenerated pg;
    pg.closures.push_back({T.id, {N->unit()}});
    T.op = std::move(pg);
    CHECK_THROWS_AS(isDenseSubspace(T, {0}), PreconditionError);
}

TEST_CASE("closureOfAlgebraic on a crisp diamond is the down-set operator on all points") {
    auto L = fixtureQuantale("boolean");
    LOrderedSet P;
    P.id = "diamond";
    P.L = L;
    P.points = {"bot", "l", "r", "top"};
    P.e.assign(16, L->bottom());
    for (std::size_t x = 0; x < 4; ++x) P.e[x * 4 + x] = L->unit();
    for (std::size_t y : {1ul, 2ul, 3ul}) P.e[0 * 4 + y] = L->unit();
    P.e[1 * 4 + 3] = L->unit();
    P.e[2 * 4 + 3] = L->unit();
    REQUIRE(P.validate().allPass());
    REQUIRE(isAlgebraic(P).pass);
    ClosureSpace S = closureOfAlgebraic(P);
    CHECK(S.size() == 4);  // every point is compact
    CHECK(isLClosureSpace(S).pass);
    for (std::size_t x = 0; x < 4; ++x) CHECK(S.pointClosureOf(x).v == downSet(P, x).v);
}

TEST_CASE("table-backed spaces validate and close via row lookup") {
    auto L = fixtureQuantale("boolean");
    // one point; closure is the identity on {0, u_x}
    LSubsetEnum en("one", 1, *L);
    ClosureSpace S;
    S.id = "one";
    S.points = {"x"};
    S.L = L;
    ClosureSpace::TableBacked tb;
    for (std::size_t r = 0; r < en.count(); ++r) tb.rows.push_back(en.at(r));
    S.op = std::move(tb);
    CHECK(validateGeneralized(S).pass);
    CHECK(S.close(S.charAt(0)).v == std::vector<Elem>{1});
}
