#include "doctest.h"
#include "qdom/approx.hpp"

using namespace qdom;

namespace {

ClosureSpace downsetSpace(const QuantalePtr& L) {
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

TEST_CASE("the identity relation is approximable and neutral for composition") {
    auto L = fixtureQuantale("boolean");
    ClosureSpace S = downsetSpace(L);
    ApproxRelation id = identityRelation(S);
    CHECK(validateApproximable(id).pass);
    CHECK(composeRelations(id, id).sameTable(id));
}

TEST_CASE("the zero relation is not approximable") {
    auto L = fixtureQuantale("boolean");
    ClosureSpace S = downsetSpace(L);
    ApproxRelation zero{S, S, std::vector<Elem>(4, L->bottom())};
    auto r = validateApproximable(zero);
    CHECK_FALSE(r.pass);
    CHECK(r.axiom.substr(0, 2) == "AP");
}

TEST_CASE("the transpose of the identity is the identity on directed closed sets") {
    auto L = fixtureQuantale("boolean");
    ClosureSpace S = downsetSpace(L);
    ApproxRelation id = identityRelation(S);
    DirClosedFamily F = dirClosedSets(S);
    for (const auto& U : F.carrier) CHECK(applyToClosed(id, U).v == U.v);
    auto psi = psiOf(id, F, F);
    for (std::size_t i = 0; i < psi.size(); ++i) CHECK(psi[i] == i);
    CHECK(thetaOf(psi, S, S, F, F).sameTable(id));
}

TEST_CASE("round trips hold for every approximable relation on the tiny instance") {
    auto L = fixtureQuantale("boolean");
    ClosureSpace S = downsetSpace(L);
    DirClosedFamily F = dirClosedSets(S);
    // all 16 boolean tables, filtered by the AP laws
    std::size_t approximable = 0;
    for (unsigned mask = 0; mask < 16; ++mask) {
        ApproxRelation R{S, S, {}};
        for (unsigned b = 0; b < 4; ++b)
            R.theta.push_back((mask >> b) & 1u ? L->top() : L->bottom());
        if (!validateApproximable(R).pass) continue;
        ++approximable;
        auto psi = psiOf(R, F, F);
        CHECK(thetaOf(psi, S, S, F, F).sameTable(R));
    }
    auto maps = enumerateScottMaps(F, F, 1000);
    CHECK(approximable == maps.size());
    for (const auto& f : maps) {
        auto R = thetaOf(f, S, S, F, F);
        CHECK(psiOf(R, F, F) == f);
    }
}

TEST_CASE("the equivalence evidence suite passes exhaustively on tiny spaces") {
    auto L = fixtureQuantale("boolean");
    ClosureSpace S = downsetSpace(L);
    EquivalenceReport rep = checkEquivalenceSuite(S, S, 100000);
    CHECK(rep.allPassOrSampled());
    CHECK_FALSE(rep.anySampled());
    for (const auto& l : rep.lines) CHECK(l.status == "pass");
}

TEST_CASE("relations across different quantales are refused") {
    auto S = downsetSpace(fixtureQuantale("boolean"));
    auto T = downsetSpace(fixtureQuantale("goedel-3"));
    // a 2x2 table of the right size, but mismatched carriers
    ApproxRelation R{S, T, std::vector<Elem>(4, 0)};
    CHECK_THROWS_AS(validateApproximable(R), StructuralError);
}
