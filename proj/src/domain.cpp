#include "qdom/domain.hpp"

#include <map>
#include <mutex>

#include "qdom/scan.hpp"

namespace qdom {

namespace {

void requireLDcpo(const LOrderedSet& P, const char* op) {
    if (auto r = isLDcpo(P); !r)
        throw PreconditionError(std::string(op) + " requires an L-dcpo; " + r.witness);
}

std::vector<std::size_t> idealRanks(const LOrderedSet& P, const LSubsetEnum& en) {
    return filter_indices(en.count(),
                          [&](std::size_t r) { return isIdeal(P, en.at(r)).pass; });
}

}  // namespace

LSubset wayBelow(const LOrderedSet& P, std::size_t x) {
    requireLDcpo(P, "wayBelow");
    const auto& q = *P.L;
    auto en = enumerateLSubsets(P);
    auto ideals = idealRanks(P, en);
    LSubset wb = P.constant(q.top());
    for (std::size_t r : ideals) {
        LSubset I = en.at(r);
        auto s = supremum(P, I);
        // ideals in an L-dcpo always have one
        Elem bound = P.ord(x, *s);
        for (std::size_t y = 0; y < P.size(); ++y)
            wb.v[y] = q.meet(wb.v[y], q.residuate(bound, I(y)));
    }
    return wb;
}

LSubset wayBelowAlt(const LOrderedSet& P, std::size_t x) {
    requireLDcpo(P, "wayBelowAlt");
    const auto& q = *P.L;
    auto en = enumerateLSubsets(P);
    LSubset wb = P.constant(q.top());
    for (std::size_t r = 0; r < en.count(); ++r) {
        LSubset D = en.at(r);
        if (!isDirected(P, D).pass) continue;
        auto s = supremum(P, D);
        Elem bound = P.ord(x, *s);
        for (std::size_t y = 0; y < P.size(); ++y) {
            std::vector<Elem> terms;
            for (std::size_t d = 0; d < P.size(); ++d)
                terms.push_back(q.tensor(D(d), P.ord(y, d)));
            wb.v[y] = q.meet(wb.v[y], q.residuate(bound, q.joinOfSet(terms)));
        }
    }
    return wb;
}

CheckResult isContinuous(const LOrderedSet& P) {
    requireLDcpo(P, "isContinuous");
    for (std::size_t x = 0; x < P.size(); ++x) {
        LSubset wb = wayBelow(P, x);
        if (auto r = isDirected(P, wb); !r)
            return CheckResult::fail("continuity",
                                     "way-below of " + P.points[x] + " not directed (" +
                                         r.axiom + " at " + r.witness + ")");
        auto s = supremum(P, wb);
        if (!s || *s != x)
            return CheckResult::fail("continuity",
                                     "sup of way-below of " + P.points[x] + " is not " +
                                         P.points[x]);
    }
    return CheckResult::ok();
}

std::vector<std::size_t> compactElements(const LOrderedSet& P) {
    requireLDcpo(P, "compactElements");
    std::vector<std::size_t> ks;
    for (std::size_t x = 0; x < P.size(); ++x)
        if (P.L->leq(P.L->unit(), wayBelow(P, x).v[x])) ks.push_back(x);
    return ks;
}

LSubset kSubset(const LOrderedSet& P, std::size_t x) {
    if (x >= P.size()) throw StructuralError("unknown point index in kSubset");
    auto ks = compactElements(P);
    LSubset k = P.constant(P.L->bottom());
    for (std::size_t y : ks) k.v[y] = P.ord(y, x);
    return k;
}

LOrderedSet restrictOrder(const LOrderedSet& P, const std::vector<std::size_t>& pts,
                          const std::string& id) {
    LOrderedSet S;
    S.id = id;
    S.L = P.L;
    for (std::size_t p : pts) {
        if (p >= P.size()) throw StructuralError("unknown point index in restrictOrder");
        S.points.push_back(P.points[p]);
    }
    S.e.resize(pts.size() * pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            S.e[i * pts.size() + j] = P.ord(pts[i], pts[j]);
    return S;
}

CheckResult isAlgebraic(const LOrderedSet& P) {
    requireLDcpo(P, "isAlgebraic");
    auto ks = compactElements(P);
    for (std::size_t x = 0; x < P.size(); ++x) {
        LSubset k = P.constant(P.L->bottom());
        for (std::size_t y : ks) k.v[y] = P.ord(y, x);
        if (auto r = isDirected(P, k); !r)
            return CheckResult::fail("algebraicity", "k(" + P.points[x] + ") not directed (" +
                                                         r.axiom + ")");
        auto s = supremum(P, k);
        if (!s || *s != x)
            return CheckResult::fail("algebraicity",
                                     "sup of k(" + P.points[x] + ") is not " + P.points[x]);
    }
    // cross-check the restriction form on (K(P), e)
    if (!ks.empty()) {
        LOrderedSet KP = restrictOrder(P, ks, P.id + "|K");
        for (std::size_t x = 0; x < P.size(); ++x) {
            LSubset kr{KP.id, std::vector<Elem>(ks.size())};
            for (std::size_t i = 0; i < ks.size(); ++i) kr.v[i] = P.ord(ks[i], x);
            if (auto r = isDirected(KP, kr); !r)
                return CheckResult::fail("algebraicity",
                                         "k(" + P.points[x] + ")|K(P) not directed (" + r.axiom +
                                             ")");
        }
    }
    return CheckResult::ok();
}

DomainAnalysis analyzeDomain(const LOrderedSet& P) {
    static std::map<std::uint64_t, DomainAnalysis> cache;
    static std::mutex mu;
    const std::uint64_t h = P.structuralHash();
    {
        std::lock_guard<std::mutex> lk(mu);
        if (auto it = cache.find(h); it != cache.end()) return it->second;
    }
    DomainAnalysis a;
    a.subjectHash = h;
    a.dcpo = isLDcpo(P);
    if (a.dcpo.pass) {
        for (std::size_t x = 0; x < P.size(); ++x) a.wayBelowTable.push_back(wayBelow(P, x));
        a.compactPoints = compactElements(P);
        a.continuous = isContinuous(P);
        a.algebraic = isAlgebraic(P);
    } else {
        a.continuous = CheckResult::fail("continuity", "not an L-dcpo");
        a.algebraic = CheckResult::fail("algebraicity", "not an L-dcpo");
    }
    {
        std::lock_guard<std::mutex> lk(mu);
        cache.emplace(h, a);
    }
    return a;
}

}  // namespace qdom
