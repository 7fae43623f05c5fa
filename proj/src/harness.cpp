#include "qdom/harness.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "qdom/io.hpp"
#include "qdom/scan.hpp"

namespace qdom {

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

CheckResult fromReport(const ValidationReport& rep) {
    if (rep.allPass()) return CheckResult::ok();
    const auto* f = rep.firstFailure();
    return CheckResult::fail(f->law, f->witness);
}

}  // namespace

LOrderedSet genLOrderedSet(const GenConfig& cfg, Rng& rng) {
    auto L = fixtureQuantale(cfg.quantaleId);
    const std::size_t lo = std::max<std::size_t>(std::size_t{1}, cfg.minPoints);
    const std::size_t hi = std::max(lo, cfg.maxPoints);
    std::vector<Elem> aboveU;
    for (Elem a = 0; a < static_cast<Elem>(L->size()); ++a)
        if (L->leq(L->unit(), a)) aboveU.push_back(a);

    for (std::size_t attempt = 0; attempt < cfg.rejectionBudget; ++attempt) {
        const std::size_t n = lo + rng.below(hi - lo + 1);
        LOrderedSet P;
        P.id = "gen";
        P.L = L;
        for (std::size_t i = 0; i < n; ++i) P.points.push_back("p" + std::to_string(i));
        P.e.assign(n * n, L->bottom());
        for (std::size_t x = 0; x < n; ++x) P.e[x * n + x] = L->unit();
        // Random skeleton: forward edges mostly carry degrees >= u, a sprinkle
        // of arbitrary degrees in both directions exercises the general case.
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x + 1; y < n; ++y) {
                if (rng.chance(2, 5))
                    P.e[x * n + y] = aboveU[rng.below(aboveU.size())];
                else if (rng.chance(1, 3))
                    P.e[x * n + y] = static_cast<Elem>(rng.below(L->size()));
                if (rng.chance(1, 5))
                    P.e[y * n + x] = static_cast<Elem>(rng.below(L->size()));
            }
        // Closure repair: grow degrees until tensor-transitivity is a fixpoint.
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y)
                    for (std::size_t z = 0; z < n; ++z) {
                        Elem t = L->tensor(P.e[x * n + y], P.e[y * n + z]);
                        Elem j = L->join(P.e[x * n + z], t);
                        if (j != P.e[x * n + z]) {
                            P.e[x * n + z] = j;
                            changed = true;
                        }
                    }
        }
        bool antisym = true;
        for (std::size_t x = 0; x < n && antisym; ++x)
            for (std::size_t y = 0; y < n && antisym; ++y)
                if (x != y && L->leq(L->unit(), P.ord(x, y)) && L->leq(L->unit(), P.ord(y, x)))
                    antisym = false;
        if (!antisym) continue;
        if (!P.validate().allPass()) continue;
        return P;
    }
    throw StructuralError("genLOrderedSet: rejection budget exhausted");
}

namespace {

template <typename Pred>
LOrderedSet genFiltered(const GenConfig& cfg, Rng& rng, Pred&& keep, const char* what) {
    for (std::size_t attempt = 0; attempt < cfg.rejectionBudget; ++attempt) {
        LOrderedSet P = genLOrderedSet(cfg, rng);
        if (keep(P)) return P;
    }
    throw StructuralError(std::string("rejection budget exhausted while sampling ") + what);
}

LOrderedSet genAlgebraicDcpo(const GenConfig& cfg, Rng& rng) {
    return genFiltered(
        cfg, rng,
        [](const LOrderedSet& P) { return isLDcpo(P).pass && isAlgebraic(P).pass; },
        "an algebraic L-dcpo");
}

}  // namespace

LOrderedSet genLDcpo(const GenConfig& cfg, Rng& rng) {
    return genFiltered(cfg, rng, [](const LOrderedSet& P) { return isLDcpo(P).pass; },
                       "an L-dcpo");
}

ClosureSpace genInterpolativeSpace(const GenConfig& cfg, Rng& rng) {
    LOrderedSet P = genFiltered(
        cfg, rng,
        [](const LOrderedSet& Q) { return isLDcpo(Q).pass && isContinuous(Q).pass; },
        "a continuous L-dcpo");
    return closureOfDomain(P);
}

ClosureSpace genLClosureSpace(const GenConfig& cfg, Rng& rng) {
    return closureOfAlgebraic(genAlgebraicDcpo(cfg, rng));
}

std::optional<ApproxRelation> genApproxRelation(const GenConfig& cfg, Rng& rng,
                                                const ClosureSpace& X, const ClosureSpace& Y) {
    DirClosedFamily cx = dirClosedSets(X), cy = dirClosedSets(Y);
    try {
        auto pool = enumerateScottMaps(cx, cy, cfg.budget);
        if (pool.empty()) return std::nullopt;
        return thetaOf(pool[rng.below(pool.size())], X, Y, cx, cy);
    } catch (const CapExceeded&) {
        // Fall back to rejection sampling over raw index maps.
    }
    const std::size_t m = cx.carrier.size(), k = cy.carrier.size();
    for (std::size_t attempt = 0; attempt < cfg.rejectionBudget; ++attempt) {
        std::vector<std::size_t> psi(m);
        for (auto& v : psi) v = rng.below(k);
        if (isScottContinuous(psi, cx.order, cy.order).pass)
            return thetaOf(psi, X, Y, cx, cy);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Classical (Boolean) brute-force oracle.

namespace classical {

Poset fromCrisp(const LOrderedSet& P) {
    if (P.L->size() != 2)
        throw PreconditionError("the classical oracle requires the two-element quantale");
    Poset Q{P.size(), std::vector<bool>(P.size() * P.size(), false)};
    for (std::size_t x = 0; x < P.size(); ++x)
        for (std::size_t y = 0; y < P.size(); ++y)
            Q.leq[x * Q.n + y] = (P.ord(x, y) == P.L->top());
    return Q;
}

bool isDirectedSet(const Poset& P, const std::vector<bool>& S) {
    bool nonempty = false;
    for (std::size_t a = 0; a < P.n; ++a) nonempty = nonempty || S[a];
    if (!nonempty) return false;
    for (std::size_t a = 0; a < P.n; ++a) {
        if (!S[a]) continue;
        for (std::size_t b = 0; b < P.n; ++b) {
            if (!S[b]) continue;
            bool bounded = false;
            for (std::size_t c = 0; c < P.n && !bounded; ++c)
                bounded = S[c] && P.le(a, c) && P.le(b, c);
            if (!bounded) return false;
        }
    }
    return true;
}

bool isLowerSetClassical(const Poset& P, const std::vector<bool>& S) {
    for (std::size_t x = 0; x < P.n; ++x) {
        if (!S[x]) continue;
        for (std::size_t y = 0; y < P.n; ++y)
            if (P.le(y, x) && !S[y]) return false;
    }
    return true;
}

bool isIdealSet(const Poset& P, const std::vector<bool>& S) {
    return isDirectedSet(P, S) && isLowerSetClassical(P, S);
}

std::optional<std::size_t> leastUpperBound(const Poset& P, const std::vector<bool>& S) {
    std::vector<std::size_t> ubs;
    for (std::size_t z = 0; z < P.n; ++z) {
        bool ub = true;
        for (std::size_t s = 0; s < P.n && ub; ++s)
            if (S[s] && !P.le(s, z)) ub = false;
        if (ub) ubs.push_back(z);
    }
    for (std::size_t z0 : ubs) {
        bool least = true;
        for (std::size_t z : ubs)
            if (!P.le(z0, z)) least = false;
        if (least) return z0;
    }
    return std::nullopt;
}

bool wayBelowClassical(const Poset& P, std::size_t y, std::size_t x) {
    const std::size_t total = std::size_t{1} << P.n;
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::vector<bool> S(P.n);
        for (std::size_t i = 0; i < P.n; ++i) S[i] = (mask >> i) & 1u;
        if (!isDirectedSet(P, S)) continue;
        auto lub = leastUpperBound(P, S);
        if (!lub || !P.le(x, *lub)) continue;
        bool hit = false;
        for (std::size_t s = 0; s < P.n && !hit; ++s) hit = S[s] && P.le(y, s);
        if (!hit) return false;
    }
    return true;
}

bool isAlgebraicClassical(const Poset& P) {
    std::vector<bool> compact(P.n);
    for (std::size_t k = 0; k < P.n; ++k) compact[k] = wayBelowClassical(P, k, k);
    for (std::size_t x = 0; x < P.n; ++x) {
        std::vector<bool> Kx(P.n, false);
        for (std::size_t k = 0; k < P.n; ++k) Kx[k] = compact[k] && P.le(k, x);
        if (!isDirectedSet(P, Kx)) return false;
        auto lub = leastUpperBound(P, Kx);
        if (!lub || *lub != x) return false;
    }
    return true;
}

}  // namespace classical

CheckResult classicalOracle(const LOrderedSet& P) {
    classical::Poset C = classical::fromCrisp(P);
    const auto& q = *P.L;
    const std::size_t n = P.size();
    const Elem top = q.top(), bot = q.bottom();
    const std::size_t total = std::size_t{1} << n;

    auto crisp = [&](std::size_t mask) {
        LSubset A{P.id, std::vector<Elem>(n, bot)};
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1u) A.v[i] = top;
        return A;
    };
    auto boolsOf = [&](std::size_t mask) {
        std::vector<bool> S(n);
        for (std::size_t i = 0; i < n; ++i) S[i] = (mask >> i) & 1u;
        return S;
    };

    for (std::size_t mask = 0; mask < total; ++mask) {
        LSubset A = crisp(mask);
        std::vector<bool> S = boolsOf(mask);
        if (isDirected(P, A).pass != classical::isDirectedSet(C, S))
            return CheckResult::fail("oracle-directed", renderSubset(P, A));
        if (isLowerSet(P, A).pass != classical::isLowerSetClassical(C, S))
            return CheckResult::fail("oracle-lower", renderSubset(P, A));
        if (isIdeal(P, A).pass != classical::isIdealSet(C, S))
            return CheckResult::fail("oracle-ideal", renderSubset(P, A));
        if (supremum(P, A) != classical::leastUpperBound(C, S))
            return CheckResult::fail("oracle-supremum", renderSubset(P, A));
    }
    if (!isLDcpo(P).pass)
        return CheckResult::fail("oracle-dcpo", "finite crisp instance is not an L-dcpo");
    for (std::size_t x = 0; x < n; ++x) {
        LSubset wb = wayBelow(P, x);
        for (std::size_t y = 0; y < n; ++y)
            if ((wb(y) == top) != classical::wayBelowClassical(C, y, x))
                return CheckResult::fail("oracle-waybelow",
                                         P.points[y] + " vs " + P.points[x]);
    }
    if (isAlgebraic(P).pass != classical::isAlgebraicClassical(C))
        return CheckResult::fail("oracle-algebraic", P.id);

    // Down-set operator: its directed closed sets must be exactly the crisp
    // characteristic functions of the classical ideals, ordered by inclusion.
    ClosureSpace DS;
    DS.id = P.id;
    DS.points = P.points;
    DS.L = P.L;
    ClosureSpace::PointGenerated pg;
    for (std::size_t x = 0; x < n; ++x) pg.closures.push_back(downSet(P, x));
    DS.op = std::move(pg);
    DirClosedFamily fam = dirClosedSets(DS);
    std::set<std::vector<Elem>> got;
    for (const auto& U : fam.carrier) got.insert(U.v);
    std::set<std::vector<Elem>> want;
    for (std::size_t mask = 0; mask < total; ++mask)
        if (classical::isIdealSet(C, boolsOf(mask))) want.insert(crisp(mask).v);
    if (got != want) return CheckResult::fail("oracle-ideal-lattice", P.id);
    for (std::size_t i = 0; i < fam.carrier.size(); ++i)
        for (std::size_t j = 0; j < fam.carrier.size(); ++j) {
            bool incl = true;
            for (std::size_t x = 0; x < n; ++x)
                if (fam.carrier[i](x) == top && fam.carrier[j](x) != top) incl = false;
            if ((fam.order.ord(i, j) == top) != incl)
                return CheckResult::fail("oracle-ideal-order",
                                         fam.order.points[i] + " vs " + fam.order.points[j]);
        }
    return CheckResult::ok();
}

// ---------------------------------------------------------------------------
// Suites.

namespace {

using Line = SuiteReport::Line;

void put(std::vector<Line>& ls, std::string prop, const std::string& inst, const CheckResult& r,
         const std::string& serial) {
    std::string w;
    if (!r.pass) {
        w = r.axiom;
        if (!r.witness.empty()) w += ": " + r.witness;
        if (!serial.empty()) w += " | instance: " + serial;
    }
    ls.push_back({std::move(prop), inst, r.pass ? "pass" : "fail", std::move(w)});
}

struct InstanceOutcome {
    std::vector<Line> lines;
    double secs = 0;
};

template <typename Body>
void runInstances(SuiteReport& rep, const GenConfig& cfg, Body&& body) {
    const std::size_t n = cfg.instances;
    std::vector<InstanceOutcome> out(n);
    auto runOne = [&](std::size_t i) {
        auto t0 = std::chrono::steady_clock::now();
        Rng rng(mix(cfg.seed, i));
        const std::string inst = "instance-" + std::to_string(i);
        try {
            body(rng, inst, out[i].lines);
        } catch (const CapExceeded& e) {
            out[i].lines.push_back({"budget", inst, "sampled", e.what()});
        } catch (const std::exception& e) {
            out[i].lines.push_back({"generation", inst, "fail", e.what()});
        }
        out[i].secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };
#ifdef _OPENMP
    if (worker_count() > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            runOne(static_cast<std::size_t>(i));
    } else
#endif
    {
        for (std::size_t i = 0; i < n; ++i) runOne(i);
    }
    double totalSecs = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (auto& l : out[i].lines) rep.lines.push_back(std::move(l));
        rep.phaseSeconds.emplace_back("instance-" + std::to_string(i), out[i].secs);
        totalSecs += out[i].secs;
    }
    rep.phaseSeconds.emplace_back("total", totalSecs);
}

void suiteCore(SuiteReport& rep, const GenConfig& cfg) {
    auto L = fixtureQuantale(cfg.quantaleId);
    put(rep.lines, "quantale-laws", "quantale", fromReport(L->validate()), "");
    put(rep.lines, "residuation-laws", "quantale", fromReport(L->checkResiduationLaws()), "");
    runInstances(rep, cfg, [&cfg](Rng& rng, const std::string& inst, std::vector<Line>& ls) {
        LOrderedSet P = genLOrderedSet(cfg, rng);
        const std::string ser = toJson(P).dump();
        const auto& q = *P.L;
        put(ls, "order-laws", inst, fromReport(P.validate()), ser);

        CheckResult principal = CheckResult::ok();
        for (std::size_t x = 0; x < P.size() && principal.pass; ++x) {
            if (!isUpperSet(P, upSet(P, x)).pass)
                principal = CheckResult::fail("up-set", P.points[x]);
            else if (!isLowerSet(P, downSet(P, x)).pass)
                principal = CheckResult::fail("down-set", P.points[x]);
            else if (!isIdeal(P, downSet(P, x)).pass)
                principal = CheckResult::fail("down-set-ideal", P.points[x]);
            else if (supremum(P, downSet(P, x)) != std::optional<std::size_t>(x))
                principal = CheckResult::fail("down-set-sup", P.points[x]);
            else if (infimum(P, upSet(P, x)) != std::optional<std::size_t>(x))
                principal = CheckResult::fail("up-set-inf", P.points[x]);
        }
        put(ls, "principal-sets", inst, principal, ser);

        LSubsetEnum en = enumerateLSubsets(P);
        if (en.count() <= 32) {
            CheckResult incl = CheckResult::ok();
            std::vector<LSubset> all;
            for (std::size_t r = 0; r < en.count(); ++r) all.push_back(en.at(r));
            for (std::size_t a = 0; a < all.size() && incl.pass; ++a) {
                if (!q.leq(q.unit(), subdeg(q, all[a], all[a])))
                    incl = CheckResult::fail("sub-reflexive", renderSubset(P, all[a]));
                for (std::size_t b = 0; b < all.size() && incl.pass; ++b) {
                    if (a != b && q.leq(q.unit(), subdeg(q, all[a], all[b])) &&
                        q.leq(q.unit(), subdeg(q, all[b], all[a])))
                        incl = CheckResult::fail("sub-antisymmetric",
                                                 renderSubset(P, all[a]) + " vs " +
                                                     renderSubset(P, all[b]));
                    for (std::size_t c = 0; c < all.size() && incl.pass; ++c)
                        if (!q.leq(q.tensor(subdeg(q, all[a], all[b]), subdeg(q, all[b], all[c])),
                                   subdeg(q, all[a], all[c])))
                            incl = CheckResult::fail("sub-transitive",
                                                     renderSubset(P, all[a]) + " vs " +
                                                         renderSubset(P, all[c]));
                }
            }
            put(ls, "inclusion-order-laws", inst, incl, ser);
        } else {
            ls.push_back({"inclusion-order-laws", inst, "sampled",
                          "subset space of size " + std::to_string(en.count()) +
                              " exceeds the exhaustive triple budget"});
        }
    });
}

void suiteOracle(SuiteReport& rep, const GenConfig& cfg) {
    if (cfg.quantaleId != "boolean")
        throw PreconditionError("the classical oracle suite requires the boolean quantale");
    runInstances(rep, cfg, [&cfg](Rng& rng, const std::string& inst, std::vector<Line>& ls) {
        LOrderedSet P = genLOrderedSet(cfg, rng);
        put(ls, "classical-agreement", inst, classicalOracle(P), toJson(P).dump());
    });
}

void suiteWayBelow(SuiteReport& rep, const GenConfig& cfg) {
    runInstances(rep, cfg, [&cfg](Rng& rng, const std::string& inst, std::vector<Line>& ls) {
        LOrderedSet P = genLDcpo(cfg, rng);
        CheckResult r = CheckResult::ok();
        for (std::size_t x = 0; x < P.size() && r.pass; ++x)
            if (wayBelow(P, x).v != wayBelowAlt(P, x).v)
                r = CheckResult::fail("waybelow-forms", P.points[x]);
        put(ls, "waybelow-forms-agree", inst, r, toJson(P).dump());
    });
}

void suiteRep1(SuiteReport& rep, const GenConfig& cfg) {
    runInstances(rep, cfg, [&cfg](Rng& rng, const std::string& inst, std::vector<Line>& ls) {
        ClosureSpace S = genInterpolativeSpace(cfg, rng);
        const std::string ser = toJson(S).dump();
        DirClosedFamily F = dirClosedSets(S);
        const auto& q = *S.L;
        put(ls, "carrier-order-laws", inst, fromReport(F.order.validate()), ser);
        put(ls, "carrier-ldcpo", inst, isLDcpo(F.order), ser);
        put(ls, "carrier-continuous", inst, isContinuous(F.order), ser);

        // Canonical approximant D_U(V) = join over <u_x> = V of U(x):
        // directed, sup U, and pointwise below the way-below subset of U.
        CheckResult capx = CheckResult::ok();
        const std::size_t m = F.carrier.size();
        for (std::size_t iU = 0; iU < m && capx.pass; ++iU) {
            LSubset DU{F.order.id, std::vector<Elem>(m, q.bottom())};
            for (std::size_t x = 0; x < S.size(); ++x) {
                std::size_t j = F.pointClosureIndex[x];
                DU.v[j] = q.join(DU.v[j], F.carrier[iU](x));
            }
            if (!isDirected(F.order, DU).pass)
                capx = CheckResult::fail("approximant-directed", F.order.points[iU]);
            else if (supremum(F.order, DU) != std::optional<std::size_t>(iU))
                capx = CheckResult::fail("approximant-sup", F.order.points[iU]);
            else {
                LSubset wb = wayBelow(F.order, iU);
                for (std::size_t j = 0; j < m; ++j)
                    if (!q.leq(DU(j), wb(j)))
                        capx = CheckResult::fail("approximant-below",
                                                 F.order.points[iU] + " at " + F.order.points[j]);
            }
        }
        put(ls, "canonical-approximant", inst, capx, ser);

        // Round trip: the directed closed sets of the induced space are
        // exactly the way-below subsets, and x -> wb_x is an isomorphism.
        const LOrderedSet& P = F.order;
        ClosureSpace S2 = closureOfDomain(P);
        DirClosedFamily F2 = dirClosedSets(S2);
        std::set<std::vector<Elem>> got, want;
        for (const auto& U : F2.carrier) got.insert(U.v);
        for (std::size_t x = 0; x < P.size(); ++x) want.insert(wayBelow(P, x).v);
        put(ls, "roundtrip-carrier", inst,
            got == want ? CheckResult::ok()
                        : CheckResult::fail("carrier-mismatch",
                                            std::to_string(got.size()) + " closed sets vs " +
                                                std::to_string(want.size()) + " way-below sets"),
            ser);
        CheckResult iso = CheckResult::ok();
        try {
            std::vector<std::size_t> f;
            for (std::size_t x = 0; x < P.size(); ++x)
                f.push_back(F2.indexOfSubset({S2.id, wayBelow(P, x).v}));
            if (!checkIsoVia(f, P, F2.order))
                iso = CheckResult::fail("canonical-iso", "x -> wb_x is not an isomorphism");
        } catch (const StructuralError& e) {
            iso = CheckResult::fail("canonical-iso", e.what());
        }
        put(ls, "roundtrip-iso", inst, iso, ser);
    });
}

void suiteRep2(SuiteReport& rep, const GenConfig& cfg) {
    runInstances(rep, cfg, [&cfg](Rng& rng, const std::string& inst, std::vector<Line>& ls) {
        ClosureSpace S = genLClosureSpace(cfg, rng);
        const std::string ser = toJson(S).dump();
        DirClosedFamily F = dirClosedSets(S);
        put(ls, "carrier-algebraic", inst, isAlgebraic(F.order), ser);

        auto compact = compactElements(F.order);
        CheckResult pc = CheckResult::ok();
        for (std::size_t x = 0; x < S.size() && pc.pass; ++x)
            if (std::find(compact.begin(), compact.end(), F.pointClosureIndex[x]) ==
                compact.end())
                pc = CheckResult::fail("point-closure-compact", S.points[x]);
        put(ls, "point-closures-compact", inst, pc, ser);

        const LOrderedSet& P = F.order;
        CheckResult iso = CheckResult::ok();
        try {
            ClosureSpace S2 = closureOfAlgebraic(P);
            DirClosedFamily F2 = dirClosedSets(S2);
            auto ks = compactElements(P);
            std::vector<std::size_t> f;
            for (std::size_t x = 0; x < P.size(); ++x) {
                LSubset kx = kSubset(P, x);
                LSubset r{S2.id, std::vector<Elem>(ks.size())};
                for (std::size_t j = 0; j < ks.size(); ++j) r.v[j] = kx(ks[j]);
                f.push_back(F2.indexOfSubset(r));
            }
            if (!checkIsoVia(f, P, F2.order))
                iso = CheckResult::fail("canonical-iso", "x -> k(x)|_K is not an isomorphism");
        } catch (const std::exception& e) {
            iso = CheckResult::fail("canonical-iso", e.what());
        }
        put(ls, "algebraic-roundtrip", inst, iso, ser);
    });
}

void requireIntegralSuite(const GenConfig& cfg, const char* suite) {
    if (!fixtureQuantale(cfg.quantaleId)->isIntegral())
        throw PreconditionError(std::string(suite) +
                                ": dense subspace analysis requires an integral quantale "
                                "(unit = top); fixture '" +
                                cfg.quantaleId + "' is not integral");
}

void suiteDense(SuiteReport& rep, const GenConfig& cfg) {
    requireIntegralSuite(cfg, "dense");
    runInstances(rep, cfg, [&cfg](Rng& rng, const std::string& inst, std::vector<Line>& ls) {
        LOrderedSet P = genAlgebraicDcpo(cfg, rng);
        const std::string ser = toJson(P).dump();
        ClosureSpace S = closureOfDomain(P);
        std::vector<std::size_t> Y = compactElements(P);
        put(ls, "dense-subspace", inst, isDenseSubspace(S, Y), ser);

        ClosureSpace SY = restrictToSubspace(S, Y, S.id + "|K");
        DirClosedFamily FS = dirClosedSets(S), FSY = dirClosedSets(SY);
        CheckResult iso = CheckResult::ok();
        try {
            std::vector<std::size_t> f;
            for (const auto& U : FS.carrier) {
                LSubset r{SY.id, std::vector<Elem>(Y.size())};
                for (std::size_t j = 0; j < Y.size(); ++j) r.v[j] = U(Y[j]);
                f.push_back(FSY.indexOfSubset(r));
            }
            if (FS.carrier.size() != FSY.carrier.size() || !checkIsoVia(f, FS.order, FSY.order))
                iso = CheckResult::fail("restriction-iso",
                                        "E -> E|_K is not a subdeg-preserving bijection");
        } catch (const StructuralError& e) {
            iso = CheckResult::fail("restriction-iso", e.what());
        }
        put(ls, "restriction-iso", inst, iso, ser);
    });
}

void suiteRep3(SuiteReport& rep, const GenConfig& cfg) {
    requireIntegralSuite(cfg, "rep3");
    runInstances(rep, cfg, [&cfg](Rng& rng, const std::string& inst, std::vector<Line>& ls) {
        LOrderedSet P = genAlgebraicDcpo(cfg, rng);
        const std::string ser = toJson(P).dump();
        ClosureSpace S = closureOfDomain(P);
        std::vector<std::size_t> Y = compactElements(P);
        ClosureSpace SY = restrictToSubspace(S, Y, S.id + "|K");
        put(ls, "subspace-lclosure", inst, isLClosureSpace(SY), ser);
        put(ls, "subspace-dense", inst, isDenseSubspace(S, Y), ser);
        put(ls, "closure-algebraic", inst, isAlgebraic(dirClosedSets(S).order), ser);
    });
}

void suiteEquiv(SuiteReport& rep, const GenConfig& cfg) {
    runInstances(rep, cfg, [&cfg](Rng& rng, const std::string& inst, std::vector<Line>& ls) {
        ClosureSpace X = genInterpolativeSpace(cfg, rng);
        ClosureSpace Y = genInterpolativeSpace(cfg, rng);
        const std::string ser = toJson(X).dump() + " / " + toJson(Y).dump();
        EquivalenceReport er = checkEquivalenceSuite(X, Y, cfg.budget);
        for (const auto& l : er.lines) {
            std::string w = l.detail;
            if (l.status == "fail" && !ser.empty()) w += " | instance: " + ser;
            ls.push_back({l.property, inst, l.status, std::move(w)});
        }

        auto maybe = genApproxRelation(cfg, rng, X, Y);
        if (!maybe) {
            ls.push_back({"relation-sampling", inst, "sampled",
                          "no Scott continuous map found within the budget"});
            return;
        }
        const ApproxRelation& R = *maybe;
        put(ls, "relation-valid", inst, validateApproximable(R), ser);

        DirClosedFamily cx = dirClosedSets(X), cy = dirClosedSets(Y);
        CheckResult closed = CheckResult::ok();
        for (const auto& U : cx.carrier) {
            LSubset V = applyToClosed(R, U);
            if (auto r = isDirectedClosed(Y, V); !r) {
                closed = CheckResult::fail("transpose-closed", renderSubset(X, U));
                break;
            }
        }
        put(ls, "transpose-preserves-closed", inst, closed, ser);

        bool idLaws = composeRelations(identityRelation(Y), R).sameTable(R) &&
                      composeRelations(R, identityRelation(X)).sameTable(R);
        put(ls, "identity-laws", inst,
            idLaws ? CheckResult::ok() : CheckResult::fail("identity-laws", "id composition"),
            ser);

        auto back = genApproxRelation(cfg, rng, Y, X);
        if (back) {
            CheckResult comp = CheckResult::ok();
            try {
                comp = validateApproximable(composeRelations(*back, R));
            } catch (const std::exception& e) {
                comp = CheckResult::fail("composition-closure", e.what());
            }
            put(ls, "composition-closure", inst, comp, ser);
        } else {
            ls.push_back({"composition-closure", inst, "sampled",
                          "no reverse relation found within the budget"});
        }

        auto psi = psiOf(R, cx, cy);
        bool rt = thetaOf(psi, X, Y, cx, cy).sameTable(R);
        put(ls, "relation-roundtrip", inst,
            rt ? CheckResult::ok() : CheckResult::fail("theta-psi-theta", "table changed"), ser);
    });
}

}  // namespace

std::vector<std::string> suiteIds() {
    return {"core", "oracle", "waybelow", "rep1", "rep2", "rep3", "dense", "equiv"};
}

SuiteReport runSuite(const std::string& name, const GenConfig& cfg) {
    SuiteReport rep;
    rep.suite = name;
    rep.cfg = cfg;
    if (name == "core")
        suiteCore(rep, cfg);
    else if (name == "oracle")
        suiteOracle(rep, cfg);
    else if (name == "waybelow")
        suiteWayBelow(rep, cfg);
    else if (name == "rep1")
        suiteRep1(rep, cfg);
    else if (name == "rep2")
        suiteRep2(rep, cfg);
    else if (name == "rep3")
        suiteRep3(rep, cfg);
    else if (name == "dense")
        suiteDense(rep, cfg);
    else if (name == "equiv")
        suiteEquiv(rep, cfg);
    else
        throw StructuralError("unknown suite '" + name + "'; known suites: core, oracle, "
                              "waybelow, rep1, rep2, rep3, dense, equiv");
    return rep;
}

std::string SuiteReport::toJson() const {
    nlohmann::json j;
    j["kind"] = "suite-report";
    j["suite"] = suite;
    j["config"] = {{"seed", cfg.seed},          {"quantale", cfg.quantaleId},
                   {"min_points", cfg.minPoints}, {"max_points", cfg.maxPoints},
                   {"instances", cfg.instances},  {"budget", cfg.budget}};
    j["result"] = !allPass() ? "fail" : (anySampled() ? "sampled" : "pass");
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& l : lines)
        arr.push_back({{"property", l.property},
                       {"instance", l.instance},
                       {"status", l.status},
                       {"witness", l.witness}});
    j["lines"] = arr;
    return j.dump(2) + "\n";
}

std::string SuiteReport::toText() const {
    std::ostringstream os;
    os << "suite " << suite << " (quantale " << cfg.quantaleId << ", seed " << cfg.seed
       << ", instances " << cfg.instances << ")\n";
    for (const auto& l : lines) {
        os << "  [" << l.status << "] " << l.instance << " " << l.property;
        if (!l.witness.empty()) os << " -- " << l.witness;
        os << '\n';
    }
    os << "result: " << (!allPass() ? "fail" : (anySampled() ? "sampled" : "pass")) << '\n';
    os << "timings:\n";
    for (const auto& [phase, secs] : phaseSeconds) {
        os << "  " << phase << ": ";
        os.setf(std::ios::fixed);
        os.precision(3);
        os << secs << " s\n";
    }
    return os.str();
}

}  // namespace qdom
