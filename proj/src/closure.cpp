#include "qdom/closure.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "qdom/scan.hpp"

namespace qdom {

namespace {

LSubsetEnum makeEnum(const ClosureSpace& S) { return {S.id, S.size(), *S.L}; }

std::uint64_t spaceHash(const ClosureSpace& S) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    for (const auto& p : S.points)
        for (char c : p) mix(static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
    mix(S.L->structuralHash());
    if (const auto* pg = std::get_if<ClosureSpace::PointGenerated>(&S.op)) {
        mix(1);
        for (const auto& c : pg->closures)
            for (Elem d : c.v) mix(static_cast<std::uint64_t>(d) + 11u);
    } else {
        mix(2);
        for (const auto& row : std::get<ClosureSpace::TableBacked>(S.op).rows)
            for (Elem d : row.v) mix(static_cast<std::uint64_t>(d) + 11u);
    }
    return h;
}

// validation results memoized per structural fingerprint; spaces are
// immutable after construction
CheckResult memoize(const ClosureSpace& S, int kind,
                    const std::function<CheckResult(const ClosureSpace&)>& compute) {
    static std::map<std::pair<std::uint64_t, int>, CheckResult> cache;
    static std::mutex mu;
    const auto key = std::make_pair(spaceHash(S), kind);
    {
        std::lock_guard<std::mutex> lk(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    CheckResult r = compute(S);
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(key, r);
    return r;
}

void requireGeneralized(const ClosureSpace& S, const char* op) {
    if (auto r = validateGeneralized(S); !r)
        throw PreconditionError(std::string(op) + " requires a generalized L-closure space; " +
                                r.axiom + " fails at " + r.witness);
}

void requireInterpolative(const ClosureSpace& S, const char* op) {
    if (auto r = isInterpolative(S); !r)
        throw PreconditionError(std::string(op) + " requires an interpolative space; " + r.axiom +
                                " fails at " + r.witness);
}

}  // namespace

int ClosureSpace::indexOf(const std::string& label) const {
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i] == label) return static_cast<int>(i);
    throw StructuralError("unknown point '" + label + "' in closure space '" + id + "'");
}

LSubset ClosureSpace::charAt(std::size_t x) const {
    LSubset s = constant(L->bottom());
    s.v[x] = L->unit();
    return s;
}

LSubset ClosureSpace::close(const LSubset& A) const {
    if (A.carrier != id || A.size() != size())
        throw StructuralError("subset carrier does not match closure space '" + id + "'");
    if (const auto* pg = std::get_if<PointGenerated>(&op)) {
        LSubset out = constant(L->bottom());
        for (std::size_t x = 0; x < size(); ++x)
            for (std::size_t y = 0; y < size(); ++y)
                out.v[y] = L->join(out.v[y], L->tensor(A(x), pg->closures[x](y)));
        return out;
    }
    const auto& tb = std::get<TableBacked>(op);
    LSubsetEnum en{id, size(), *L};
    std::size_t r = en.rankOf(A);
    if (r >= tb.rows.size() || tb.rows[r].v.empty())
        throw StructuralError("table-backed operator is missing the row for the given subset");
    return tb.rows[r];
}

LSubset ClosureSpace::pointClosureOf(std::size_t x) const {
    if (x >= size()) throw StructuralError("unknown point index in pointClosureOf");
    if (const auto* pg = std::get_if<PointGenerated>(&op)) {
        // <u_x> = u (x) C_x = C_x
        return pg->closures[x];
    }
    return close(charAt(x));
}

namespace {
CheckResult validateGeneralizedUncached(const ClosureSpace& S);
CheckResult isInterpolativeUncached(const ClosureSpace& S);
}  // namespace

CheckResult validateGeneralized(const ClosureSpace& S) {
    return memoize(S, 0, validateGeneralizedUncached);
}

CheckResult isInterpolative(const ClosureSpace& S) {
    return memoize(S, 1, isInterpolativeUncached);
}

namespace {

CheckResult validateGeneralizedUncached(const ClosureSpace& S) {
    const auto& q = *S.L;
    const std::size_t n = S.size();
    if (const auto* pg = std::get_if<ClosureSpace::PointGenerated>(&S.op)) {
        for (std::size_t x = 0; x < n; ++x) {
            if (pg->closures[x].carrier != S.id || pg->closures[x].size() != n)
                throw StructuralError("point closure of " + S.points[x] +
                                      " is not over the space carrier");
        }
        // GC1 holds structurally for the evaluation semantics; GC2 reduces to
        // join_y C_x(y) (x) C_y(z) <= C_x(z).
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t z = 0; z < n; ++z) {
                std::vector<Elem> terms;
                for (std::size_t y = 0; y < n; ++y)
                    terms.push_back(q.tensor(pg->closures[x](y), pg->closures[y](z)));
                if (!q.leq(q.joinOfSet(terms), pg->closures[x](z)))
                    return CheckResult::fail("GC2",
                                             "(" + S.points[x] + ", " + S.points[z] + ")");
            }
        return CheckResult::ok();
    }
    LSubsetEnum en = makeEnum(S);
    const std::size_t total = en.count();
    if (total > caps().pair_enumeration)
        throw CapExceeded("GC1 pair scan over L^X", total, caps().pair_enumeration);
    // GC2
    {
        auto bad = find_first(total, [&](std::size_t r) {
            LSubset A = en.at(r);
            LSubset cA = S.close(A);
            LSubset ccA = S.close(cA);
            for (std::size_t y = 0; y < n; ++y)
                if (!q.leq(ccA(y), cA(y))) return true;
            return false;
        });
        if (bad != scan_npos)
            return CheckResult::fail("GC2", renderSubset(S, en.at(bad)));
    }
    // GC1 over all pairs
    {
        auto bad = find_first(total * total, [&](std::size_t rr) {
            LSubset A = en.at(rr / total);
            LSubset B = en.at(rr % total);
            return !q.leq(subdeg(q, A, B), subdeg(q, S.close(A), S.close(B)));
        });
        if (bad != scan_npos)
            return CheckResult::fail("GC1", renderSubset(S, en.at(bad / total)) + " vs " +
                                                renderSubset(S, en.at(bad % total)));
    }
    return CheckResult::ok();
}

CheckResult isInterpolativeUncached(const ClosureSpace& S) {
    requireGeneralized(S, "isInterpolative");
    const auto& q = *S.L;
    const std::size_t n = S.size();
    std::vector<LSubset> C;
    for (std::size_t x = 0; x < n; ++x) C.push_back(S.pointClosureOf(x));

    for (std::size_t x = 0; x < n; ++x) {
        std::vector<Elem> all(C[x].v.begin(), C[x].v.end());
        if (!q.leq(q.unit(), q.joinOfSet(all)))
            return CheckResult::fail("IT1", S.points[x]);
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::vector<Elem> terms;
            for (std::size_t t = 0; t < n; ++t) terms.push_back(q.tensor(C[x](t), C[t](y)));
            if (!q.leq(C[x](y), q.joinOfSet(terms)))
                return CheckResult::fail("IT2", "(" + S.points[x] + ", " + S.points[y] + ")");
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                std::vector<Elem> terms;
                for (std::size_t t = 0; t < n; ++t)
                    terms.push_back(q.tensor(C[x](t), q.tensor(C[t](a), C[t](b))));
                if (!q.leq(q.tensor(C[x](a), C[x](b)), q.joinOfSet(terms)))
                    return CheckResult::fail("IT3", "(" + S.points[x] + ", " + S.points[a] +
                                                        ", " + S.points[b] + ")");
            }
    return CheckResult::ok();
}

}  // namespace

CheckResult isLClosureSpace(const ClosureSpace& S) {
    requireGeneralized(S, "isLClosureSpace");
    const auto& q = *S.L;
    if (S.pointGenerated()) {
        // point criterion: <u_x>(x) >= u
        for (std::size_t x = 0; x < S.size(); ++x)
            if (!q.leq(q.unit(), S.pointClosureOf(x).v[x]))
                return CheckResult::fail("LC1", "point criterion fails at " + S.points[x]);
        return CheckResult::ok();
    }
    LSubsetEnum en = makeEnum(S);
    auto bad = find_first(en.count(), [&](std::size_t r) {
        LSubset A = en.at(r);
        LSubset cA = S.close(A);
        for (std::size_t y = 0; y < S.size(); ++y)
            if (!q.leq(A(y), cA(y))) return true;
        return false;
    });
    if (bad != scan_npos) return CheckResult::fail("LC1", renderSubset(S, en.at(bad)));
    auto bad3 = find_first(en.count(), [&](std::size_t r) {
        LSubset cA = S.close(en.at(r));
        return !(S.close(cA) == cA);
    });
    if (bad3 != scan_npos) return CheckResult::fail("LC3", renderSubset(S, en.at(bad3)));
    return CheckResult::ok();
}

PointClosureFamily pointClosures(const ClosureSpace& S) {
    PointClosureFamily fam;
    fam.index.resize(S.size());
    for (std::size_t x = 0; x < S.size(); ++x) {
        LSubset c = S.pointClosureOf(x);
        auto it = std::find(fam.family.begin(), fam.family.end(), c);
        if (it == fam.family.end()) {
            fam.index[x] = fam.family.size();
            fam.family.push_back(std::move(c));
        } else {
            fam.index[x] = static_cast<std::size_t>(it - fam.family.begin());
        }
    }
    return fam;
}

CheckResult isDirectedClosed(const ClosureSpace& S, const LSubset& U) {
    requireInterpolative(S, "isDirectedClosed");
    if (U.carrier != S.id || U.size() != S.size())
        throw StructuralError("subset carrier does not match closure space '" + S.id + "'");
    const auto& q = *S.L;
    const std::size_t n = S.size();
    std::vector<LSubset> C;
    for (std::size_t x = 0; x < n; ++x) C.push_back(S.pointClosureOf(x));

    std::vector<Elem> all(U.v.begin(), U.v.end());
    if (!q.leq(q.unit(), q.joinOfSet(all)))
        return CheckResult::fail("DC1", "join of degrees below u");
    for (std::size_t x = 0; x < n; ++x)
        if (!q.leq(U(x), subdeg(q, C[x], U)))
            return CheckResult::fail("DC2", S.points[x]);
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<Elem> terms;
        for (std::size_t y = 0; y < n; ++y) terms.push_back(q.tensor(U(y), C[y](x)));
        if (!q.leq(U(x), q.joinOfSet(terms))) return CheckResult::fail("DC3", S.points[x]);
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::vector<Elem> terms;
            for (std::size_t z = 0; z < n; ++z)
                terms.push_back(q.tensor(U(z), q.tensor(C[z](x), C[z](y))));
            if (!q.leq(q.tensor(U(x), U(y)), q.joinOfSet(terms)))
                return CheckResult::fail("DC4", "(" + S.points[x] + ", " + S.points[y] + ")");
        }
    return CheckResult::ok();
}

bool checkFixedPointCharacterization(const ClosureSpace& S, const LSubset& U) {
    requireInterpolative(S, "checkFixedPointCharacterization");
    const auto& q = *S.L;
    LSubset rhs = S.constant(q.bottom());
    for (std::size_t x = 0; x < S.size(); ++x) {
        LSubset c = S.pointClosureOf(x);
        for (std::size_t y = 0; y < S.size(); ++y)
            rhs.v[y] = q.join(rhs.v[y], q.tensor(U(x), c(y)));
    }
    return rhs.v == U.v;
}

std::size_t DirClosedFamily::indexOfSubset(const LSubset& U) const {
    for (std::size_t i = 0; i < carrier.size(); ++i)
        if (carrier[i].v == U.v) return i;
    throw StructuralError("subset is not a member of the directed-closed family");
}

DirClosedFamily dirClosedSets(const ClosureSpace& S) {
    requireInterpolative(S, "dirClosedSets");
    const auto& q = *S.L;
    LSubsetEnum en = makeEnum(S);
    auto ranks = filter_indices(en.count(), [&](std::size_t r) {
        return isDirectedClosed(S, en.at(r)).pass;
    });
    DirClosedFamily fam;
    for (std::size_t r : ranks) fam.carrier.push_back(en.at(r));
    // ranks are already lexicographic over value vectors
    fam.order.id = S.id + ".C";
    fam.order.L = S.L;
    for (const auto& U : fam.carrier) fam.order.points.push_back(renderSubset(S, U));
    const std::size_t m = fam.carrier.size();
    fam.order.e.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            LSubset a{S.id, fam.carrier[i].v}, b{S.id, fam.carrier[j].v};
            fam.order.e[i * m + j] = subdeg(q, a, b);
        }
    if (auto rep = fam.order.validate(); !rep.allPass())
        throw StructuralError("directed-closed family is not an L-ordered set: " +
                              rep.firstFailure()->law);
    fam.pointClosureIndex.resize(S.size());
    for (std::size_t x = 0; x < S.size(); ++x)
        fam.pointClosureIndex[x] = fam.indexOfSubset(S.pointClosureOf(x));
    return fam;
}

ClosureSpace closureOfDomain(const LOrderedSet& P) {
    if (auto r = isContinuous(P); !r)
        throw PreconditionError("closureOfDomain requires a continuous L-dcpo; " + r.witness);
    ClosureSpace S;
    S.id = P.id + ".gcl";
    S.points = P.points;
    S.L = P.L;
    ClosureSpace::PointGenerated pg;
    for (std::size_t x = 0; x < P.size(); ++x) {
        LSubset wb = wayBelow(P, x);
        wb.carrier = S.id;
        pg.closures.push_back(std::move(wb));
    }
    S.op = std::move(pg);
    if (auto r = validateGeneralized(S); !r)
        throw StructuralError("closureOfDomain produced a non-generalized space: " + r.axiom);
    if (auto r = isInterpolative(S); !r)
        throw StructuralError("closureOfDomain produced a non-interpolative space: " + r.axiom);
    return S;
}

ClosureSpace closureOfAlgebraic(const LOrderedSet& P) {
    if (auto r = isAlgebraic(P); !r)
        throw PreconditionError("closureOfAlgebraic requires an algebraic L-dcpo; " + r.witness);
    auto ks = compactElements(P);
    ClosureSpace S;
    S.id = P.id + ".cl";
    S.L = P.L;
    for (std::size_t k : ks) S.points.push_back(P.points[k]);
    ClosureSpace::PointGenerated pg;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        LSubset c{S.id, std::vector<Elem>(ks.size())};
        for (std::size_t j = 0; j < ks.size(); ++j) c.v[j] = P.ord(ks[j], ks[i]);
        pg.closures.push_back(std::move(c));
    }
    S.op = std::move(pg);
    if (auto r = isLClosureSpace(S); !r)
        throw StructuralError("closureOfAlgebraic produced a non-L-closure space: " + r.axiom);
    return S;
}

ClosureSpace restrictToSubspace(const ClosureSpace& S, const std::vector<std::size_t>& Y,
                                const std::string& id) {
    if (Y.empty()) throw StructuralError("subspace restriction needs a nonempty point set");
    for (std::size_t y : Y)
        if (y >= S.size()) throw StructuralError("unknown point index in restrictToSubspace");
    ClosureSpace R;
    R.id = id;
    R.L = S.L;
    for (std::size_t y : Y) R.points.push_back(S.points[y]);
    if (const auto* pg = std::get_if<ClosureSpace::PointGenerated>(&S.op)) {
        ClosureSpace::PointGenerated rpg;
        for (std::size_t y : Y) {
            LSubset c{R.id, std::vector<Elem>(Y.size())};
            for (std::size_t j = 0; j < Y.size(); ++j) c.v[j] = pg->closures[y](Y[j]);
            rpg.closures.push_back(std::move(c));
        }
        R.op = std::move(rpg);
        return R;
    }
    // table-backed: close the zero-extension, then restrict
    LSubsetEnum ren{R.id, Y.size(), *S.L};
    ClosureSpace::TableBacked tb;
    tb.rows.resize(ren.count());
    for (std::size_t r = 0; r < ren.count(); ++r) {
        LSubset B = ren.at(r);
        LSubset ext = S.constant(S.L->bottom());
        for (std::size_t j = 0; j < Y.size(); ++j) ext.v[Y[j]] = B(j);
        LSubset cext = S.close(ext);
        LSubset row{R.id, std::vector<Elem>(Y.size())};
        for (std::size_t j = 0; j < Y.size(); ++j) row.v[j] = cext(Y[j]);
        tb.rows[r] = std::move(row);
    }
    R.op = std::move(tb);
    return R;
}

CheckResult isDenseSubspace(const ClosureSpace& S, const std::vector<std::size_t>& Y) {
    if (!S.L->isIntegral())
        throw PreconditionError(
            "dense subspaces are defined only over integral quantales; '" + S.L->name() +
            "' is not integral");
    requireInterpolative(S, "isDenseSubspace");
    const auto& q = *S.L;
    std::vector<LSubset> C;
    for (std::size_t x = 0; x < S.size(); ++x) C.push_back(S.pointClosureOf(x));
    for (std::size_t x = 0; x < S.size(); ++x)
        for (std::size_t a = 0; a < S.size(); ++a) {
            std::vector<Elem> terms;
            for (std::size_t y : Y) terms.push_back(q.tensor(C[x](y), C[y](a)));
            if (!q.leq(C[x](a), q.joinOfSet(terms)))
                return CheckResult::fail("DS", "(" + S.points[x] + ", " + S.points[a] + ")");
        }
    return CheckResult::ok();
}

std::string renderSubset(const ClosureSpace& S, const LSubset& A) {
    std::string s = "{";
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (i) s += ", ";
        s += S.points[i] + ": " + S.L->label(A(i));
    }
    return s + "}";
}

}  // namespace qdom
