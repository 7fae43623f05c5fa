#include "qdom/order.hpp"

#include <algorithm>
#include <numeric>

#include "qdom/scan.hpp"

namespace qdom {

void requireSameCarrier(const LSubset& a, const LSubset& b) {
    if (a.carrier != b.carrier || a.v.size() != b.v.size())
        throw StructuralError("carrier mismatch: '" + a.carrier + "' vs '" + b.carrier + "'");
}

int LOrderedSet::indexOf(const std::string& label) const {
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i] == label) return static_cast<int>(i);
    throw StructuralError("unknown point '" + label + "' in carrier '" + id + "'");
}

LSubset LOrderedSet::charAt(std::size_t x) const {
    LSubset s = constant(L->bottom());
    s.v[x] = L->unit();
    return s;
}

ValidationReport LOrderedSet::validate() const {
    ValidationReport rep;
    const std::size_t n = size();
    const auto& q = *L;
    {
        CheckResult r = CheckResult::ok();
        for (std::size_t x = 0; x < n && r.pass; ++x)
            if (!q.leq(q.unit(), ord(x, x)))
                r = CheckResult::fail("e-reflexive", points[x]);
        rep.add("e-reflexive", r);
    }
    {
        CheckResult r = CheckResult::ok();
        for (std::size_t x = 0; x < n && r.pass; ++x)
            for (std::size_t y = 0; y < n && r.pass; ++y)
                for (std::size_t z = 0; z < n && r.pass; ++z)
                    if (!q.leq(q.tensor(ord(x, y), ord(y, z)), ord(x, z)))
                        r = CheckResult::fail("e-transitive", "(" + points[x] + ", " + points[y] +
                                                                  ", " + points[z] + ")");
        rep.add("e-transitive", r);
    }
    {
        CheckResult r = CheckResult::ok();
        for (std::size_t x = 0; x < n && r.pass; ++x)
            for (std::size_t y = 0; y < n && r.pass; ++y)
                if (x != y && q.leq(q.unit(), ord(x, y)) && q.leq(q.unit(), ord(y, x)))
                    r = CheckResult::fail("e-antisymmetric", "(" + points[x] + ", " + points[y] + ")");
        rep.add("e-antisymmetric", r);
    }
    return rep;
}

std::uint64_t LOrderedSet::structuralHash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    for (const auto& p : points)
        for (char c : p) mix(static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
    for (Elem d : e) mix(static_cast<std::uint64_t>(d) + 11u);
    mix(L->structuralHash());
    return h;
}

Elem subdeg(const FiniteQuantale& L, const LSubset& A, const LSubset& B) {
    requireSameCarrier(A, B);
    Elem acc = L.top();
    for (std::size_t x = 0; x < A.size(); ++x) acc = L.meet(acc, L.residuate(A(x), B(x)));
    return acc;
}

LSubset upSet(const LOrderedSet& P, std::size_t x) {
    if (x >= P.size()) throw StructuralError("unknown point index in upSet");
    LSubset s{P.id, std::vector<Elem>(P.size())};
    for (std::size_t y = 0; y < P.size(); ++y) s.v[y] = P.ord(x, y);
    return s;
}

LSubset downSet(const LOrderedSet& P, std::size_t x) {
    if (x >= P.size()) throw StructuralError("unknown point index in downSet");
    LSubset s{P.id, std::vector<Elem>(P.size())};
    for (std::size_t y = 0; y < P.size(); ++y) s.v[y] = P.ord(y, x);
    return s;
}

CheckResult isLowerSet(const LOrderedSet& P, const LSubset& S) {
    if (S.carrier != P.id || S.size() != P.size())
        throw StructuralError("subset carrier does not match L-ordered set '" + P.id + "'");
    const auto& q = *P.L;
    for (std::size_t x = 0; x < P.size(); ++x)
        for (std::size_t y = 0; y < P.size(); ++y)
            if (!q.leq(q.tensor(S(x), P.ord(y, x)), S(y)))
                return CheckResult::fail("lower-set", "(" + P.points[y] + ", " + P.points[x] + ")");
    return CheckResult::ok();
}

CheckResult isUpperSet(const LOrderedSet& P, const LSubset& S) {
    if (S.carrier != P.id || S.size() != P.size())
        throw StructuralError("subset carrier does not match L-ordered set '" + P.id + "'");
    const auto& q = *P.L;
    for (std::size_t x = 0; x < P.size(); ++x)
        for (std::size_t y = 0; y < P.size(); ++y)
            if (!q.leq(q.tensor(S(x), P.ord(x, y)), S(y)))
                return CheckResult::fail("upper-set", "(" + P.points[x] + ", " + P.points[y] + ")");
    return CheckResult::ok();
}

CheckResult isDirected(const LOrderedSet& P, const LSubset& D) {
    if (D.carrier != P.id || D.size() != P.size())
        throw StructuralError("subset carrier does not match L-ordered set '" + P.id + "'");
    const auto& q = *P.L;
    const std::size_t n = P.size();
    std::vector<Elem> all(D.v.begin(), D.v.end());
    if (!q.leq(q.unit(), q.joinOfSet(all)))
        return CheckResult::fail("D1", "join of degrees below u");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::vector<Elem> terms;
            for (std::size_t z = 0; z < n; ++z)
                terms.push_back(q.tensor(D(z), q.tensor(P.ord(x, z), P.ord(y, z))));
            if (!q.leq(q.tensor(D(x), D(y)), q.joinOfSet(terms)))
                return CheckResult::fail("D2", "(" + P.points[x] + ", " + P.points[y] + ")");
        }
    return CheckResult::ok();
}

CheckResult isIdeal(const LOrderedSet& P, const LSubset& I) {
    if (auto r = isDirected(P, I); !r) return r;
    return isLowerSet(P, I);
}

std::optional<std::size_t> supremum(const LOrderedSet& P, const LSubset& A) {
    if (A.carrier != P.id || A.size() != P.size())
        throw StructuralError("subset carrier does not match L-ordered set '" + P.id + "'");
    const auto& q = *P.L;
    for (std::size_t x0 = 0; x0 < P.size(); ++x0) {
        bool good = true;
        for (std::size_t y = 0; y < P.size() && good; ++y)
            if (P.ord(x0, y) != subdeg(q, A, downSet(P, y))) good = false;
        if (good) return x0;
    }
    return std::nullopt;
}

std::optional<std::size_t> infimum(const LOrderedSet& P, const LSubset& A) {
    if (A.carrier != P.id || A.size() != P.size())
        throw StructuralError("subset carrier does not match L-ordered set '" + P.id + "'");
    const auto& q = *P.L;
    for (std::size_t x0 = 0; x0 < P.size(); ++x0) {
        bool good = true;
        for (std::size_t y = 0; y < P.size() && good; ++y)
            if (P.ord(y, x0) != subdeg(q, A, upSet(P, y))) good = false;
        if (good) return x0;
    }
    return std::nullopt;
}

LSubsetEnum::LSubsetEnum(std::string carrierId, std::size_t carrierSize, const FiniteQuantale& L)
    : carrier_(std::move(carrierId)), n_(carrierSize), m_(L.size()) {
    // overflow-safe m^n against the cap
    std::size_t total = 1;
    for (std::size_t i = 0; i < n_; ++i) {
        if (total > caps().enumeration / m_ + 1)
            throw CapExceeded("L-subset enumeration over carrier '" + carrier_ + "'",
                              static_cast<std::size_t>(-1), caps().enumeration);
        total *= m_;
    }
    if (total > caps().enumeration)
        throw CapExceeded("L-subset enumeration over carrier '" + carrier_ + "'", total,
                          caps().enumeration);
    total_ = total;
}

LSubset LSubsetEnum::at(std::size_t rank) const {
    LSubset s{carrier_, std::vector<Elem>(n_)};
    for (std::size_t i = n_; i-- > 0;) {
        s.v[i] = static_cast<Elem>(rank % m_);
        rank /= m_;
    }
    return s;
}

std::size_t LSubsetEnum::rankOf(const LSubset& A) const {
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n_; ++i) rank = rank * m_ + static_cast<std::size_t>(A(i));
    return rank;
}

LSubsetEnum enumerateLSubsets(const LOrderedSet& P) { return {P.id, P.size(), *P.L}; }

CheckResult isLDcpo(const LOrderedSet& P) {
    auto en = enumerateLSubsets(P);
    auto bad = find_first(en.count(), [&](std::size_t r) {
        LSubset D = en.at(r);
        return isDirected(P, D).pass && !supremum(P, D).has_value();
    });
    if (bad == scan_npos) return CheckResult::ok();
    return CheckResult::fail("L-dcpo", "directed subset without supremum: " +
                                           renderSubset(P, en.at(bad)));
}

LSubset zadehForward(const std::vector<std::size_t>& f, const LSubset& A,
                     const std::string& targetCarrier, std::size_t targetSize,
                     const FiniteQuantale& L) {
    if (f.size() != A.size()) throw StructuralError("point map is not total over the source");
    LSubset out{targetCarrier, std::vector<Elem>(targetSize, L.bottom())};
    for (std::size_t x = 0; x < f.size(); ++x) {
        if (f[x] >= targetSize) throw StructuralError("point map image out of target carrier");
        out.v[f[x]] = L.join(out.v[f[x]], A(x));
    }
    return out;
}

CheckResult isScottContinuous(const std::vector<std::size_t>& f, const LOrderedSet& P,
                              const LOrderedSet& Q) {
    if (P.L->structuralHash() != Q.L->structuralHash())
        throw PreconditionError("Scott continuity requires a shared quantale");
    if (f.size() != P.size()) throw StructuralError("point map is not total over the source");
    if (auto r = isLDcpo(P); !r) throw PreconditionError("source is not an L-dcpo: " + r.witness);
    if (auto r = isLDcpo(Q); !r) throw PreconditionError("target is not an L-dcpo: " + r.witness);

    const auto& q = *P.L;
    for (std::size_t x = 0; x < P.size(); ++x)
        for (std::size_t y = 0; y < P.size(); ++y)
            if (!q.leq(P.ord(x, y), Q.ord(f[x], f[y])))
                return CheckResult::fail("order-preserving",
                                         "(" + P.points[x] + ", " + P.points[y] + ")");

    auto en = enumerateLSubsets(P);
    auto bad = find_first(en.count(), [&](std::size_t r) {
        LSubset D = en.at(r);
        if (!isDirected(P, D).pass) return false;
        auto s = supremum(P, D);
        if (!s) return true;  // cannot happen: P is an L-dcpo
        LSubset img = zadehForward(f, D, Q.id, Q.size(), q);
        auto si = supremum(Q, img);
        return !si || *si != f[*s];
    });
    if (bad == scan_npos) return CheckResult::ok();
    return CheckResult::fail("scott-continuity",
                             "directed witness " + renderSubset(P, en.at(bad)));
}

bool checkIsoVia(const std::vector<std::size_t>& f, const LOrderedSet& P, const LOrderedSet& Q) {
    if (f.size() != P.size() || P.size() != Q.size()) return false;
    std::vector<bool> hit(Q.size(), false);
    for (std::size_t x = 0; x < f.size(); ++x) {
        if (f[x] >= Q.size() || hit[f[x]]) return false;
        hit[f[x]] = true;
    }
    for (std::size_t x = 0; x < P.size(); ++x)
        for (std::size_t y = 0; y < P.size(); ++y)
            if (P.ord(x, y) != Q.ord(f[x], f[y])) return false;
    return true;
}

std::optional<std::vector<std::size_t>> findLOrderIso(const LOrderedSet& P, const LOrderedSet& Q) {
    if (P.size() != Q.size()) return std::nullopt;
    if (static_cast<int>(P.size()) > caps().iso_carrier)
        throw CapExceeded("bijection search", P.size(),
                          static_cast<std::size_t>(caps().iso_carrier));
    std::vector<std::size_t> perm(P.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (checkIsoVia(perm, P, Q)) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::string renderSubset(const LOrderedSet& P, const LSubset& A) {
    std::string s = "{";
    for (std::size_t i = 0; i < P.size(); ++i) {
        if (i) s += ", ";
        s += P.points[i] + ": " + P.L->label(A(i));
    }
    return s + "}";
}

}  // namespace qdom
