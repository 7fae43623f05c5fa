#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qdom/quantale.hpp"

namespace qdom {

/// Total map from a named finite carrier into L. The carrier id exists so
/// that subsets over different carriers never get compared silently; reports
/// render subsets identically regardless of the carrier tag.
struct LSubset {
    std::string carrier;
    std::vector<Elem> v;

    std::size_t size() const { return v.size(); }
    Elem operator()(std::size_t i) const { return v[i]; }
    bool operator==(const LSubset& o) const { return carrier == o.carrier && v == o.v; }
};

void requireSameCarrier(const LSubset& a, const LSubset& b);

/// Carrier plus L-valued order e. `e` is a dense row-major table.
struct LOrderedSet {
    std::string id;
    std::vector<std::string> points;
    QuantalePtr L;
    std::vector<Elem> e;

    std::size_t size() const { return points.size(); }
    Elem ord(std::size_t x, std::size_t y) const { return e[x * points.size() + y]; }
    int indexOf(const std::string& label) const;  // throws StructuralError

    LSubset constant(Elem a) const { return {id, std::vector<Elem>(size(), a)}; }
    LSubset charAt(std::size_t x) const;  // u_x

    /// Reflexivity, transitivity, antisymmetry.
    ValidationReport validate() const;

    std::uint64_t structuralHash() const;
};

/// sub(A, B) = meet_x A(x) -> B(x), the inclusion L-order.
Elem subdeg(const FiniteQuantale& L, const LSubset& A, const LSubset& B);

LSubset upSet(const LOrderedSet& P, std::size_t x);
LSubset downSet(const LOrderedSet& P, std::size_t x);

CheckResult isLowerSet(const LOrderedSet& P, const LSubset& S);
CheckResult isUpperSet(const LOrderedSet& P, const LSubset& S);

/// (D1) join_x D(x) >= u and (D2) the tensor upper-bound condition.
CheckResult isDirected(const LOrderedSet& P, const LSubset& D);
CheckResult isIdeal(const LOrderedSet& P, const LSubset& I);

/// The unique point x0 with e(x0, y) = sub(A, downSet(y)) for all y, if any.
/// Absence is a value, not an error: L-dcpo recognition needs it as data.
std::optional<std::size_t> supremum(const LOrderedSet& P, const LSubset& A);
std::optional<std::size_t> infimum(const LOrderedSet& P, const LSubset& A);

/// Deterministic lexicographic stream over L^carrier. The value vector is
/// ordered with index 0 most significant.
class LSubsetEnum {
public:
    LSubsetEnum(std::string carrierId, std::size_t carrierSize, const FiniteQuantale& L);
    std::size_t count() const { return total_; }
    LSubset at(std::size_t rank) const;
    /// Rank of a value vector in the stream.
    std::size_t rankOf(const LSubset& A) const;

private:
    std::string carrier_;
    std::size_t n_, m_, total_;
};

LSubsetEnum enumerateLSubsets(const LOrderedSet& P);

/// Every directed L-subset has a supremum. Failure carries a directed
/// witness without one.
CheckResult isLDcpo(const LOrderedSet& P);

/// f^->(A)(y) = join over f(x)=y of A(x).
LSubset zadehForward(const std::vector<std::size_t>& f, const LSubset& A,
                     const std::string& targetCarrier, std::size_t targetSize,
                     const FiniteQuantale& L);

/// f preserves the L-order and commutes with directed suprema.
/// Requires both sides to be L-dcpos.
CheckResult isScottContinuous(const std::vector<std::size_t>& f, const LOrderedSet& P,
                              const LOrderedSet& Q);

bool checkIsoVia(const std::vector<std::size_t>& f, const LOrderedSet& P, const LOrderedSet& Q);
std::optional<std::vector<std::size_t>> findLOrderIso(const LOrderedSet& P, const LOrderedSet& Q);

std::string renderSubset(const LOrderedSet& P, const LSubset& A);

}  // namespace qdom
