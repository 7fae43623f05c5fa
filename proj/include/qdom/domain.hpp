#pragma once

#include "qdom/order.hpp"

namespace qdom {

/// Way-below subset of x, computed by the ideal-form meet over all ideals:
/// wb_x(y) = meet_{I ideal} e(x, sup I) -> I(y).
/// Requires P to be an L-dcpo; enumeration must stay within the cap.
LSubset wayBelow(const LOrderedSet& P, std::size_t x);

/// Second displayed form, quantifying over all directed L-subsets:
/// wb_x(y) = meet_D e(x, sup D) -> (join_d D(d) (x) e(y, d)).
/// Retained as an oracle for wayBelow.
LSubset wayBelowAlt(const LOrderedSet& P, std::size_t x);

/// For every x, the way-below subset is directed with supremum x.
CheckResult isContinuous(const LOrderedSet& P);

/// K(P): points whose way-below self-degree is >= u.
std::vector<std::size_t> compactElements(const LOrderedSet& P);

/// k(x)(y) = e(y, x) for y in K(P), 0 otherwise.
LSubset kSubset(const LOrderedSet& P, std::size_t x);

/// For every x, k(x) is directed with supremum x. Also cross-checks the
/// restriction form: k(x)|_K(P) is directed in (K(P), e).
CheckResult isAlgebraic(const LOrderedSet& P);

/// Sub-L-ordered set induced on a point subset (order table restricted).
LOrderedSet restrictOrder(const LOrderedSet& P, const std::vector<std::size_t>& pts,
                          const std::string& id);

/// Cached per-set analysis: way-below tables, compact points and the three
/// recognition flags, each with a witness when it fails.
struct DomainAnalysis {
    std::uint64_t subjectHash = 0;
    CheckResult dcpo;
    std::vector<LSubset> wayBelowTable;   // present only when dcpo passes
    std::vector<std::size_t> compactPoints;
    CheckResult continuous;               // meaningful only when dcpo passes
    CheckResult algebraic;
};

DomainAnalysis analyzeDomain(const LOrderedSet& P);

}  // namespace qdom
