#pragma once

#include "qdom/closure.hpp"

namespace qdom {

/// L-valued relation between two interpolative generalized L-closure spaces,
/// stored as a dense source x target table.
struct ApproxRelation {
    ClosureSpace source;
    ClosureSpace target;
    std::vector<Elem> theta;  // row-major |X| x |Y|

    Elem at(std::size_t x, std::size_t y) const { return theta[x * target.size() + y]; }
    Elem& at(std::size_t x, std::size_t y) { return theta[x * target.size() + y]; }
    bool sameTable(const ApproxRelation& o) const { return theta == o.theta; }
};

/// AP1-AP5 with witnesses, plus the derived triple equalities
/// Theta(x,y) = join <u_x>(x') (x) Theta(x',y) = join Theta(x,y') (x) <u_y'>(y).
CheckResult validateApproximable(const ApproxRelation& R);

/// id_X(x, y) = <u_x>(y).
ApproxRelation identityRelation(const ClosureSpace& S);

/// (Upsilon o Theta)(x, z) = join_y Theta(x, y) (x) Upsilon(y, z).
ApproxRelation composeRelations(const ApproxRelation& upsilon, const ApproxRelation& theta);

/// Theta~(U)(y) = join_x U(x) (x) Theta(x, y). Refuses a U that is not
/// directed closed in the source.
LSubset applyToClosed(const ApproxRelation& theta, const LSubset& U);

/// The transpose U |-> Theta~(U) as an explicit map over materialized
/// directed-closed carriers; verified Scott continuous.
std::vector<std::size_t> psiOf(const ApproxRelation& theta, const DirClosedFamily& cx,
                               const DirClosedFamily& cy);

/// Theta_psi(x, y) = psi(<u_x>)(y). Refuses a psi that is not Scott
/// continuous between the materialized carriers.
ApproxRelation thetaOf(const std::vector<std::size_t>& psi, const ClosureSpace& X,
                       const ClosureSpace& Y, const DirClosedFamily& cx,
                       const DirClosedFamily& cy);

/// All Scott continuous maps cx -> cy, as index maps, when the candidate
/// count stays within `budget`. Throws CapExceeded otherwise.
std::vector<std::vector<std::size_t>> enumerateScottMaps(const DirClosedFamily& cx,
                                                         const DirClosedFamily& cy,
                                                         std::size_t budget);

/// Executable functor-law and equivalence evidence between two spaces:
/// faithfulness, fullness (exhaustive within budget, round-trip evidence
/// otherwise), identity/composition laws, and the bijection between
/// approximable relations and Scott maps when the relation table space is
/// exhaustively enumerable.
struct EquivalenceReport {
    struct Line {
        std::string property;
        std::string status;  // "pass", "fail", "sampled"
        std::string detail;
    };
    std::vector<Line> lines;
    bool allPassOrSampled() const {
        for (const auto& l : lines)
            if (l.status == "fail") return false;
        return true;
    }
    bool anySampled() const {
        for (const auto& l : lines)
            if (l.status == "sampled") return true;
        return false;
    }
};

EquivalenceReport checkEquivalenceSuite(const ClosureSpace& X, const ClosureSpace& Y,
                                        std::size_t budget);

}  // namespace qdom
