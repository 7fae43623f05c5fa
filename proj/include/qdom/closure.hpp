#pragma once

#include <variant>

#include "qdom/domain.hpp"

namespace qdom {

/// Carrier plus closure operator on L-subsets.
///
/// Two operator representations:
///  - PointGenerated stores one subset C_x per point and evaluates
///    <A> = join_x A(x) (x) C_x. Covers every construction this library uses
///    with |X|-sized state; GC1 holds structurally.
///  - TableBacked stores <A> for every A in L^X, rank-indexed against the
///    canonical lexicographic enumeration. Fully general but cap-bound.
struct ClosureSpace {
    struct PointGenerated {
        std::vector<LSubset> closures;  // C_x per point
    };
    struct TableBacked {
        std::vector<LSubset> rows;  // rows[rank(A)] = <A>
    };

    std::string id;
    std::vector<std::string> points;
    QuantalePtr L;
    std::variant<PointGenerated, TableBacked> op;

    std::size_t size() const { return points.size(); }
    int indexOf(const std::string& label) const;
    bool pointGenerated() const { return std::holds_alternative<PointGenerated>(op); }

    LSubset constant(Elem a) const { return {id, std::vector<Elem>(size(), a)}; }
    LSubset charAt(std::size_t x) const;

    /// Evaluate <A>. Throws on carrier mismatch; a TableBacked row miss is a
    /// structural error (malformed table).
    LSubset close(const LSubset& A) const;

    /// <u_x>.
    LSubset pointClosureOf(std::size_t x) const;
};

/// GC1 + GC2. For PointGenerated GC1 is structural and GC2 reduces to the
/// pairwise C-transitivity join_y C_x(y) (x) C_y <= C_x; for TableBacked both
/// are scanned over L^X (pairs for GC1, pair-enumeration cap applies).
CheckResult validateGeneralized(const ClosureSpace& S);

/// IT1-IT3 over point closures (IT3 over triples). Requires a validated
/// generalized space.
CheckResult isInterpolative(const ClosureSpace& S);

/// L-closure space recognition: the point criterion <u_x>(x) >= u for
/// PointGenerated; LC1 and LC3 scanned directly for TableBacked.
CheckResult isLClosureSpace(const ClosureSpace& S);

/// Psi(X) = {<u_x>} deduplicated in canonical order. `index[x]` locates
/// <u_x> in the family.
struct PointClosureFamily {
    std::vector<LSubset> family;
    std::vector<std::size_t> index;
};
PointClosureFamily pointClosures(const ClosureSpace& S);

/// DC1-DC4.
CheckResult isDirectedClosed(const ClosureSpace& S, const LSubset& U);

/// U = join_x U(x) (x) <u_x>, pointwise.
bool checkFixedPointCharacterization(const ClosureSpace& S, const LSubset& U);

/// The family of directed closed sets under the inclusion L-order.
/// Carrier points are the subsets themselves, deduplicated and ordered by
/// lexicographic value vector; `pointClosureIndex[x]` locates <u_x>.
struct DirClosedFamily {
    LOrderedSet order;
    std::vector<LSubset> carrier;
    std::vector<std::size_t> pointClosureIndex;

    std::size_t indexOfSubset(const LSubset& U) const;  // throws if absent
};
DirClosedFamily dirClosedSets(const ClosureSpace& S);

/// Point-generated space over a continuous L-dcpo with C_x the way-below
/// subset of x.
ClosureSpace closureOfDomain(const LOrderedSet& P);

/// Point-generated space on K(P) with C_k the down-set of k restricted to
/// K(P); an L-closure space whenever P is algebraic.
ClosureSpace closureOfAlgebraic(const LOrderedSet& P);

/// Subspace operator. PointGenerated: C'_y = C_y restricted to Y.
/// TableBacked: <B>|_Y = (close of the zero-extension of B) restricted to Y.
ClosureSpace restrictToSubspace(const ClosureSpace& S, const std::vector<std::size_t>& Y,
                                const std::string& id);

/// (DS): every point closure factors through Y. Defined only over integral
/// quantales; a non-integral carrier is refused with a PreconditionError.
CheckResult isDenseSubspace(const ClosureSpace& S, const std::vector<std::size_t>& Y);

std::string renderSubset(const ClosureSpace& S, const LSubset& A);

}  // namespace qdom
