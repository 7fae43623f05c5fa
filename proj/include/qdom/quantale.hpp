#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qdom/check.hpp"

namespace qdom {

/// Finite commutative unital quantale (L, <=, tensor, u).
///
/// Element labels are opaque strings; all arithmetic lives in the tables.
/// Join/meet/residuation tables and bottom/top are derived once at
/// construction. Residuation is never user-supplied: -> is computed as
/// r(a,b) = join{c : a (x) c <= b}. Construction only rejects structural
/// defects (unknown labels, non-total tables); axiom violations are the
/// business of validate() so that corrupted instances stay inspectable.
class FiniteQuantale {
public:
    /// `leqPairs` lists pairs (a, b) meaning a <= b; the reflexive-transitive
    /// closure is applied. `tensorTriples` lists (a, b, a (x) b) and must be
    /// total after symmetrization is *not* assumed: every ordered pair needs
    /// an entry or a commuted one.
    static FiniteQuantale fromTriples(
        std::string name, std::vector<std::string> elements,
        const std::vector<std::pair<std::string, std::string>>& leqPairs,
        const std::vector<std::array<std::string, 3>>& tensorTriples, const std::string& unit);

    /// Direct table form used by the fixture catalog.
    static FiniteQuantale fromTables(std::string name, std::vector<std::string> elements,
                                     std::vector<std::vector<bool>> leq,
                                     std::vector<std::vector<Elem>> tensor, Elem unit);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(Elem a) const { return labels_[static_cast<std::size_t>(a)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    Elem indexOf(const std::string& label) const;  // throws StructuralError

    bool leq(Elem a, Elem b) const { return leq_[idx(a, b)]; }
    Elem tensor(Elem a, Elem b) const { return tensor_[idx(a, b)]; }
    Elem unit() const { return unit_; }
    Elem bottom() const { return bottom_; }
    Elem top() const { return top_; }
    Elem join(Elem a, Elem b) const { return join_[idx(a, b)]; }
    Elem meet(Elem a, Elem b) const { return meet_[idx(a, b)]; }
    Elem residuate(Elem a, Elem b) const { return resid_[idx(a, b)]; }

    /// Least upper bound of a set of elements (empty set -> bottom), or -1.
    Elem joinOfSet(const std::vector<Elem>& s) const;
    Elem meetOfSet(const std::vector<Elem>& s) const;

    bool isIntegral() const { return unit_ == top_; }

    /// Lattice completeness, commutativity, associativity, unit law and
    /// join-distributivity, each pass/fail with a concrete witness.
    ValidationReport validate() const;

    /// Residuation laws Q1-Q7 plus the adjunction, checked exhaustively.
    /// On a valid quantale these are theorems; this is a sanity oracle for
    /// the derived residuation table.
    ValidationReport checkResiduationLaws() const;

    const std::string& name() const { return name_; }

    /// Structural fingerprint of (carrier, leq, tensor, unit).
    std::uint64_t structuralHash() const;

private:
    FiniteQuantale() = default;
    void derive();
    std::size_t idx(Elem a, Elem b) const {
        return static_cast<std::size_t>(a) * labels_.size() + static_cast<std::size_t>(b);
    }

    std::string name_;
    std::vector<std::string> labels_;
    std::vector<bool> leq_;      // n*n
    std::vector<Elem> tensor_;   // n*n
    Elem unit_ = -1;
    // derived
    std::vector<Elem> join_, meet_, resid_;
    Elem bottom_ = -1, top_ = -1;
};

using QuantalePtr = std::shared_ptr<const FiniteQuantale>;

/// Catalog of fixture quantales: "boolean", "lukasiewicz-3", "lukasiewicz-4",
/// "goedel-3", "goedel-4", "nonintegral-3", "boolean-square".
/// Throws StructuralError on an unknown id. Every fixture is re-validated
/// at construction.
QuantalePtr fixtureQuantale(const std::string& id);
std::vector<std::string> fixtureQuantaleIds();

}  // namespace qdom
