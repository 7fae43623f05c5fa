#pragma once

#include <cstdint>
#include <optional>

#include "qdom/approx.hpp"

namespace qdom {

/// Deterministic bounded RNG. All randomness flows from the explicit seed;
/// identical config means bit-identical structures and reports.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::size_t below(std::size_t n) { return n == 0 ? 0 : next() % n; }
    bool chance(int numer, int denom) { return below(static_cast<std::size_t>(denom)) <
                                               static_cast<std::size_t>(numer); }
};

struct GenConfig {
    std::uint64_t seed = 1;
    std::string quantaleId = "boolean";
    std::size_t minPoints = 2;
    std::size_t maxPoints = 4;
    std::size_t instances = 30;
    std::size_t budget = 100'000;       // suite-level enumeration budget
    std::size_t rejectionBudget = 500;  // generator retries before giving up
};

/// Random L-ordered set: a random classical preorder skeleton, degrees
/// repaired into transitivity by a closure pass, antisymmetry enforced by
/// rejection. The emitted structure is re-validated (no trusted generation).
LOrderedSet genLOrderedSet(const GenConfig& cfg, Rng& rng);

/// Random L-dcpo: genLOrderedSet filtered by isLDcpo.
LOrderedSet genLDcpo(const GenConfig& cfg, Rng& rng);

/// Constructive route: random continuous L-dcpo, then closureOfDomain.
ClosureSpace genInterpolativeSpace(const GenConfig& cfg, Rng& rng);

/// Constructive route: random algebraic L-dcpo, then closureOfAlgebraic.
ClosureSpace genLClosureSpace(const GenConfig& cfg, Rng& rng);

/// Random approximable relation between two spaces, built as the transpose
/// of a seeded-random Scott continuous map between the materialized
/// directed-closed carriers. Absent when sampling fails within budget.
std::optional<ApproxRelation> genApproxRelation(const GenConfig& cfg, Rng& rng,
                                                const ClosureSpace& X, const ClosureSpace& Y);

/// Independent classical (Boolean) implementations used for differential
/// testing under the two-element quantale. Degrees embed as {0, 1}.
namespace classical {

/// x <= y read off a crisp order table.
struct Poset {
    std::size_t n;
    std::vector<bool> leq;  // n*n
    bool le(std::size_t x, std::size_t y) const { return leq[x * n + y]; }
};

Poset fromCrisp(const LOrderedSet& P);  // requires the boolean quantale

bool isDirectedSet(const Poset& P, const std::vector<bool>& S);
bool isLowerSetClassical(const Poset& P, const std::vector<bool>& S);
bool isIdealSet(const Poset& P, const std::vector<bool>& S);
std::optional<std::size_t> leastUpperBound(const Poset& P, const std::vector<bool>& S);
/// y way-below x via the directed-set definition, brute force.
bool wayBelowClassical(const Poset& P, std::size_t y, std::size_t x);
bool isAlgebraicClassical(const Poset& P);

}  // namespace classical

/// Differential report for one Boolean instance: every quantale-valued
/// operation compared pointwise against the classical oracle.
CheckResult classicalOracle(const LOrderedSet& P);

struct SuiteReport {
    struct Line {
        std::string property;
        std::string instance;
        std::string status;  // "pass", "fail", "sampled"
        std::string witness;
    };
    std::string suite;
    GenConfig cfg;
    std::vector<Line> lines;
    std::vector<std::pair<std::string, double>> phaseSeconds;  // text report only

    bool allPass() const {
        for (const auto& l : lines)
            if (l.status == "fail") return false;
        return true;
    }
    bool anySampled() const {
        for (const auto& l : lines)
            if (l.status == "sampled") return true;
        return false;
    }
    /// Machine-readable form; deterministic (no timing).
    std::string toJson() const;
    /// Human-readable form with per-phase timing.
    std::string toText() const;
};

/// Named verification suites: "core", "oracle", "waybelow", "rep1", "rep2",
/// "rep3", "dense", "equiv". Unknown ids raise StructuralError; the "dense"
/// suite refuses non-integral quantales with PreconditionError.
SuiteReport runSuite(const std::string& name, const GenConfig& cfg);
std::vector<std::string> suiteIds();

}  // namespace qdom
