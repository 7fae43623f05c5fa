#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdom {

/// Index into a quantale carrier. -1 marks "undefined" in derived tables.
using Elem = int;

/// Shared resource limits consulted by every brute-force operation.
/// Exceeding a cap always raises CapExceeded; there is no silent sampling.
struct Caps {
    std::size_t enumeration = 1'000'000;    // max |L|^|X| for subset enumeration
    std::size_t pair_enumeration = 10'000;  // max |L|^|X| when pairs (A,B) are scanned
    int iso_carrier = 8;                    // max carrier size for bijection search
    int quantale_carrier = 16;              // max |L|
};

Caps& caps();

/// Number of OpenMP workers used by the scan kernels (1 = serial path).
int& worker_count();

struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
    std::size_t required;
    std::size_t cap;
    CapExceeded(const std::string& what, std::size_t required, std::size_t cap)
        : std::runtime_error(what + " (required " + std::to_string(required) +
                             ", cap " + std::to_string(cap) + ")"),
          required(required),
          cap(cap) {}
};

/// Outcome of a single axiom/property check. `axiom` names the violated law
/// (e.g. "D2", "GC2", "AP4") and `witness` renders the violating tuple.
struct CheckResult {
    bool pass = true;
    std::string axiom;
    std::string witness;

    static CheckResult ok() { return {}; }
    static CheckResult fail(std::string axiom, std::string witness) {
        return {false, std::move(axiom), std::move(witness)};
    }
    explicit operator bool() const { return pass; }
};

/// A list of per-law results, one entry per axiom of a structure.
struct ValidationReport {
    struct Entry {
        std::string law;
        bool pass;
        std::string witness;  // empty when pass
    };
    std::vector<Entry> entries;

    void add(std::string law, const CheckResult& r) {
        entries.push_back({std::move(law), r.pass, r.pass ? "" : r.witness});
    }
    void addPass(std::string law) { entries.push_back({std::move(law), true, ""}); }
    void addFail(std::string law, std::string witness) {
        entries.push_back({std::move(law), false, std::move(witness)});
    }

    bool allPass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    const Entry* firstFailure() const {
        for (const auto& e : entries)
            if (!e.pass) return &e;
        return nullptr;
    }
    std::string summary() const {
        std::string s;
        for (const auto& e : entries) {
            s += e.law;
            s += e.pass ? ": pass" : ": FAIL [" + e.witness + "]";
            s += '\n';
        }
        return s;
    }
};

}  // namespace qdom
