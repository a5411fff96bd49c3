#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qil/circuit.hpp"
#include "qil/reasoner.hpp"
#include "qil/system.hpp"

namespace qil {

/// One executed measure/pair directive.
struct ScriptStep {
    Directive directive;
    /// For measure: outcome and whether it was forced; the system afterwards.
    std::optional<bool> outcome;
    bool forced = false;
    std::string system_text;
    /// For pair.
    std::optional<PairReport> pair;
};

struct AnalyzeReport {
    std::size_t n = 0;
    /// "representable", "not representable" or "unsupported gate".
    std::string coverage = "representable";
    /// Set when derivation or the script failed.
    std::string error;
    std::optional<QieSystem> system;
    std::vector<PairReport> table;
    std::vector<std::vector<std::size_t>> classes;
    std::vector<ScriptStep> script;

    bool ok() const noexcept { return error.empty(); }
};

/// Derives the QIE system, its correlation table and equivalence classes, then runs the
/// document's measurement script and pair queries in order.
AnalyzeReport run_analyze(const CircuitDocument& doc);

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct VerifyReport {
    std::string coverage = "representable";
    std::vector<CheckResult> checks;

    bool passed() const;
    /// First failing check, if any.
    const CheckResult* first_failure() const;
};

/// Cross-validates every symbolic statement about the document against the statevector
/// oracle. Free measurement outcomes without a scripted value default to 0. Documents that
/// leave the symbolic class get oracle-only checks.
VerifyReport run_verify(const CircuitDocument& doc, std::size_t trials = 100, std::uint64_t seed = 1);

struct DualityReport {
    bool dual = false;
    /// Both documents have a symbolic system of the same size.
    bool symbolic = false;
    std::optional<double> oracle_fidelity;
    std::string reason;
    /// Symbolic and numerical answers agree (true when only one is available).
    bool consistent = true;
};

/// Whether Hadamard on every qubit maps document A's state onto document B's.
DualityReport run_duality(const CircuitDocument& a, const CircuitDocument& b);

}  // namespace qil
