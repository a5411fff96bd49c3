#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qil/circuit.hpp"
#include "qil/reasoner.hpp"
#include "qil/system.hpp"

namespace qil::corpus {

namespace expect {

/// Canonical equation text of the (post-measurement) system.
struct Qie {
    std::string text;
};
/// to_string of the pair verdict, e.g. "conditionally_correlated{q3(c)}".
struct Verdict {
    std::size_t first;
    std::size_t second;
    Basis basis;
    std::string verdict;
};
struct AllBasis {
    std::size_t first;
    std::size_t second;
    bool value;
};
struct Entangled {
    std::size_t first;
    std::size_t second;
    bool value;
};
struct Classes {
    std::vector<std::vector<std::size_t>> classes;
};
struct Status {
    QubitVar var;
    InfoStatus status;
};
/// Value a measurement of `var` is forced to, or nullopt for a free outcome.
struct Forced {
    QubitVar var;
    std::optional<bool> value;
};
/// Hadamard on every qubit maps this scenario's state to the named scenario's.
struct Dual {
    std::string other;
};

}  // namespace expect

using Query = std::variant<expect::Qie, expect::Verdict, expect::AllBasis, expect::Entangled, expect::Classes,
                           expect::Status, expect::Forced, expect::Dual>;

struct Fixture {
    /// What the fixture asserts, in words.
    std::string claim;
    /// Measurements (with outcomes) applied before the query.
    std::vector<MeasurementSpec> after;
    Query query;
};

struct Scenario {
    std::string name;
    std::string source;
    std::vector<Fixture> expected;

    CircuitDocument document() const { return parse_circuit(source); }
};

/// The five built-in states, sorted by name: ghz, phi1, psi3, psi3L, psi4.
const std::vector<Scenario>& scenarios();
const Scenario& scenario(const std::string& name);

struct FixtureOutcome {
    std::string scenario;
    std::string claim;
    bool symbolic = false;
    bool numeric = false;
    std::string detail;

    bool passed() const noexcept { return symbolic && numeric; }
};

struct CorpusReport {
    std::vector<FixtureOutcome> outcomes;

    bool passed() const;
    std::size_t failures() const;
};

/// Checks one fixture against the symbolic engine and the statevector oracle.
FixtureOutcome check_fixture(const Scenario& s, const Fixture& f);

/// Every fixture of every scenario, in scenario-name order.
CorpusReport run_corpus();

}  // namespace qil::corpus
