#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qil/system.hpp"

namespace qil {

/// A supplied measurement outcome disagrees with the value the equations force.
class ContradictionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The outcome is free (50/50) and the caller did not supply one.
class MissingOutcome : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct MeasurementSpec {
    std::size_t qubit = 0;
    Basis basis = Basis::C;
    /// Required when the outcome is free; checked against the forced value otherwise.
    std::optional<bool> outcome;
};

struct MeasurementResult {
    QieSystem system;
    bool outcome = false;
    /// True when the equations fixed the outcome before the measurement.
    bool forced = false;
};

MeasurementResult measure(const QieSystem& sys, const MeasurementSpec& spec);

enum class CorrelationKind { PerfectlyCorrelated, Uncorrelated, ConditionallyCorrelated, NotApplicable };

std::string to_string(CorrelationKind k);

/// How q_first and q_second correlate when both are measured in `basis`.
struct CorrelationVerdict {
    CorrelationKind kind = CorrelationKind::Uncorrelated;
    std::size_t first = 0;
    std::size_t second = 0;
    Basis basis = Basis::C;
    /// Parity q_first (+) q_second, for PerfectlyCorrelated.
    bool rhs = false;
    /// Smallest set of same-basis variables whose values make the pair's parity known.
    std::vector<QubitVar> conditioning;
    /// Why the verdict is NotApplicable.
    std::string reason;

    /// Measuring one qubit alone says nothing about the other.
    bool marginally_uncorrelated() const noexcept { return kind != CorrelationKind::PerfectlyCorrelated; }

    friend bool operator==(const CorrelationVerdict&, const CorrelationVerdict&) = default;
};

/// "perfectly_correlated(0)", "conditionally_correlated{q3(c),q4(c)}", ...
std::string to_string(const CorrelationVerdict& v);

CorrelationVerdict pair_correlation(const QieSystem& sys, std::size_t i, std::size_t j, Basis basis);

/// Both qubits undetermined in both bases and linked through a chain of equations.
bool qil_entangled(const QieSystem& sys, std::size_t i, std::size_t j);

/// Some constraint in `basis` still involves qubit j once qubit i's variable is gone.
bool preserved_against(const QieSystem& sys, std::size_t j, std::size_t i, Basis basis);

/// Sufficient symbolic condition for q_i and q_j to be uncorrelated in every pair of local
/// bases: the pair parity is fixed in neither basis, and each qubit's information survives
/// the loss of the other's wherever it is constrained.
bool all_basis_uncorrelated(const QieSystem& sys, std::size_t i, std::size_t j);

/// The system obtained by Hadamard on every qubit.
inline QieSystem dual_system(const QieSystem& sys) { return sys.dual(); }

/// Classes of qubits that can be transposed without changing either equation set.
/// Each class is sorted; classes are ordered by their smallest member.
std::vector<std::vector<std::size_t>> equivalence_classes(const QieSystem& sys);

struct PairReport {
    std::size_t first = 0;
    std::size_t second = 0;
    CorrelationVerdict c;
    CorrelationVerdict h;
    bool all_basis_uncorrelated = false;
    bool qil_entangled = false;

    const CorrelationVerdict& verdict(Basis b) const noexcept { return b == Basis::C ? c : h; }
    friend bool operator==(const PairReport&, const PairReport&) = default;
};

PairReport pair_report(const QieSystem& sys, std::size_t i, std::size_t j);

/// One report per unordered pair (i < j), in lexicographic order.
std::vector<PairReport> correlation_table(const QieSystem& sys);

}  // namespace qil
