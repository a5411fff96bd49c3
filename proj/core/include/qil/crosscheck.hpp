#pragma once

#include <string>

#include "qil/oracle.hpp"
#include "qil/reasoner.hpp"
#include "qil/system.hpp"

/// Numerical counterparts of symbolic claims, evaluated on the statevector of the same state.
namespace qil::crosscheck {

/// Outcome of one comparison; `detail` explains a failure.
struct Result {
    bool passed = true;
    std::string detail;

    explicit operator bool() const noexcept { return passed; }
    static Result ok() { return {}; }
    static Result fail(std::string why) { return {false, std::move(why)}; }
};

/// Every stored equation of basis b holds with probability 1 on the oracle state.
Result parity_sound(const QieSystem& sys, const oracle::StateVector& state, Basis b);

/// For rank-n systems: the nonzero amplitudes in basis b are exactly the solutions of
/// the b-equations. Passes trivially below full rank.
Result support_complete(const QieSystem& sys, const oracle::StateVector& state, Basis b);

/// Soundness and completeness in both bases.
Result system_matches(const QieSystem& sys, const oracle::StateVector& state);

/// Perfect correlation <=> deterministic pair parity; otherwise marginal independence, and
/// for a conditioning set: measuring it fixes the parity in every branch, while no smaller
/// set does. Uncorrelated additionally requires that measuring all other qubits does not.
Result verdict_matches(const CorrelationVerdict& verdict, const oracle::StateVector& state);

/// Determined(v) <=> outcome v has probability 1 in that basis; otherwise the outcome is 50/50.
Result status_matches(const QieSystem& sys, const oracle::StateVector& state);

/// qil_entangled agrees with the c/h localizable-entanglement search (n - 2 <= 6).
Result entanglement_matches(const QieSystem& sys, const oracle::StateVector& state, std::size_t i, std::size_t j);

/// A true all-basis verdict implies a product two-qubit marginal and seeded random-basis
/// independence; a pair parity fixed in some basis where the values are not implies a
/// non-product marginal.
Result all_basis_matches(const QieSystem& sys, const oracle::StateVector& state, std::size_t i, std::size_t j,
                         std::size_t trials, std::uint64_t seed);

/// Two qubits are in one equivalence class iff swapping them leaves the state unchanged.
Result classes_match(const QieSystem& sys, const oracle::StateVector& state);

}  // namespace qil::crosscheck
