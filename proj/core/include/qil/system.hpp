#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qil/basis.hpp"
#include "qil/gate.hpp"
#include "qil/parity.hpp"

namespace qil {

/// The state left the class of states describable by basis-pure parity equations.
class RepresentabilityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A gate the symbolic layer cannot apply (arbitrary rotations).
class UnsupportedGate : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Per-qubit, per-basis information status.
class InfoStatus {
  public:
    enum class Kind : std::uint8_t { Undetermined, Determined, Lost };

    constexpr InfoStatus() noexcept = default;
    static constexpr InfoStatus undetermined() noexcept { return {}; }
    static constexpr InfoStatus determined(bool v) noexcept { return InfoStatus{Kind::Determined, v}; }
    static constexpr InfoStatus lost() noexcept { return InfoStatus{Kind::Lost, false}; }

    constexpr Kind kind() const noexcept { return kind_; }
    constexpr bool is_determined() const noexcept { return kind_ == Kind::Determined; }
    constexpr bool is_lost() const noexcept { return kind_ == Kind::Lost; }
    constexpr bool is_undetermined() const noexcept { return kind_ == Kind::Undetermined; }
    /// Only meaningful when determined.
    constexpr bool value() const noexcept { return value_; }

    friend constexpr bool operator==(InfoStatus, InfoStatus) noexcept = default;

  private:
    constexpr InfoStatus(Kind k, bool v) noexcept : kind_(k), value_(v) {}
    Kind kind_ = Kind::Undetermined;
    bool value_ = false;
};

std::string to_string(InfoStatus s);

/// Complete set of qubit information equations for an n-qubit state: the c-basis and
/// h-basis parity constraints plus each variable's information status.
///
/// For systems built by `fresh` followed by gates and measurements, rank(c) + rank(h) = n.
/// Lost variables never occur in stored equations, and a Determined(v) variable always
/// has the singleton constraint q = v in its basis.
class QieSystem {
  public:
    /// Product state |x_1 ... x_n>. Throws std::invalid_argument on n == 0 or n > 64.
    static QieSystem fresh(const std::vector<bool>& init_bits);
    static QieSystem fresh(std::size_t n);

    /// Assembles a system from explicit equation sets; statuses follow the spans.
    static QieSystem from_equations(std::size_t n, EquationSet c, EquationSet h);

    std::size_t size() const noexcept { return n_; }
    const EquationSet& equations(Basis b) const noexcept { return b == Basis::C ? c_ : h_; }
    InfoStatus status(std::size_t qubit, Basis b) const { return status_.at(qubit)[basis_index(b)]; }
    InfoStatus status(QubitVar v) const { return status(v.qubit, v.basis); }
    std::size_t total_rank() const noexcept { return c_.rank() + h_.rank(); }

    QieSystem& apply_x(std::size_t qubit);
    QieSystem& apply_z(std::size_t qubit);
    /// Simultaneous Hadamard on `qubits`. Throws RepresentabilityError (leaving *this
    /// untouched) when the result has no basis-pure generating set.
    QieSystem& apply_h(QubitSet qubits);
    QieSystem& apply_h(std::size_t qubit) { return apply_h(QubitSet::single(qubit)); }
    QieSystem& apply_cnot(std::size_t control, std::size_t target);
    /// Dispatches on the gate; U1Q throws UnsupportedGate.
    QieSystem& apply(const Gate& g);

    /// Forced value of the parity of `members` in basis b, if the span fixes it.
    std::optional<bool> span_contains(Basis b, QubitSet members) const {
        return equations(b).implied_value(members);
    }
    std::optional<bool> span_contains(const ParityEquation& probe) const {
        return span_contains(probe.basis, probe.members);
    }

    /// Restricts var's basis set to the sub-span not involving var. var becomes Lost, and so
    /// does every other variable of that basis that no longer appears in any equation.
    QieSystem& eliminate_variable(QubitVar var);

    /// Records that var was measured with outcome `value` when the outcome was not forced:
    /// the complementary variable is eliminated, q = value is adjoined, and every variable
    /// newly determined by this has its complement marked Lost.
    /// Throws InternalInconsistency if the outcome contradicts the span.
    QieSystem& record_outcome(QubitVar var, bool value);

    /// Swaps the roles of the c- and h-equations and statuses.
    QieSystem dual() const;

    /// Transposes qubits a and b throughout.
    QieSystem swapped(std::size_t a, std::size_t b) const;

    /// Same equations in both bases (statuses ignored).
    bool same_equations(const QieSystem& other) const { return n_ == other.n_ && c_ == other.c_ && h_ == other.h_; }

    /// "c: 1+2=0; 2+3=0 | h: 1+2+3=0"
    std::string to_string() const;

    /// Throws InternalInconsistency if a structural invariant is violated.
    void check_invariants() const;

    friend bool operator==(const QieSystem&, const QieSystem&) = default;

  private:
    QieSystem(std::size_t n, EquationSet c, EquationSet h, std::vector<std::array<InfoStatus, 2>> status);
    EquationSet& equations_mut(Basis b) noexcept { return b == Basis::C ? c_ : h_; }
    void refresh_status();
    void check_index(std::size_t q) const;

    std::size_t n_ = 0;
    EquationSet c_{Basis::C};
    EquationSet h_{Basis::H};
    std::vector<std::array<InfoStatus, 2>> status_;
};

/// Left fold of the gate rules over `circuit` starting from |init_bits>.
QieSystem derive_from_circuit(const Circuit& circuit, const std::vector<bool>& init_bits);

}  // namespace qil
