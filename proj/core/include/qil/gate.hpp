#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "qil/basis.hpp"

namespace qil {

using Complex = std::complex<double>;

/// Single-qubit basis change [[a1, conj(a2) e^{i alpha}], [a2, -conj(a1) e^{i alpha}]].
///
/// Any U(2) element up to global phase has this form. (1/sqrt2, 1/sqrt2, 0) is the Hadamard gate.
class SingleQubitUnitary {
  public:
    /// Throws std::invalid_argument unless |a1|^2 + |a2|^2 is 1 within `tol`; the pair is
    /// renormalized so the stored matrix is unitary to machine precision.
    SingleQubitUnitary(Complex a1, Complex a2, double alpha, double tol = 1e-9);

    static SingleQubitUnitary identity() { return {1.0, 0.0, 0.0}; }
    static SingleQubitUnitary hadamard();

    Complex a1() const noexcept { return a1_; }
    Complex a2() const noexcept { return a2_; }
    double alpha() const noexcept { return alpha_; }

    /// Row-major entries m00, m01, m10, m11.
    Complex m00() const noexcept { return a1_; }
    Complex m01() const noexcept { return std::conj(a2_) * phase_; }
    Complex m10() const noexcept { return a2_; }
    Complex m11() const noexcept { return -std::conj(a1_) * phase_; }

    /// Max deviation of U^dagger U from the identity.
    double unitarity_error() const noexcept;

    friend bool operator==(const SingleQubitUnitary& a, const SingleQubitUnitary& b) noexcept {
        return a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.alpha_ == b.alpha_;
    }

  private:
    Complex a1_;
    Complex a2_;
    double alpha_;
    Complex phase_;
};

namespace gates {

/// Hadamard on every qubit of the set at once.
struct H {
    QubitSet qubits;
    friend bool operator==(const H&, const H&) = default;
};
struct X {
    std::size_t qubit;
    friend bool operator==(const X&, const X&) = default;
};
struct Z {
    std::size_t qubit;
    friend bool operator==(const Z&, const Z&) = default;
};
struct CNOT {
    std::size_t control;
    std::size_t target;
    friend bool operator==(const CNOT&, const CNOT&) = default;
};
/// Arbitrary single-qubit rotation. Statevector only.
struct U1Q {
    std::size_t qubit;
    SingleQubitUnitary u;
    friend bool operator==(const U1Q&, const U1Q&) = default;
};

}  // namespace gates

namespace detail {
template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace detail

using Gate = std::variant<gates::H, gates::X, gates::Z, gates::CNOT, gates::U1Q>;
using Circuit = std::vector<Gate>;

/// Highest qubit index touched plus one (0 for a gate-free circuit).
std::size_t qubit_extent(const Gate& g);

/// Throws std::invalid_argument for out-of-range or coinciding qubits.
void validate(const Gate& g, std::size_t n);

}  // namespace qil
