#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qil/basis.hpp"
#include "qil/gate.hpp"

namespace qil::oracle {

/// Largest register the dense simulator accepts.
inline constexpr std::size_t kMaxQubits = 12;

/// Probability equalities.
inline constexpr double kProbabilityTol = 1e-9;
/// Concurrence above this counts as entangled.
inline constexpr double kConcurrenceTol = 1e-6;
/// State fidelity comparisons.
inline constexpr double kFidelityTol = 1e-10;
/// Branches at or below this probability are treated as impossible.
inline constexpr double kZeroBranch = 1e-12;

class ZeroProbabilityBranch : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Dense n-qubit pure state. Qubit 0 is the most significant bit of the amplitude index,
/// so amplitude k of a 3-qubit state is <q0 q1 q2| with k = 4*q0 + 2*q1 + q2.
class StateVector {
  public:
    /// |bits[0] bits[1] ...>. Throws std::length_error past kMaxQubits.
    static StateVector basis_state(const std::vector<bool>& bits);
    static StateVector zeros(std::size_t n) { return basis_state(std::vector<bool>(n, false)); }

    /// Throws std::invalid_argument unless amps has 2^n entries with unit norm (1e-12).
    StateVector(std::size_t n, std::vector<Complex> amps);

    std::size_t size() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return amps_.size(); }
    const std::vector<Complex>& amplitudes() const noexcept { return amps_; }
    Complex amplitude(std::size_t index) const { return amps_.at(index); }
    /// Bit of the amplitude index that carries qubit q.
    std::size_t bit(std::size_t q) const noexcept { return std::size_t{1} << (n_ - 1 - q); }
    double norm_squared() const noexcept;

    StateVector& apply(const Gate& g);
    StateVector& apply_h(std::size_t q);
    StateVector& apply_h(QubitSet qubits);
    StateVector& apply_x(std::size_t q);
    StateVector& apply_z(std::size_t q);
    StateVector& apply_cnot(std::size_t control, std::size_t target);
    StateVector& apply_unitary(std::size_t q, const SingleQubitUnitary& u);
    /// Exchanges the roles of qubits a and b.
    StateVector& apply_swap(std::size_t a, std::size_t b);

    /// Probability that measuring q in the computational basis gives `outcome`.
    double probability(std::size_t q, bool outcome) const;

    /// Zeroes every amplitude where qubit q differs from `outcome` and returns the
    /// discarded-complement weight (the branch probability) without renormalizing.
    double project(std::size_t q, bool outcome);
    void renormalize();

  private:
    StateVector() = default;
    void check_qubit(std::size_t q) const;

    std::size_t n_ = 0;
    std::vector<Complex> amps_;
};

/// Reduced state of a subset of qubits. Rows and columns are indexed like a StateVector
/// over the kept qubits in ascending order.
class DensityMatrix {
  public:
    DensityMatrix(std::size_t qubits, Eigen::MatrixXcd m);

    std::size_t size() const noexcept { return qubits_; }
    const Eigen::MatrixXcd& matrix() const noexcept { return m_; }

    /// Hermitian within 1e-10, unit trace within 1e-10, eigenvalues >= -1e-9.
    bool is_valid() const;

    DensityMatrix kron(const DensityMatrix& other) const;
    double frobenius_distance(const DensityMatrix& other) const;

  private:
    std::size_t qubits_;
    Eigen::MatrixXcd m_;
};

StateVector simulate(const Circuit& circuit, const std::vector<bool>& init_bits);

struct CollapseResult {
    StateVector state;
    double probability;
};

/// Rotates q by `pre_rotation` (if any), projects it onto `outcome` and renormalizes.
/// The returned state stays in the rotated frame. Throws ZeroProbabilityBranch.
CollapseResult measure_collapse(const StateVector& state, std::size_t q,
                                const std::optional<SingleQubitUnitary>& pre_rotation, bool outcome);

/// Measures q in the c or h basis and returns the post-measurement state in the original
/// frame (an h outcome 0 leaves q in |+>).
CollapseResult measure_in_basis(const StateVector& state, std::size_t q, Basis basis, bool outcome);

/// A single-qubit measurement after a local basis change.
struct LocalMeasurement {
    std::size_t qubit;
    SingleQubitUnitary basis;
    bool outcome;
};

struct ConditionalProbability {
    /// p(then | first)
    double conditional;
    /// p(then) with no earlier measurement.
    double unconditional;
};

ConditionalProbability conditional_probability(const StateVector& state, const LocalMeasurement& first,
                                               const LocalMeasurement& then);

/// Haar-style random basis: a1, a2 from normalized complex Gaussians, alpha uniform.
SingleQubitUnitary random_unitary(std::mt19937_64& rng);

/// Samples `trials` pairs of random local bases (seeded) and checks that measuring either
/// qubit first never moves the other's outcome probabilities by 1e-7 or more.
bool random_basis_independence(const StateVector& state, std::size_t i, std::size_t j, std::size_t trials,
                               std::uint64_t seed);

DensityMatrix partial_trace(const StateVector& state, std::vector<std::size_t> keep);

/// ||rho_ij - rho_i (x) rho_j||_F < tol.
bool product_marginal_check(const StateVector& state, std::size_t i, std::size_t j, double tol = kProbabilityTol);

/// Wootters concurrence of a two-qubit density matrix.
double concurrence(const DensityMatrix& rho);

struct LocalizationWitness {
    /// Basis used for each measured qubit, parallel to `measured`.
    std::vector<std::size_t> measured;
    std::vector<Basis> bases;
    std::vector<bool> outcomes;
    double probability;
    double concurrence;
};

/// First branch (basis patterns in binary order, c before h; then outcomes) where measuring
/// every other qubit in c or h leaves i and j entangled. Requires n - 2 <= 6.
std::optional<LocalizationWitness> localizable_entanglement_witness(const StateVector& state, std::size_t i,
                                                                    std::size_t j);

inline bool localizable_entanglement_search(const StateVector& state, std::size_t i, std::size_t j) {
    return localizable_entanglement_witness(state, i, j).has_value();
}

/// |<a|b>|^2
double fidelity(const StateVector& a, const StateVector& b);

/// Probability that the parity of `members`, measured in `basis`, is 1.
double parity_probability(const StateVector& state, QubitSet members, Basis basis);

/// Amplitude indices with |amp|^2 > tol.
std::vector<std::size_t> support(const StateVector& state, double tol = kZeroBranch);

/// One "index:real,imag" line per amplitude with magnitude above 1e-14.
std::string to_text(const StateVector& state);
StateVector parse_state_text(std::size_t n, std::string_view text);

}  // namespace qil::oracle
