#include "qil/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace qil::oracle {

namespace {

constexpr double kNormTol = 1e-12;

std::size_t checked_dimension(std::size_t n) {
    if (n == 0) throw std::invalid_argument("a state needs at least one qubit");
    if (n > kMaxQubits) throw std::length_error("statevector oracle is limited to 12 qubits");
    return std::size_t{1} << n;
}

}  // namespace

StateVector StateVector::basis_state(const std::vector<bool>& bits) {
    StateVector s;
    s.n_ = bits.size();
    s.amps_.assign(checked_dimension(s.n_), Complex{});
    std::size_t index = 0;
    for (std::size_t q = 0; q < s.n_; ++q)
        if (bits[q]) index |= s.bit(q);
    s.amps_[index] = 1.0;
    return s;
}

StateVector::StateVector(std::size_t n, std::vector<Complex> amps) : n_(n), amps_(std::move(amps)) {
    if (amps_.size() != checked_dimension(n)) throw std::invalid_argument("amplitude count must be 2^n");
    if (std::abs(norm_squared() - 1.0) > kNormTol) throw std::invalid_argument("state is not normalized");
}

double StateVector::norm_squared() const noexcept {
    double acc = 0.0;
    for (const auto& a : amps_) acc += std::norm(a);
    return acc;
}

void StateVector::check_qubit(std::size_t q) const {
    if (q >= n_) throw std::out_of_range("qubit index out of range");
}

StateVector& StateVector::apply(const Gate& g) {
    validate(g, n_);
    std::visit(detail::overloaded{
                   [&](const gates::H& h) { apply_h(h.qubits); },
                   [&](const gates::X& x) { apply_x(x.qubit); },
                   [&](const gates::Z& z) { apply_z(z.qubit); },
                   [&](const gates::CNOT& c) { apply_cnot(c.control, c.target); },
                   [&](const gates::U1Q& u) { apply_unitary(u.qubit, u.u); },
               },
               g);
    return *this;
}

StateVector& StateVector::apply_h(std::size_t q) {
    check_qubit(q);
    const double s = 1.0 / std::numbers::sqrt2;
    const auto m = bit(q);
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        if (k & m) continue;
        const Complex a = amps_[k];
        const Complex b = amps_[k | m];
        // Same operation order as apply_unitary with the Hadamard matrix, so both agree bit for bit.
        amps_[k] = Complex{s * a.real() + s * b.real(), s * a.imag() + s * b.imag()};
        amps_[k | m] = Complex{s * a.real() - s * b.real(), s * a.imag() - s * b.imag()};
    }
    return *this;
}

StateVector& StateVector::apply_h(QubitSet qubits) {
    for (auto q : qubits.indices()) apply_h(q);
    return *this;
}

StateVector& StateVector::apply_x(std::size_t q) {
    check_qubit(q);
    const auto m = bit(q);
    for (std::size_t k = 0; k < amps_.size(); ++k)
        if (!(k & m)) std::swap(amps_[k], amps_[k | m]);
    return *this;
}

StateVector& StateVector::apply_z(std::size_t q) {
    check_qubit(q);
    const auto m = bit(q);
    for (std::size_t k = 0; k < amps_.size(); ++k)
        if (k & m) amps_[k] = -amps_[k];
    return *this;
}

StateVector& StateVector::apply_cnot(std::size_t control, std::size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) throw std::invalid_argument("cnot control equals target");
    const auto mc = bit(control);
    const auto mt = bit(target);
    for (std::size_t k = 0; k < amps_.size(); ++k)
        if ((k & mc) && !(k & mt)) std::swap(amps_[k], amps_[k | mt]);
    return *this;
}

StateVector& StateVector::apply_unitary(std::size_t q, const SingleQubitUnitary& u) {
    check_qubit(q);
    const Complex m00 = u.m00(), m01 = u.m01(), m10 = u.m10(), m11 = u.m11();
    auto mul = [](Complex x, Complex y) {
        return Complex{x.real() * y.real() - x.imag() * y.imag(), x.real() * y.imag() + x.imag() * y.real()};
    };
    const auto m = bit(q);
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        if (k & m) continue;
        const Complex a = amps_[k];
        const Complex b = amps_[k | m];
        amps_[k] = mul(m00, a) + mul(m01, b);
        amps_[k | m] = mul(m10, a) + mul(m11, b);
    }
    return *this;
}

StateVector& StateVector::apply_swap(std::size_t a, std::size_t b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) return *this;
    const auto ma = bit(a);
    const auto mb = bit(b);
    for (std::size_t k = 0; k < amps_.size(); ++k)
        if ((k & ma) && !(k & mb)) std::swap(amps_[k], amps_[(k & ~ma) | mb]);
    return *this;
}

double StateVector::probability(std::size_t q, bool outcome) const {
    check_qubit(q);
    const auto m = bit(q);
    double p = 0.0;
    for (std::size_t k = 0; k < amps_.size(); ++k)
        if (((k & m) != 0) == outcome) p += std::norm(amps_[k]);
    return p;
}

double StateVector::project(std::size_t q, bool outcome) {
    check_qubit(q);
    const auto m = bit(q);
    double p = 0.0;
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        if (((k & m) != 0) == outcome)
            p += std::norm(amps_[k]);
        else
            amps_[k] = 0.0;
    }
    return p;
}

void StateVector::renormalize() {
    const double norm = std::sqrt(norm_squared());
    if (norm <= 0.0) throw ZeroProbabilityBranch("cannot renormalize a zero vector");
    for (auto& a : amps_) a /= norm;
}

DensityMatrix::DensityMatrix(std::size_t qubits, Eigen::MatrixXcd m) : qubits_(qubits), m_(std::move(m)) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << qubits);
    if (m_.rows() != dim || m_.cols() != dim) throw std::invalid_argument("density matrix must be 2^k x 2^k");
}

bool DensityMatrix::is_valid() const {
    if ((m_ - m_.adjoint()).norm() > 1e-10) return false;
    if (std::abs(m_.trace() - Complex{1.0, 0.0}) > 1e-10) return false;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m_);
    return eig.eigenvalues().minCoeff() >= -1e-9;
}

DensityMatrix DensityMatrix::kron(const DensityMatrix& other) const {
    const auto r = other.m_.rows();
    Eigen::MatrixXcd out(m_.rows() * r, m_.cols() * r);
    for (Eigen::Index i = 0; i < m_.rows(); ++i)
        for (Eigen::Index j = 0; j < m_.cols(); ++j) out.block(i * r, j * r, r, r) = m_(i, j) * other.m_;
    return DensityMatrix(qubits_ + other.qubits_, std::move(out));
}

double DensityMatrix::frobenius_distance(const DensityMatrix& other) const {
    if (other.qubits_ != qubits_) throw std::invalid_argument("density matrices differ in size");
    return (m_ - other.m_).norm();
}

StateVector simulate(const Circuit& circuit, const std::vector<bool>& init_bits) {
    auto state = StateVector::basis_state(init_bits);
    for (const auto& g : circuit) state.apply(g);
    return state;
}

CollapseResult measure_collapse(const StateVector& state, std::size_t q,
                                const std::optional<SingleQubitUnitary>& pre_rotation, bool outcome) {
    StateVector next = state;
    if (pre_rotation) next.apply_unitary(q, *pre_rotation);
    const double p = next.project(q, outcome);
    if (p <= kZeroBranch) throw ZeroProbabilityBranch("measurement branch has zero probability");
    next.renormalize();
    return {std::move(next), p};
}

CollapseResult measure_in_basis(const StateVector& state, std::size_t q, Basis basis, bool outcome) {
    StateVector next = state;
    if (basis == Basis::H) next.apply_h(q);
    const double p = next.project(q, outcome);
    if (p <= kZeroBranch) throw ZeroProbabilityBranch("measurement branch has zero probability");
    next.renormalize();
    if (basis == Basis::H) next.apply_h(q);
    return {std::move(next), p};
}

ConditionalProbability conditional_probability(const StateVector& state, const LocalMeasurement& first,
                                               const LocalMeasurement& then) {
    if (first.qubit == then.qubit) throw std::invalid_argument("conditional probability needs distinct qubits");
    StateVector rotated = state;
    rotated.apply_unitary(first.qubit, first.basis);
    rotated.apply_unitary(then.qubit, then.basis);
    const auto mf = rotated.bit(first.qubit);
    const auto mt = rotated.bit(then.qubit);
    double p_first = 0.0, p_then = 0.0, p_joint = 0.0;
    const auto& amps = rotated.amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k) {
        const double w = std::norm(amps[k]);
        const bool f = ((k & mf) != 0) == first.outcome;
        const bool t = ((k & mt) != 0) == then.outcome;
        if (f) p_first += w;
        if (t) p_then += w;
        if (f && t) p_joint += w;
    }
    if (p_first <= kZeroBranch) throw ZeroProbabilityBranch("conditioning outcome has zero probability");
    return {p_joint / p_first, p_then};
}

SingleQubitUnitary random_unitary(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    Complex a1, a2;
    double norm2 = 0.0;
    do {
        a1 = {gauss(rng), gauss(rng)};
        a2 = {gauss(rng), gauss(rng)};
        norm2 = std::norm(a1) + std::norm(a2);
    } while (norm2 < 1e-12);
    const double s = 1.0 / std::sqrt(norm2);
    return {a1 * s, a2 * s, angle(rng)};
}

bool random_basis_independence(const StateVector& state, std::size_t i, std::size_t j, std::size_t trials,
                               std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("need at least one trial");
    if (i == j) throw std::invalid_argument("independence needs distinct qubits");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<SingleQubitUnitary, SingleQubitUnitary>> bases;
    bases.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        auto ui = random_unitary(rng);
        auto uj = random_unitary(rng);
        bases.emplace_back(ui, uj);
    }
    for (const auto& [ui, uj] : bases) {
        for (bool oi : {false, true}) {
            for (bool oj : {false, true}) {
                const LocalMeasurement mi{i, ui, oi};
                const LocalMeasurement mj{j, uj, oj};
                for (const auto& [first, then] : {std::pair{mi, mj}, std::pair{mj, mi}}) {
                    StateVector probe = state;
                    probe.apply_unitary(first.qubit, first.basis);
                    if (probe.probability(first.qubit, first.outcome) <= kZeroBranch) continue;
                    const auto p = conditional_probability(state, first, then);
                    if (!(std::abs(p.conditional - p.unconditional) < 1e-7)) return false;
                }
            }
        }
    }
    return true;
}

namespace {

// Keep must be sorted, unique and in range; keeping every qubit gives the pure projector.
DensityMatrix reduced_density(const StateVector& state, const std::vector<std::size_t>& keep) {
    const auto n = state.size();
    std::vector<std::size_t> env;
    for (std::size_t q = 0; q < n; ++q)
        if (!std::binary_search(keep.begin(), keep.end(), q)) env.push_back(q);

    const auto k = keep.size();
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(Eigen::Index{1} << k, Eigen::Index{1} << env.size());
    const auto& amps = state.amplitudes();
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        std::size_t row = 0, col = 0;
        for (auto q : keep) row = (row << 1) | ((idx & state.bit(q)) ? 1U : 0U);
        for (auto q : env) col = (col << 1) | ((idx & state.bit(q)) ? 1U : 0U);
        block(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = amps[idx];
    }
    return DensityMatrix(k, block * block.adjoint());
}

}  // namespace

DensityMatrix partial_trace(const StateVector& state, std::vector<std::size_t> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (keep.empty() || keep.size() >= state.size()) throw std::invalid_argument("keep must be a nonempty proper subset");
    if (keep.back() >= state.size()) throw std::out_of_range("kept qubit out of range");
    return reduced_density(state, keep);
}

bool product_marginal_check(const StateVector& state, std::size_t i, std::size_t j, double tol) {
    if (i == j) throw std::invalid_argument("product marginal needs distinct qubits");
    if (i > j) std::swap(i, j);
    if (j >= state.size()) throw std::out_of_range("qubit out of range");
    const auto rho_ij = reduced_density(state, {i, j});
    const auto product = partial_trace(state, {i}).kron(partial_trace(state, {j}));
    return rho_ij.frobenius_distance(product) < tol;
}

double concurrence(const DensityMatrix& rho) {
    if (rho.size() != 2) throw std::invalid_argument("concurrence is defined for two qubits");
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    // sigma_y (x) sigma_y is real: anti-diagonal (-1, 1, 1, -1).
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const Eigen::Matrix4cd m = rho.matrix();
    const Eigen::Matrix4cd tilde = yy * m.conjugate() * yy;

    // Rounding noise on zero eigenvalues would otherwise surface as ~1e-8 after the square root.
    auto roots_of = [](const Eigen::Vector4d& v) {
        const double cutoff = 1e-14 * std::max(1.0, v.cwiseAbs().maxCoeff());
        return v.unaryExpr([cutoff](double x) { return x < cutoff ? 0.0 : std::sqrt(x); }).eval();
    };
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(m);
    const Eigen::Vector4d roots = roots_of(eig.eigenvalues());
    const Eigen::Matrix4cd sqrt_rho = eig.eigenvectors() * roots.asDiagonal() * eig.eigenvectors().adjoint();
    const Eigen::Matrix4cd r = sqrt_rho * tilde * sqrt_rho;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig_r(0.5 * (r + r.adjoint()));
    Eigen::Vector4d lambda = roots_of(eig_r.eigenvalues());
    std::sort(lambda.data(), lambda.data() + 4, std::greater<>());
    return std::clamp(lambda(0) - lambda(1) - lambda(2) - lambda(3), 0.0, 1.0);
}

std::optional<LocalizationWitness> localizable_entanglement_witness(const StateVector& state, std::size_t i,
                                                                    std::size_t j) {
    const auto n = state.size();
    if (i >= n || j >= n) throw std::out_of_range("pair index out of range");
    if (i == j) throw std::invalid_argument("localizable search needs distinct qubits");
    std::vector<std::size_t> others;
    for (std::size_t q = 0; q < n; ++q)
        if (q != i && q != j) others.push_back(q);
    if (others.size() > 6) throw std::length_error("localizable search is limited to 6 measured qubits");

    const std::size_t patterns = std::size_t{1} << others.size();
    const auto bi = state.bit(i), bj = state.bit(j);
    for (std::size_t pattern = 0; pattern < patterns; ++pattern) {
        StateVector rotated = state;
        for (std::size_t k = 0; k < others.size(); ++k)
            if ((pattern >> k) & 1U) rotated.apply_h(others[k]);
        const auto& amps = rotated.amplitudes();
        for (std::size_t branch = 0; branch < patterns; ++branch) {
            std::size_t base = 0;
            for (std::size_t k = 0; k < others.size(); ++k)
                if ((branch >> k) & 1U) base |= rotated.bit(others[k]);
            Eigen::Vector4cd psi;
            psi << amps[base], amps[base | bj], amps[base | bi], amps[base | bi | bj];
            const double p = psi.squaredNorm();
            if (p <= kZeroBranch) continue;
            psi /= std::sqrt(p);
            const double c = concurrence(DensityMatrix(2, psi * psi.adjoint()));
            if (c > kConcurrenceTol) {
                LocalizationWitness w{others, {}, {}, p, c};
                for (std::size_t k = 0; k < others.size(); ++k) {
                    w.bases.push_back(((pattern >> k) & 1U) ? Basis::H : Basis::C);
                    w.outcomes.push_back(((branch >> k) & 1U) != 0);
                }
                return w;
            }
        }
    }
    return std::nullopt;
}

double fidelity(const StateVector& a, const StateVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("fidelity needs states of equal size");
    Complex overlap{};
    for (std::size_t k = 0; k < a.dimension(); ++k) overlap += std::conj(a.amplitudes()[k]) * b.amplitudes()[k];
    return std::norm(overlap);
}

double parity_probability(const StateVector& state, QubitSet members, Basis basis) {
    StateVector rotated = state;
    if (basis == Basis::H) rotated.apply_h(members);
    std::size_t mask = 0;
    for (auto q : members.indices()) mask |= rotated.bit(q);
    double p = 0.0;
    const auto& amps = rotated.amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k)
        if (std::popcount(k & mask) & 1) p += std::norm(amps[k]);
    return p;
}

std::vector<std::size_t> support(const StateVector& state, double tol) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < state.dimension(); ++k)
        if (std::norm(state.amplitudes()[k]) > tol) out.push_back(k);
    return out;
}

std::string to_text(const StateVector& state) {
    std::string out;
    char buf[96];
    for (std::size_t k = 0; k < state.dimension(); ++k) {
        const auto a = state.amplitudes()[k];
        if (std::abs(a) <= 1e-14) continue;
        std::snprintf(buf, sizeof buf, "%zu:%.17g,%.17g\n", k, a.real(), a.imag());
        out += buf;
    }
    return out;
}

StateVector parse_state_text(std::size_t n, std::string_view text) {
    std::vector<Complex> amps(checked_dimension(n));
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        auto fail = [&] { return std::invalid_argument("bad amplitude on line " + std::to_string(line_no)); };
        const auto colon = line.find(':');
        const auto comma = line.find(',');
        if (colon == std::string_view::npos || comma == std::string_view::npos || comma < colon) throw fail();
        std::size_t idx = 0;
        double re = 0.0, im = 0.0;
        const char* end = line.data() + line.size();
        if (std::from_chars(line.data(), line.data() + colon, idx).ptr != line.data() + colon) throw fail();
        if (std::from_chars(line.data() + colon + 1, line.data() + comma, re).ptr != line.data() + comma) throw fail();
        if (std::from_chars(line.data() + comma + 1, end, im).ptr != end) throw fail();
        if (idx >= amps.size()) throw fail();
        amps[idx] = {re, im};
    }
    return StateVector(n, std::move(amps));
}

}  // namespace qil::oracle
