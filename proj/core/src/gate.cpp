#include "qil/gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qil {

SingleQubitUnitary::SingleQubitUnitary(Complex a1, Complex a2, double alpha, double tol)
    : a1_(a1), a2_(a2), alpha_(alpha), phase_(std::polar(1.0, alpha)) {
    const double norm2 = std::norm(a1) + std::norm(a2);
    if (!(std::abs(norm2 - 1.0) <= tol)) throw std::invalid_argument("|a1|^2 + |a2|^2 must equal 1");
    if (std::abs(norm2 - 1.0) > 1e-14) {
        const double s = 1.0 / std::sqrt(norm2);
        a1_ *= s;
        a2_ *= s;
    }
    if (alpha == 0.0) phase_ = Complex{1.0, 0.0};
}

SingleQubitUnitary SingleQubitUnitary::hadamard() {
    const double s = 1.0 / std::numbers::sqrt2;
    return {Complex{s, 0.0}, Complex{s, 0.0}, 0.0};
}

double SingleQubitUnitary::unitarity_error() const noexcept {
    const Complex u[2][2] = {{m00(), m01()}, {m10(), m11()}};
    double err = 0.0;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            Complex acc = std::conj(u[0][r]) * u[0][c] + std::conj(u[1][r]) * u[1][c];
            err = std::max(err, std::abs(acc - (r == c ? 1.0 : 0.0)));
        }
    }
    return err;
}

std::size_t qubit_extent(const Gate& g) {
    return std::visit(detail::overloaded{
                          [](const gates::H& h) -> std::size_t { return h.qubits.empty() ? 0 : 64 - std::countl_zero(h.qubits.bits()); },
                          [](const gates::X& x) -> std::size_t { return x.qubit + 1; },
                          [](const gates::Z& z) -> std::size_t { return z.qubit + 1; },
                          [](const gates::CNOT& c) -> std::size_t { return std::max(c.control, c.target) + 1; },
                          [](const gates::U1Q& u) -> std::size_t { return u.qubit + 1; },
                      },
                      g);
}

void validate(const Gate& g, std::size_t n) {
    if (const auto* h = std::get_if<gates::H>(&g); h && h->qubits.empty())
        throw std::invalid_argument("h needs at least one qubit");
    if (const auto* c = std::get_if<gates::CNOT>(&g); c && c->control == c->target)
        throw std::invalid_argument("cnot control equals target");
    if (qubit_extent(g) > n) throw std::invalid_argument("gate qubit index out of range");
}

}  // namespace qil
