#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qil/circuit.hpp"
#include "qil/oracle.hpp"
#include "qil/parity.hpp"
#include "qil/system.hpp"

namespace qil::test {

inline CircuitDocument doc(std::string_view text) { return parse_circuit(text); }

inline QieSystem derive(std::string_view text) {
    const auto d = doc(text);
    return derive_from_circuit(d.gates, d.init);
}

inline oracle::StateVector simulate(std::string_view text) {
    const auto d = doc(text);
    return oracle::simulate(d.gates, d.init);
}

/// A state written out amplitude by amplitude, ket order q1 most significant.
inline oracle::StateVector ket(std::size_t n, std::vector<std::pair<std::size_t, std::complex<double>>> terms) {
    std::vector<std::complex<double>> amps(std::size_t{1} << n);
    for (auto [i, a] : terms) amps.at(i) += a;
    return oracle::StateVector(n, std::move(amps));
}

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

/// Brute-force value of `members`' parity over every assignment satisfying `eqs`:
/// nullopt when it varies (or when nothing satisfies the set).
inline std::optional<bool> brute_parity(const EquationSet& eqs, std::size_t n, QubitSet members) {
    std::optional<bool> seen;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        bool ok = true;
        for (const auto& r : eqs.rows())
            if ((std::popcount(x & r.members.bits()) & 1) != static_cast<int>(r.rhs)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        const bool p = std::popcount(x & members.bits()) & 1;
        if (seen && *seen != p) return std::nullopt;
        seen = p;
    }
    return seen;
}

}  // namespace qil::test
