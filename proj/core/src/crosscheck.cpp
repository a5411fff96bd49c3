#include "qil/crosscheck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qil::crosscheck {

namespace {

using oracle::kProbabilityTol;
using oracle::StateVector;

std::string pair_name(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

/// Whether measuring `qubits` in basis b leaves the parity of {i,j} in b deterministic in
/// every branch of nonzero probability.
bool parity_fixed_after(const StateVector& state, const std::vector<std::size_t>& qubits, std::size_t i, std::size_t j,
                        Basis b) {
    std::function<bool(const StateVector&, std::size_t)> walk = [&](const StateVector& s, std::size_t k) -> bool {
        if (k == qubits.size()) {
            const double p1 = oracle::parity_probability(s, QubitSet::pair(i, j), b);
            return p1 < kProbabilityTol || p1 > 1.0 - kProbabilityTol;
        }
        for (bool outcome : {false, true}) {
            StateVector probe = s;
            if (b == Basis::H) probe.apply_h(qubits[k]);
            if (probe.probability(qubits[k], outcome) <= oracle::kZeroBranch) continue;
            if (!walk(oracle::measure_in_basis(s, qubits[k], b, outcome).state, k + 1)) return false;
        }
        return true;
    };
    return walk(state, 0);
}

Result independent_in_basis(const StateVector& state, std::size_t i, std::size_t j, Basis b) {
    const auto u = b == Basis::H ? SingleQubitUnitary::hadamard() : SingleQubitUnitary::identity();
    for (auto [first, then] : {std::pair{i, j}, std::pair{j, i}}) {
        for (bool of : {false, true}) {
            StateVector probe = state;
            probe.apply_unitary(first, u);
            if (probe.probability(first, of) <= oracle::kZeroBranch) continue;
            for (bool ot : {false, true}) {
                const auto p = oracle::conditional_probability(state, {first, u, of}, {then, u, ot});
                if (std::abs(p.conditional - p.unconditional) > kProbabilityTol)
                    return Result::fail("oracle shows p(q" + std::to_string(then + 1) + "|q" + std::to_string(first + 1) +
                                        ") = " + std::to_string(p.conditional) + " != " + std::to_string(p.unconditional));
            }
        }
    }
    return Result::ok();
}

bool satisfies(const EquationSet& eqs, std::size_t index, const StateVector& state) {
    for (const auto& row : eqs.rows()) {
        bool parity = false;
        for (auto q : row.members.indices()) parity ^= (index & state.bit(q)) != 0;
        if (parity != row.rhs) return false;
    }
    return true;
}

}  // namespace

Result parity_sound(const QieSystem& sys, const StateVector& state, Basis b) {
    for (const auto& eq : sys.equations(b).equations()) {
        const double p1 = oracle::parity_probability(state, eq.members, b);
        const double expected = eq.rhs ? 1.0 : 0.0;
        if (std::abs(p1 - expected) > kProbabilityTol)
            return Result::fail(std::string(1, basis_char(b)) + "-equation " + to_string(eq) +
                                " holds with probability " + std::to_string(eq.rhs ? p1 : 1.0 - p1));
    }
    return Result::ok();
}

Result support_complete(const QieSystem& sys, const StateVector& state, Basis b) {
    if (sys.total_rank() != sys.size()) return Result::ok();
    StateVector rotated = state;
    if (b == Basis::H) rotated.apply_h(QubitSet::all(state.size()));
    const auto& eqs = sys.equations(b);
    for (std::size_t k = 0; k < rotated.dimension(); ++k) {
        const bool nonzero = std::norm(rotated.amplitudes()[k]) > oracle::kZeroBranch;
        if (nonzero != satisfies(eqs, k, rotated))
            return Result::fail(std::string(1, basis_char(b)) + "-basis index " + std::to_string(k) +
                                (nonzero ? " has amplitude but violates the equations" : " solves the equations but has no amplitude"));
    }
    return Result::ok();
}

Result system_matches(const QieSystem& sys, const StateVector& state) {
    if (sys.size() != state.size()) return Result::fail("qubit counts differ");
    for (auto b : {Basis::C, Basis::H}) {
        if (auto r = parity_sound(sys, state, b); !r) return r;
        if (auto r = support_complete(sys, state, b); !r) return r;
    }
    return Result::ok();
}

Result verdict_matches(const CorrelationVerdict& v, const StateVector& state) {
    const auto i = v.first, j = v.second;
    const auto name = pair_name(i, j) + " in " + basis_char(v.basis);
    const double p1 = oracle::parity_probability(state, QubitSet::pair(i, j), v.basis);
    const bool deterministic = p1 < kProbabilityTol || p1 > 1.0 - kProbabilityTol;

    if (v.kind == CorrelationKind::PerfectlyCorrelated) {
        if (std::abs(p1 - (v.rhs ? 1.0 : 0.0)) > kProbabilityTol)
            return Result::fail(name + ": parity " + (v.rhs ? "1" : "0") + " has probability " +
                                std::to_string(v.rhs ? p1 : 1.0 - p1));
        return Result::ok();
    }
    if (deterministic) return Result::fail(name + ": oracle parity is deterministic but verdict is " + to_string(v));
    if (auto r = independent_in_basis(state, i, j, v.basis); !r) return Result::fail(name + ": " + r.detail);

    std::vector<std::size_t> others;
    for (std::size_t q = 0; q < state.size(); ++q)
        if (q != i && q != j) others.push_back(q);

    if (v.kind == CorrelationKind::ConditionallyCorrelated) {
        std::vector<std::size_t> cond;
        for (const auto& var : v.conditioning) {
            if (var.basis != v.basis) return Result::fail(name + ": cross-basis conditioning variable");
            cond.push_back(var.qubit);
        }
        if (!parity_fixed_after(state, cond, i, j, v.basis))
            return Result::fail(name + ": measuring the conditioning set does not fix the parity");
        for (std::size_t k = 0; k < cond.size(); ++k) {
            auto smaller = cond;
            smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
            if (parity_fixed_after(state, smaller, i, j, v.basis))
                return Result::fail(name + ": conditioning set is not minimal");
        }
        return Result::ok();
    }
    if (v.kind == CorrelationKind::Uncorrelated && parity_fixed_after(state, others, i, j, v.basis))
        return Result::fail(name + ": measuring every other qubit fixes the parity");
    return Result::ok();
}

Result status_matches(const QieSystem& sys, const StateVector& state) {
    for (std::size_t q = 0; q < sys.size(); ++q) {
        for (auto b : {Basis::C, Basis::H}) {
            StateVector rotated = state;
            if (b == Basis::H) rotated.apply_h(q);
            const double p1 = rotated.probability(q, true);
            const auto s = sys.status(q, b);
            const auto var = to_string(QubitVar{q, b});
            if (s.is_determined()) {
                if (std::abs(p1 - (s.value() ? 1.0 : 0.0)) > kProbabilityTol)
                    return Result::fail(var + " is determined but p(1) = " + std::to_string(p1));
            } else if (std::abs(p1 - 0.5) > kProbabilityTol) {
                return Result::fail(var + " is " + to_string(s) + " but p(1) = " + std::to_string(p1));
            }
        }
    }
    return Result::ok();
}

Result entanglement_matches(const QieSystem& sys, const StateVector& state, std::size_t i, std::size_t j) {
    const bool symbolic = qil_entangled(sys, i, j);
    const bool numeric = oracle::localizable_entanglement_search(state, i, j);
    if (symbolic != numeric)
        return Result::fail(pair_name(i, j) + ": qil_entangled=" + (symbolic ? "true" : "false") +
                            " but localizable search says " + (numeric ? "entangled" : "not entangled"));
    return Result::ok();
}

Result all_basis_matches(const QieSystem& sys, const StateVector& state, std::size_t i, std::size_t j,
                         std::size_t trials, std::uint64_t seed) {
    const bool symbolic = all_basis_uncorrelated(sys, i, j);
    const bool product = oracle::product_marginal_check(state, i, j);
    if (symbolic && !product) return Result::fail(pair_name(i, j) + ": all-basis claim but the marginal is not a product");
    // A false verdict claims a correlation only where the pair parity is fixed while the
    // values themselves are not; two determined values are trivially a product.
    bool correlated = false;
    for (auto b : {Basis::C, Basis::H})
        correlated |= sys.span_contains(b, QubitSet::pair(i, j)) && !sys.status(i, b).is_determined();
    if (correlated && product) return Result::fail(pair_name(i, j) + ": pair parity is fixed but the marginal is a product");
    if (symbolic && !oracle::random_basis_independence(state, i, j, trials, seed))
        return Result::fail(pair_name(i, j) + ": random local bases show a correlation");
    return Result::ok();
}

Result classes_match(const QieSystem& sys, const StateVector& state) {
    const auto classes = equivalence_classes(sys);
    std::vector<std::size_t> label(sys.size());
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (auto q : classes[c]) label[q] = c;
    for (std::size_t a = 0; a < sys.size(); ++a) {
        for (std::size_t b = a + 1; b < sys.size(); ++b) {
            StateVector swapped = state;
            swapped.apply_swap(a, b);
            const bool symmetric = oracle::fidelity(swapped, state) > 1.0 - oracle::kFidelityTol;
            // Classes are a transitive closure, so only direct symmetry implies same class.
            if (symmetric && label[a] != label[b])
                return Result::fail("swapping " + pair_name(a, b) + " preserves the state but the qubits are in different classes");
            if (!symmetric && sys.swapped(a, b).same_equations(sys))
                return Result::fail("swapping " + pair_name(a, b) + " preserves the equations but not the state");
        }
    }
    return Result::ok();
}

}  // namespace qil::crosscheck
