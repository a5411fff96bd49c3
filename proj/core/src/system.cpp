#include "qil/system.hpp"

#include <utility>

namespace qil {

std::string to_string(InfoStatus s) {
    switch (s.kind()) {
        case InfoStatus::Kind::Undetermined: return "undetermined";
        case InfoStatus::Kind::Determined: return s.value() ? "determined(1)" : "determined(0)";
        case InfoStatus::Kind::Lost: return "lost";
    }
    return "?";
}

QieSystem::QieSystem(std::size_t n, EquationSet c, EquationSet h, std::vector<std::array<InfoStatus, 2>> status)
    : n_(n), c_(std::move(c)), h_(std::move(h)), status_(std::move(status)) {}

QieSystem QieSystem::fresh(const std::vector<bool>& init_bits) {
    const auto n = init_bits.size();
    if (n == 0) throw std::invalid_argument("a system needs at least one qubit");
    if (n > kMaxSymbolicQubits) throw std::invalid_argument("symbolic systems are limited to 64 qubits");
    std::vector<EquationSet::Row> rows;
    std::vector<std::array<InfoStatus, 2>> status(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows.push_back({QubitSet::single(i), init_bits[i]});
        status[i] = {InfoStatus::determined(init_bits[i]), InfoStatus::undetermined()};
    }
    return QieSystem(n, EquationSet(Basis::C, std::move(rows)), EquationSet(Basis::H), std::move(status));
}

QieSystem QieSystem::fresh(std::size_t n) {
    return fresh(std::vector<bool>(n, false));
}

QieSystem QieSystem::from_equations(std::size_t n, EquationSet c, EquationSet h) {
    if (n == 0 || n > kMaxSymbolicQubits) throw std::invalid_argument("qubit count out of range");
    if (c.basis() != Basis::C || h.basis() != Basis::H) throw std::invalid_argument("equation sets carry the wrong basis tag");
    if (!(c.support() | h.support()).is_subset_of(QubitSet::all(n)))
        throw std::invalid_argument("equation mentions a qubit outside the system");
    QieSystem sys(n, std::move(c), std::move(h), std::vector<std::array<InfoStatus, 2>>(n));
    sys.refresh_status();
    return sys;
}

void QieSystem::check_index(std::size_t q) const {
    if (q >= n_) throw std::out_of_range("qubit index " + std::to_string(q + 1) + " out of range");
}

void QieSystem::refresh_status() {
    for (auto b : {Basis::C, Basis::H}) {
        const auto& set = equations(b);
        const auto support = set.support();
        for (std::size_t q = 0; q < n_; ++q) {
            auto& s = status_[q][basis_index(b)];
            if (auto v = set.implied_value(QubitSet::single(q))) {
                s = InfoStatus::determined(*v);
            } else if (support.contains(q)) {
                s = InfoStatus::undetermined();
            } else if (!s.is_undetermined()) {
                s = InfoStatus::lost();
            }
        }
    }
}

QieSystem& QieSystem::apply_x(std::size_t qubit) {
    check_index(qubit);
    c_.flip_rhs_containing(qubit);
    refresh_status();
    return *this;
}

QieSystem& QieSystem::apply_z(std::size_t qubit) {
    check_index(qubit);
    h_.flip_rhs_containing(qubit);
    refresh_status();
    return *this;
}

QieSystem& QieSystem::apply_h(QubitSet qubits) {
    if (qubits.empty()) throw std::invalid_argument("apply_h needs at least one qubit");
    if (!qubits.is_subset_of(QubitSet::all(n_))) throw std::out_of_range("apply_h qubit out of range");

    // A constraint stays basis-pure after relabeling iff it lies entirely inside or
    // entirely outside the relabeled set.
    auto collect = [&](const EquationSet& keep, const EquationSet& flip, Basis tag) {
        std::vector<EquationSet::Row> rows = keep.avoiding(qubits).rows();
        const auto inside = flip.within(qubits, n_);
        for (const auto& r : inside.rows()) rows.push_back(r);
        return EquationSet(tag, std::move(rows));
    };
    EquationSet next_c = collect(c_, h_, Basis::C);
    EquationSet next_h = collect(h_, c_, Basis::H);
    if (next_c.rank() + next_h.rank() != c_.rank() + h_.rank()) {
        throw RepresentabilityError("Hadamard on {" + [&] {
            std::string s;
            for (auto q : qubits.indices()) s += (s.empty() ? "" : ",") + std::to_string(q + 1);
            return s;
        }() + "} leaves the basis-pure equation class");
    }
    c_ = std::move(next_c);
    h_ = std::move(next_h);
    for (auto q : qubits.indices()) std::swap(status_[q][0], status_[q][1]);
    refresh_status();
    return *this;
}

QieSystem& QieSystem::apply_cnot(std::size_t control, std::size_t target) {
    check_index(control);
    check_index(target);
    if (control == target) throw std::invalid_argument("cnot control equals target");
    c_ = c_.transformed([&](QubitSet m) { return m.contains(target) ? m.toggle(control) : m; });
    h_ = h_.transformed([&](QubitSet m) { return m.contains(control) ? m.toggle(target) : m; });
    refresh_status();
    return *this;
}

QieSystem& QieSystem::apply(const Gate& g) {
    std::visit(detail::overloaded{
                   [&](const gates::H& h) { apply_h(h.qubits); },
                   [&](const gates::X& x) { apply_x(x.qubit); },
                   [&](const gates::Z& z) { apply_z(z.qubit); },
                   [&](const gates::CNOT& c) { apply_cnot(c.control, c.target); },
                   [&](const gates::U1Q&) { throw UnsupportedGate("arbitrary rotations have no parity-equation form"); },
               },
               g);
    return *this;
}

QieSystem& QieSystem::eliminate_variable(QubitVar var) {
    check_index(var.qubit);
    auto& set = equations_mut(var.basis);
    const auto before = set.support();
    set = set.avoiding(QubitSet::single(var.qubit));
    const auto after = set.support();
    for (std::size_t q = 0; q < n_; ++q) {
        if (q == var.qubit || (before.contains(q) && !after.contains(q)))
            status_[q][basis_index(var.basis)] = InfoStatus::lost();
    }
    refresh_status();
    return *this;
}

QieSystem& QieSystem::record_outcome(QubitVar var, bool value) {
    check_index(var.qubit);
    const auto single = QubitSet::single(var.qubit);
    if (auto forced = equations(var.basis).implied_value(single)) {
        if (*forced != value) throw InternalInconsistency("recorded outcome contradicts a forced value");
        return *this;
    }
    std::vector<bool> was_determined(n_);
    for (std::size_t q = 0; q < n_; ++q) was_determined[q] = status_[q][basis_index(var.basis)].is_determined();

    eliminate_variable({var.qubit, complement(var.basis)});
    equations_mut(var.basis).insert({single, value});
    refresh_status();
    for (std::size_t q = 0; q < n_; ++q) {
        if (status_[q][basis_index(var.basis)].is_determined() && !was_determined[q])
            status_[q][basis_index(complement(var.basis))] = InfoStatus::lost();
    }
    return *this;
}

QieSystem QieSystem::dual() const {
    auto status = status_;
    for (auto& s : status) std::swap(s[0], s[1]);
    return QieSystem(n_, h_.relabeled(Basis::C), c_.relabeled(Basis::H), std::move(status));
}

QieSystem QieSystem::swapped(std::size_t a, std::size_t b) const {
    check_index(a);
    check_index(b);
    auto transpose = [a, b](QubitSet m) {
        if (m.contains(a) != m.contains(b)) m.toggle(a).toggle(b);
        return m;
    };
    auto status = status_;
    std::swap(status[a], status[b]);
    return QieSystem(n_, c_.transformed(transpose), h_.transformed(transpose), std::move(status));
}

std::string QieSystem::to_string() const { return "c: " + c_.to_string() + " | h: " + h_.to_string(); }

void QieSystem::check_invariants() const {
    if (c_.basis() != Basis::C || h_.basis() != Basis::H) throw InternalInconsistency("equation set with wrong basis tag");
    for (auto b : {Basis::C, Basis::H}) {
        const auto support = equations(b).support();
        if (!support.is_subset_of(QubitSet::all(n_))) throw InternalInconsistency("equation outside the register");
        for (std::size_t q = 0; q < n_; ++q) {
            const auto s = status(q, b);
            if (s.is_lost() && support.contains(q))
                throw InternalInconsistency(qil::to_string(QubitVar{q, b}) + " is lost but still constrained");
            if (s.is_determined() && equations(b).implied_value(QubitSet::single(q)) != s.value())
                throw InternalInconsistency(qil::to_string(QubitVar{q, b}) + " is determined without a singleton");
        }
    }
    for (std::size_t q = 0; q < n_; ++q) {
        if (status_[q][0].is_determined() && status_[q][1].is_determined())
            throw InternalInconsistency("qubit " + std::to_string(q + 1) + " determined in both bases");
    }
}

QieSystem derive_from_circuit(const Circuit& circuit, const std::vector<bool>& init_bits) {
    for (const auto& g : circuit) {
        if (std::holds_alternative<gates::U1Q>(g)) throw UnsupportedGate("arbitrary rotations have no parity-equation form");
        validate(g, init_bits.size());
    }
    auto sys = QieSystem::fresh(init_bits);
    for (const auto& g : circuit) {
        sys.apply(g);
        if (sys.total_rank() != sys.size()) throw InternalInconsistency("rank(c) + rank(h) drifted from n");
    }
    return sys;
}

}  // namespace qil
