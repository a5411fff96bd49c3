#include "qil/reasoner.hpp"

#include <algorithm>
#include <numeric>

namespace qil {

namespace {

void check_pair(const QieSystem& sys, std::size_t i, std::size_t j) {
    if (i >= sys.size() || j >= sys.size()) throw std::out_of_range("pair index out of range");
    if (i == j) throw std::invalid_argument("pair needs two distinct qubits");
}

/// Ascending index lists compared lexicographically.
bool lex_less(QubitSet a, QubitSet b) {
    const auto ia = a.indices();
    const auto ib = b.indices();
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

class DisjointSets {
  public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

  private:
    std::vector<std::size_t> parent_;
};

}  // namespace

MeasurementResult measure(const QieSystem& sys, const MeasurementSpec& spec) {
    if (spec.qubit >= sys.size()) throw std::out_of_range("measured qubit out of range");
    const QubitVar var{spec.qubit, spec.basis};
    if (auto forced = sys.span_contains(spec.basis, QubitSet::single(spec.qubit))) {
        if (spec.outcome && *spec.outcome != *forced)
            throw ContradictionError(to_string(var) + " is forced to " + (*forced ? "1" : "0"));
        return {sys, *forced, true};
    }
    if (!spec.outcome) throw MissingOutcome(to_string(var) + " has a free outcome; supply 0 or 1");
    QieSystem next = sys;
    next.record_outcome(var, *spec.outcome);
    return {std::move(next), *spec.outcome, false};
}

std::string to_string(CorrelationKind k) {
    switch (k) {
        case CorrelationKind::PerfectlyCorrelated: return "perfectly_correlated";
        case CorrelationKind::Uncorrelated: return "uncorrelated";
        case CorrelationKind::ConditionallyCorrelated: return "conditionally_correlated";
        case CorrelationKind::NotApplicable: return "not_applicable";
    }
    return "?";
}

std::string to_string(const CorrelationVerdict& v) {
    std::string out = to_string(v.kind);
    switch (v.kind) {
        case CorrelationKind::PerfectlyCorrelated: out += v.rhs ? "(1)" : "(0)"; break;
        case CorrelationKind::ConditionallyCorrelated: {
            out += '{';
            for (std::size_t k = 0; k < v.conditioning.size(); ++k) out += (k ? "," : "") + to_string(v.conditioning[k]);
            out += '}';
            break;
        }
        case CorrelationKind::NotApplicable: out += " (" + v.reason + ")"; break;
        case CorrelationKind::Uncorrelated: break;
    }
    return out;
}

CorrelationVerdict pair_correlation(const QieSystem& sys, std::size_t i, std::size_t j, Basis basis) {
    check_pair(sys, i, j);
    CorrelationVerdict v;
    v.first = i;
    v.second = j;
    v.basis = basis;

    const auto pair = QubitSet::pair(i, j);
    if (auto rhs = sys.span_contains(basis, pair)) {
        v.kind = CorrelationKind::PerfectlyCorrelated;
        v.rhs = *rhs;
        return v;
    }
    for (auto q : {i, j}) {
        if (sys.status(q, basis).is_lost()) {
            v.kind = CorrelationKind::NotApplicable;
            v.reason = to_string(QubitVar{q, basis}) + " is lost";
            return v;
        }
    }

    // q_i + q_j becomes known once S is known iff some span element a has a (+) {i,j} = S
    // with {i,j} inside a. Lost variables never occur in the span, so they are excluded.
    const auto& rows = sys.equations(basis).rows();
    if (rows.size() >= 63) throw std::length_error("span too large for exhaustive conditioning search");
    std::optional<QubitSet> best;
    const std::uint64_t count = std::uint64_t{1} << rows.size();
    QubitSet element;
    for (std::uint64_t k = 1; k < count; ++k) {
        element ^= rows[static_cast<std::size_t>(std::countr_zero(k))].members;  // Gray code walk
        if (!pair.is_subset_of(element)) continue;
        const auto rest = element ^ pair;
        if (!best || rest.size() < best->size() || (rest.size() == best->size() && lex_less(rest, *best))) best = rest;
    }
    if (!best) {
        v.kind = CorrelationKind::Uncorrelated;
        return v;
    }
    v.kind = CorrelationKind::ConditionallyCorrelated;
    for (auto q : best->indices()) v.conditioning.push_back({q, basis});
    return v;
}

bool qil_entangled(const QieSystem& sys, std::size_t i, std::size_t j) {
    check_pair(sys, i, j);
    for (auto q : {i, j})
        for (auto b : {Basis::C, Basis::H})
            if (!sys.status(q, b).is_undetermined()) return false;
    DisjointSets sets(sys.size());
    for (auto b : {Basis::C, Basis::H}) {
        for (const auto& row : sys.equations(b).rows()) {
            const auto members = row.members.indices();
            for (std::size_t k = 1; k < members.size(); ++k) sets.unite(members[0], members[k]);
        }
    }
    return sets.find(i) == sets.find(j);
}

bool preserved_against(const QieSystem& sys, std::size_t j, std::size_t i, Basis basis) {
    check_pair(sys, i, j);
    return sys.equations(basis).avoiding(QubitSet::single(i)).support().contains(j);
}

bool all_basis_uncorrelated(const QieSystem& sys, std::size_t i, std::size_t j) {
    check_pair(sys, i, j);
    for (auto b : {Basis::C, Basis::H}) {
        if (sys.span_contains(b, QubitSet::pair(i, j))) return false;
        const auto support = sys.equations(b).support();
        if (support.contains(j) && !preserved_against(sys, j, i, b)) return false;
        if (support.contains(i) && !preserved_against(sys, i, j, b)) return false;
    }
    return true;
}

std::vector<std::vector<std::size_t>> equivalence_classes(const QieSystem& sys) {
    const auto n = sys.size();
    DisjointSets sets(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (sets.find(i) != sets.find(j) && sys.swapped(i, j).same_equations(sys)) sets.unite(i, j);
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t q = 0; q < n; ++q) {
        const auto root = sets.find(q);
        if (slot[root] == n) {
            slot[root] = classes.size();
            classes.emplace_back();
        }
        classes[slot[root]].push_back(q);
    }
    return classes;
}

PairReport pair_report(const QieSystem& sys, std::size_t i, std::size_t j) {
    PairReport r;
    r.first = i;
    r.second = j;
    r.c = pair_correlation(sys, i, j, Basis::C);
    r.h = pair_correlation(sys, i, j, Basis::H);
    r.all_basis_uncorrelated = all_basis_uncorrelated(sys, i, j);
    r.qil_entangled = qil_entangled(sys, i, j);
    return r;
}

std::vector<PairReport> correlation_table(const QieSystem& sys) {
    std::vector<PairReport> table;
    for (std::size_t i = 0; i < sys.size(); ++i)
        for (std::size_t j = i + 1; j < sys.size(); ++j) table.push_back(pair_report(sys, i, j));
    return table;
}

}  // namespace qil
