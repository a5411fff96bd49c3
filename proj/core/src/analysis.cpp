#include "qil/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "qil/crosscheck.hpp"
#include "qil/oracle.hpp"

namespace qil {

namespace {

std::string pair_label(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

AnalyzeReport run_analyze(const CircuitDocument& doc) {
    AnalyzeReport report;
    report.n = doc.n;
    try {
        report.system = derive_from_circuit(doc.gates, doc.init);
    } catch (const UnsupportedGate& e) {
        report.coverage = "unsupported gate";
        report.error = e.what();
        return report;
    } catch (const RepresentabilityError& e) {
        report.coverage = "not representable";
        report.error = e.what();
        return report;
    }
    report.table = correlation_table(*report.system);
    report.classes = equivalence_classes(*report.system);

    QieSystem current = *report.system;
    for (const auto& d : doc.directives) {
        ScriptStep step{d, std::nullopt, false, {}, std::nullopt};
        try {
            if (const auto* m = std::get_if<MeasureDirective>(&d)) {
                auto r = measure(current, {m->qubit, m->basis, m->outcome});
                current = std::move(r.system);
                step.outcome = r.outcome;
                step.forced = r.forced;
            } else {
                const auto& p = std::get<PairDirective>(d);
                step.pair = pair_report(current, p.first, p.second);
            }
        } catch (const std::exception& e) {
            report.error = e.what();
            report.script.push_back(std::move(step));
            return report;
        }
        step.system_text = current.to_string();
        report.script.push_back(std::move(step));
    }
    return report;
}

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::first_failure() const {
    auto it = std::find_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; });
    return it == checks.end() ? nullptr : &*it;
}

namespace {

class Verifier {
  public:
    Verifier(VerifyReport& report, std::size_t trials, std::uint64_t seed) : report_(report), trials_(trials), seed_(seed) {}

    void record(std::string name, const crosscheck::Result& r) {
        report_.checks.push_back({std::move(name), r.passed, r.detail});
    }
    void record(std::string name, bool passed, std::string detail = {}) {
        report_.checks.push_back({std::move(name), passed, std::move(detail)});
    }

    void check_system(const std::string& prefix, const QieSystem& sys, const oracle::StateVector& state) {
        try {
            sys.check_invariants();
            record(prefix + "invariants", true);
        } catch (const std::exception& e) {
            record(prefix + "invariants", false, e.what());
        }
        record(prefix + "rank", sys.total_rank() == sys.size(),
               "rank(c) + rank(h) = " + std::to_string(sys.total_rank()) + ", n = " + std::to_string(sys.size()));
        for (auto b : {Basis::C, Basis::H}) {
            const std::string tag(1, basis_char(b));
            record(prefix + "parity_soundness." + tag, crosscheck::parity_sound(sys, state, b));
            record(prefix + "support_completeness." + tag, crosscheck::support_complete(sys, state, b));
        }
        record(prefix + "status", crosscheck::status_matches(sys, state));
    }

    void check_pair(const std::string& prefix, const QieSystem& sys, const oracle::StateVector& state, std::size_t i,
                    std::size_t j) {
        const auto label = prefix + "pair" + pair_label(i, j);
        for (auto b : {Basis::C, Basis::H})
            record(label + "." + basis_char(b), crosscheck::verdict_matches(pair_correlation(sys, i, j, b), state));
        record(label + ".all_basis", crosscheck::all_basis_matches(sys, state, i, j, trials_, seed_));
        if (state.size() - 2 <= 6) record(label + ".entangled", crosscheck::entanglement_matches(sys, state, i, j));
    }

  private:
    VerifyReport& report_;
    std::size_t trials_;
    std::uint64_t seed_;
};

}  // namespace

VerifyReport run_verify(const CircuitDocument& doc, std::size_t trials, std::uint64_t seed) {
    VerifyReport report;
    Verifier v(report, trials, seed);
    if (doc.n > oracle::kMaxQubits) {
        v.record("oracle.size", false, "the statevector oracle handles at most 12 qubits");
        return report;
    }
    auto state = oracle::simulate(doc.gates, doc.init);
    v.record("oracle.norm", std::abs(state.norm_squared() - 1.0) < 1e-12);

    std::optional<QieSystem> sys;
    try {
        sys = derive_from_circuit(doc.gates, doc.init);
    } catch (const UnsupportedGate&) {
        report.coverage = "unsupported gate";
    } catch (const RepresentabilityError&) {
        report.coverage = "not representable";
    }

    if (!sys) {
        for (std::size_t q = 0; q < state.size(); ++q) {
            for (auto b : {Basis::C, Basis::H}) {
                auto rotated = state;
                if (b == Basis::H) rotated.apply_h(q);
                const double total = rotated.probability(q, false) + rotated.probability(q, true);
                v.record("oracle.branches.q" + std::to_string(q + 1) + "." + basis_char(b), std::abs(total - 1.0) < 1e-10);
            }
        }
        return report;
    }

    v.check_system("", *sys, state);
    for (std::size_t i = 0; i < doc.n; ++i)
        for (std::size_t j = i + 1; j < doc.n; ++j) v.check_pair("", *sys, state, i, j);
    v.record("classes", crosscheck::classes_match(*sys, state));
    {
        auto rotated = state;
        rotated.apply_h(QubitSet::all(doc.n));
        v.record("duality", crosscheck::system_matches(sys->dual(), rotated));
    }

    std::size_t step = 0;
    for (const auto& d : doc.directives) {
        const auto prefix = "step" + std::to_string(++step) + ".";
        if (const auto* m = std::get_if<MeasureDirective>(&d)) {
            const auto forced = sys->span_contains(m->basis, QubitSet::single(m->qubit));
            const bool outcome = m->outcome.value_or(forced.value_or(false));
            auto rotated = state;
            if (m->basis == Basis::H) rotated.apply_h(m->qubit);
            const double p = rotated.probability(m->qubit, outcome);
            std::optional<MeasurementResult> r;
            try {
                r = measure(*sys, {m->qubit, m->basis, outcome});
            } catch (const std::exception& e) {
                v.record(prefix + "measure", false, e.what());
                return report;
            }
            const bool oracle_forced = p > 1.0 - oracle::kProbabilityTol || p < oracle::kProbabilityTol;
            v.record(prefix + "measure.forced", r->forced == oracle_forced,
                     "symbolic forced=" + std::string(r->forced ? "true" : "false") + ", oracle p=" + std::to_string(p));
            if (p <= oracle::kZeroBranch) {
                v.record(prefix + "measure.branch", false, "scripted outcome has zero probability");
                return report;
            }
            state = oracle::measure_in_basis(state, m->qubit, m->basis, outcome).state;
            *sys = std::move(r->system);
            v.check_system(prefix, *sys, state);
        } else {
            const auto& pd = std::get<PairDirective>(d);
            v.check_pair(prefix, *sys, state, pd.first, pd.second);
        }
    }
    return report;
}

DualityReport run_duality(const CircuitDocument& a, const CircuitDocument& b) {
    DualityReport report;
    if (a.n != b.n) {
        report.reason = "different qubit counts";
        return report;
    }
    std::optional<bool> symbolic;
    try {
        const auto sa = derive_from_circuit(a.gates, a.init);
        const auto sb = derive_from_circuit(b.gates, b.init);
        symbolic = sa.dual().same_equations(sb);
        report.symbolic = true;
    } catch (const std::exception& e) {
        report.reason = std::string("symbolic layer unavailable: ") + e.what();
    }
    std::optional<bool> numeric;
    if (a.n <= oracle::kMaxQubits) {
        auto sa = oracle::simulate(a.gates, a.init);
        sa.apply_h(QubitSet::all(a.n));
        const auto sb = oracle::simulate(b.gates, b.init);
        report.oracle_fidelity = oracle::fidelity(sa, sb);
        numeric = *report.oracle_fidelity > 1.0 - oracle::kFidelityTol;
    }
    report.dual = symbolic.value_or(numeric.value_or(false));
    report.consistent = !symbolic || !numeric || *symbolic == *numeric;
    if (report.reason.empty()) report.reason = report.dual ? "equation sets swap under c<->h" : "equation sets do not swap";
    return report;
}

}  // namespace qil
