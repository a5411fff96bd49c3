#include "qil/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qil/crosscheck.hpp"
#include "qil/oracle.hpp"

namespace qil::corpus {

namespace {

// Fixtures are written with the same 1-based indices as the circuit text.
QubitVar var(std::size_t q, Basis b) { return {q - 1, b}; }
MeasurementSpec m(std::size_t q, Basis b, bool outcome) { return {q - 1, b, outcome}; }

Fixture verdict(std::size_t i, std::size_t j, Basis b, std::string v, std::string claim,
                std::vector<MeasurementSpec> after = {}) {
    return {std::move(claim), std::move(after), expect::Verdict{i - 1, j - 1, b, std::move(v)}};
}

Fixture status(std::size_t q, Basis b, InfoStatus s, std::string claim, std::vector<MeasurementSpec> after) {
    return {std::move(claim), std::move(after), expect::Status{var(q, b), s}};
}

std::vector<Scenario> build() {
    constexpr auto C = Basis::C;
    constexpr auto H = Basis::H;
    const auto det0 = InfoStatus::determined(false);
    const auto lost = InfoStatus::lost();
    std::vector<Scenario> out;

    out.push_back({"ghz",
                   "qubits 3\nh 1\ncx 1 2\ncx 2 3\n",
                   {
                       {"GHZ equations", {}, expect::Qie{"c: 1+2=0; 2+3=0 | h: 1+2+3=0"}},
                       verdict(1, 2, C, "perfectly_correlated(0)", "q1, q2 agree in the current basis"),
                       verdict(1, 2, H, "conditionally_correlated{q3(h)}", "q1, q2 need q3 in the h basis"),
                       {"q1, q2 entangled", {}, expect::Entangled{0, 1, true}},
                       {"measuring q3 in C forces q1", {m(3, C, false)}, expect::Forced{var(1, C), false}},
                       status(2, C, det0, "measuring q3 in C determines q2", {m(3, C, false)}),
                       {"measuring q3 in C leaves q1, q2 unentangled", {m(3, C, false)}, expect::Entangled{0, 1, false}},
                       verdict(1, 2, H, "perfectly_correlated(0)", "q3 = 0 in H leaves phi1", {m(3, H, false)}),
                       verdict(1, 2, H, "perfectly_correlated(1)", "q3 = 1 in H leaves phi2", {m(3, H, true)}),
                       {"GHZ is dual to psi3", {}, expect::Dual{"psi3"}},
                       {"all qubits interchangeable", {}, expect::Classes{{{0, 1, 2}}}},
                   }});

    out.push_back({"phi1",
                   "qubits 2\nh 1\ncx 1 2\n",
                   {
                       {"Bell equations", {}, expect::Qie{"c: 1+2=0 | h: 1+2=0"}},
                       verdict(1, 2, C, "perfectly_correlated(0)", "equal values in the current basis"),
                       verdict(1, 2, H, "perfectly_correlated(0)", "equal values in the h basis"),
                       {"pair entangled", {}, expect::Entangled{0, 1, true}},
                       {"pair not all-basis uncorrelated", {}, expect::AllBasis{0, 1, false}},
                       {"self-dual", {}, expect::Dual{"phi1"}},
                       status(2, C, det0, "measuring q1 in C determines q2", {m(1, C, false)}),
                       status(2, H, lost, "measuring q1 in C loses q2 in H", {m(1, C, false)}),
                   }});

    out.push_back({"psi3",
                   "qubits 3\nh 1\ncx 1 2\nh 3\ncx 3 2\n",
                   {
                       {"psi3 equations", {}, expect::Qie{"c: 1+2+3=0 | h: 1+2=0; 2+3=0"}},
                       verdict(1, 2, C, "conditionally_correlated{q3(c)}", "q1, q2 marginally independent in C"),
                       verdict(1, 2, H, "perfectly_correlated(0)", "q1, q2 agree in the h basis"),
                       {"measuring q1 in C leaves q2 free", {m(1, C, false)}, expect::Forced{var(2, C), std::nullopt}},
                       verdict(2, 3, C, "perfectly_correlated(0)", "q1 = 0 in C correlates q2 and q3",
                               {m(1, C, false)}),
                       {"psi3 is dual to GHZ", {}, expect::Dual{"ghz"}},
                       {"all qubits interchangeable", {}, expect::Classes{{{0, 1, 2}}}},
                   }});

    out.push_back({"psi3L",
                   "qubits 4\nh 1\ncx 1 2\nh 3\ncx 3 2\ncx 2 4\n",
                   {
                       {"psi3L equations", {}, expect::Qie{"c: 1+2+3=0; 2+4=0 | h: 1+3=0; 2+3+4=0"}},
                       verdict(1, 2, C, "conditionally_correlated{q3(c)}", "q1, q2 marginally independent in C"),
                       verdict(1, 2, H, "conditionally_correlated{q4(h)}", "q1, q2 marginally independent in H"),
                       {"q1, q2 all-basis uncorrelated", {}, expect::AllBasis{0, 1, true}},
                       {"q1, q2 entangled", {}, expect::Entangled{0, 1, true}},
                       {"classes {1,3} and {2,4}", {}, expect::Classes{{{0, 2}, {1, 3}}}},
                       verdict(2, 4, C, "perfectly_correlated(0)", "q2, q4 agree in C"),
                       verdict(2, 4, H, "conditionally_correlated{q1(h)}", "q2, q4 marginally independent in H"),
                       verdict(1, 3, C, "conditionally_correlated{q2(c)}", "q1, q3 marginally independent in C"),
                       verdict(1, 3, H, "perfectly_correlated(0)", "q1, q3 agree in H"),
                       verdict(1, 2, C, "perfectly_correlated(0)", "q4 in H then q3 in C activates a Bell pair",
                               {m(4, H, false), m(3, C, false)}),
                       verdict(1, 2, H, "perfectly_correlated(0)", "activated pair also agrees in H",
                               {m(4, H, false), m(3, C, false)}),
                   }});

    Scenario psi4{"psi4",
                  "qubits 4\nh 1\ncx 1 2\nh 3\ncx 3 2\nh 4\ncx 4 3\n",
                  {{"psi4 equations", {}, expect::Qie{"c: 1+2+3+4=0 | h: 1+2=0; 2+3=0; 3+4=0"}},
                   {"all qubits interchangeable", {}, expect::Classes{{{0, 1, 2, 3}}}}}};
    for (std::size_t i = 1; i <= 4; ++i) {
        for (std::size_t j = i + 1; j <= 4; ++j) {
            std::string others;
            for (std::size_t k = 1; k <= 4; ++k)
                if (k != i && k != j) others += (others.empty() ? "" : ",") + to_string(var(k, C));
            psi4.expected.push_back(verdict(i, j, H, "perfectly_correlated(0)", "pair agrees in H"));
            psi4.expected.push_back(
                verdict(i, j, C, "conditionally_correlated{" + others + "}", "pair needs the other two in C"));
        }
    }
    for (std::size_t q = 1; q <= 4; ++q) {
        psi4.expected.push_back(status(q, H, det0, "measuring q4 in H determines every h value", {m(4, H, false)}));
        if (q < 4)
            psi4.expected.push_back(status(q, C, lost, "measuring q4 in H loses every c value", {m(4, H, false)}));
    }
    psi4.expected.push_back({"measuring q4 then q3 in C leaves a Bell pair",
                             {m(4, C, false), m(3, C, false)},
                             expect::Qie{"c: 1+2=0; 3=0; 4=0 | h: 1+2=0"}});
    out.push_back(std::move(psi4));

    std::sort(out.begin(), out.end(), [](const Scenario& a, const Scenario& b) { return a.name < b.name; });
    return out;
}

struct Checked {
    bool symbolic = false;
    bool numeric = false;
    std::string detail;
};

Checked fail_both(std::string why) { return {false, false, std::move(why)}; }

Checked from(bool symbolic, const crosscheck::Result& numeric, const std::string& got) {
    Checked c{symbolic, numeric.passed, {}};
    if (!symbolic) c.detail = "symbolic: got " + got;
    if (!numeric.passed) c.detail += (c.detail.empty() ? "" : "; ") + ("oracle: " + numeric.detail);
    return c;
}

Checked evaluate(const expect::Qie& q, const QieSystem& sys, const oracle::StateVector& st) {
    return from(sys.to_string() == q.text, crosscheck::system_matches(sys, st), sys.to_string());
}

Checked evaluate(const expect::Verdict& q, const QieSystem& sys, const oracle::StateVector& st) {
    const auto v = pair_correlation(sys, q.first, q.second, q.basis);
    return from(to_string(v) == q.verdict, crosscheck::verdict_matches(v, st), to_string(v));
}

Checked evaluate(const expect::AllBasis& q, const QieSystem& sys, const oracle::StateVector& st) {
    const bool got = all_basis_uncorrelated(sys, q.first, q.second);
    return from(got == q.value, crosscheck::all_basis_matches(sys, st, q.first, q.second, 100, 1),
                got ? "true" : "false");
}

Checked evaluate(const expect::Entangled& q, const QieSystem& sys, const oracle::StateVector& st) {
    const bool got = qil_entangled(sys, q.first, q.second);
    return from(got == q.value, crosscheck::entanglement_matches(sys, st, q.first, q.second), got ? "true" : "false");
}

Checked evaluate(const expect::Classes& q, const QieSystem& sys, const oracle::StateVector& st) {
    const auto got = equivalence_classes(sys);
    std::string text;
    for (const auto& cls : got) {
        text += "{";
        for (auto k : cls) text += std::to_string(k + 1) + (k == cls.back() ? "" : ",");
        text += "}";
    }
    return from(got == q.classes, crosscheck::classes_match(sys, st), text);
}

Checked evaluate(const expect::Status& q, const QieSystem& sys, const oracle::StateVector& st) {
    const auto got = sys.status(q.var);
    return from(got == q.status, crosscheck::status_matches(sys, st), to_string(got));
}

Checked evaluate(const expect::Forced& q, const QieSystem& sys, const oracle::StateVector& st) {
    const auto got = sys.span_contains(q.var.basis, QubitSet::single(q.var.qubit));
    auto rotated = st;
    if (q.var.basis == Basis::H) rotated.apply_h(q.var.qubit);
    const double p1 = rotated.probability(q.var.qubit, true);
    bool numeric = false;
    if (q.value) numeric = std::abs(p1 - (*q.value ? 1.0 : 0.0)) < oracle::kProbabilityTol;
    else numeric = std::abs(p1 - 0.5) < oracle::kProbabilityTol;
    auto n = numeric ? crosscheck::Result::ok() : crosscheck::Result::fail("p(1) = " + std::to_string(p1));
    return from(got == q.value, n, got ? (*got ? "forced 1" : "forced 0") : "free");
}

Checked evaluate(const expect::Dual& q, const QieSystem& sys, const oracle::StateVector& st) {
    const auto doc = scenario(q.other).document();
    const auto other = derive_from_circuit(doc.gates, doc.init);
    auto rotated = st;
    rotated.apply_h(QubitSet::all(st.size()));
    const auto other_state = oracle::simulate(doc.gates, doc.init);
    const double f = rotated.size() == other_state.size() ? oracle::fidelity(rotated, other_state) : 0.0;
    const auto n = f > 1.0 - oracle::kFidelityTol ? crosscheck::Result::ok()
                                                   : crosscheck::Result::fail("fidelity " + std::to_string(f));
    return from(sys.dual().same_equations(other), n, sys.dual().to_string());
}

}  // namespace

const std::vector<Scenario>& scenarios() {
    static const std::vector<Scenario> all = build();
    return all;
}

const Scenario& scenario(const std::string& name) {
    for (const auto& s : scenarios())
        if (s.name == name) return s;
    throw std::out_of_range("unknown scenario " + name);
}

bool CorpusReport::passed() const { return failures() == 0; }

std::size_t CorpusReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(outcomes.begin(), outcomes.end(), [](const FixtureOutcome& o) { return !o.passed(); }));
}

FixtureOutcome check_fixture(const Scenario& s, const Fixture& f) {
    FixtureOutcome out{s.name, f.claim, false, false, {}};
    Checked c;
    try {
        const auto doc = s.document();
        auto sys = derive_from_circuit(doc.gates, doc.init);
        auto state = oracle::simulate(doc.gates, doc.init);
        for (const auto& spec : f.after) {
            sys = measure(sys, spec).system;
            state = oracle::measure_in_basis(state, spec.qubit, spec.basis, spec.outcome.value_or(false)).state;
        }
        c = std::visit([&](const auto& q) { return evaluate(q, sys, state); }, f.query);
    } catch (const std::exception& e) {
        c = fail_both(e.what());
    }
    out.symbolic = c.symbolic;
    out.numeric = c.numeric;
    out.detail = std::move(c.detail);
    return out;
}

CorpusReport run_corpus() {
    CorpusReport report;
    for (const auto& s : scenarios())
        for (const auto& f : s.expected) report.outcomes.push_back(check_fixture(s, f));
    return report;
}

}  // namespace qil::corpus
