// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fuzz.hpp"
#include "qil/circuit.hpp"
#include "qil/oracle.hpp"
#include "qil/reasoner.hpp"
#include "support.hpp"

using namespace qil;
using test::kInvSqrt2;
using test::ket;

namespace {

constexpr auto C = Basis::C;
constexpr auto H = Basis::H;
constexpr double kFid = 1.0 - 1e-10;

const char* kBell = "qubits 2\nh 1\ncx 1 2";
const char* kGhz = "qubits 3\nh 1\ncx 1 2\ncx 2 3";
const char* kPsi3 = "qubits 3\nh 1\ncx 1 2\nh 3\ncx 3 2";
const char* kPsi4 = "qubits 4\nh 1\ncx 1 2\nh 3\ncx 3 2\nh 4\ncx 4 3";
const char* kPsi3L = "qubits 4\nh 1\ncx 1 2\nh 3\ncx 3 2\ncx 2 4";

/// Collects failed expectations for one criterion.
struct Check {
    std::vector<std::string> failures;
    std::string note;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    template <class A, class B>
    void equal(const A& got, const B& want, const std::string& what) {
        if (!(got == want)) {
            std::ostringstream os;
            os << what << ": got " << got << ", want " << want;
            failures.push_back(os.str());
        }
    }
};

std::string verdict(const QieSystem& s, std::size_t i, std::size_t j, Basis b) {
    return to_string(pair_correlation(s, i - 1, j - 1, b));
}

using Amp = std::complex<double>;

oracle::StateVector product(const std::vector<std::array<Amp, 2>>& qubits) {
    std::vector<Amp> amps{1.0};
    for (const auto& q : qubits) {
        std::vector<Amp> next;
        for (auto a : amps)
            for (auto b : q) next.push_back(a * b);
        amps = std::move(next);
    }
    return oracle::StateVector(qubits.size(), std::move(amps));
}

void criterion1(Check& c) {
    const auto bell = test::derive(kBell);
    auto same = [&](const EquationSet& got, const char* want, const std::string& what) {
        c.expect(got == EquationSet::parse(got.basis(), want), what + ": got " + got.to_string() + ", want " + want);
    };
    same(bell.equations(C), "1+2=0", "Bell c-equations");
    same(bell.equations(H), "1+2=0", "Bell h-equations");
    const auto phi2 = test::derive(std::string(kBell) + "\nz 1");
    same(phi2.equations(C), "1+2=0", "phi2 c-equations");
    same(phi2.equations(H), "1+2=1", "phi2 h-equations");
    c.expect(oracle::fidelity(test::simulate(std::string(kBell) + "\nz 1"),
                              ket(2, {{0, kInvSqrt2}, {3, -kInvSqrt2}})) > kFid,
             "Z on the Bell circuit gives phi2");
    c.note = "Bell " + bell.to_string() + "; phi2 " + phi2.to_string();
}

void criterion2(Check& c) {
    const auto ghz = test::derive(kGhz);
    const auto state = test::simulate(kGhz);
    for (bool o : {false, true}) {
        const auto after = measure(ghz, {2, C, o}).system;
        for (std::size_t q : {0u, 1u}) {
            const auto m = measure(after, {q, C, std::nullopt});
            c.expect(m.forced && m.outcome == o, "q" + std::to_string(q + 1) + "(c) forced after q3(c)");
        }
    }
    for (bool o : {false, true}) {
        const auto after = measure(ghz, {2, H, o}).system;
        const auto want = std::string("perfectly_correlated(") + (o ? "1" : "0") + ")";
        c.equal(verdict(after, 1, 2, H), want, "q1,q2 in H after q3(h)=" + std::to_string(o));
        c.equal(verdict(after, 1, 2, C), std::string("perfectly_correlated(0)"), "q1,q2 in C after q3(h)");
        const auto branch = oracle::measure_in_basis(state, 2, H, o);
        // phi1 (x) |+> or phi2 (x) |->.
        const double s = o ? -0.5 : 0.5;
        const auto want_state = ket(3, {{0, 0.5}, {1, s}, {6, s}, {7, 0.5}});
        const double f = oracle::fidelity(branch.state, want_state);
        c.expect(f >= kFid, "oracle branch q3(h)=" + std::to_string(o) + " fidelity " + std::to_string(f));
        c.expect(std::abs(branch.probability - 0.5) < 1e-9, "branch probability 1/2");
    }
    c.note = "q3 in C forces q1,q2; q3 in H leaves phi1/phi2";
}

void criterion3(Check& c) {
    const auto state = test::simulate(kPsi3);
    const auto id = SingleQubitUnitary::identity();
    const auto p = oracle::conditional_probability(state, {0, id, false}, {1, id, false});
    c.expect(std::abs(p.conditional - 0.5) < 1e-9 && std::abs(p.unconditional - 0.5) < 1e-9,
             "p(q2=0|q1=0) = p(q2=0) = 1/2");
    auto rotated = state;
    rotated.apply_h(0).apply_h(1);
    const double f = oracle::fidelity(rotated, ket(3, {{0, 0.5}, {6, 0.5}, {1, 0.5}, {7, -0.5}}));
    c.expect(f >= kFid, "H1 H2 psi3 fidelity " + std::to_string(f));
    const auto sys = test::derive(kPsi3);
    const auto vc = pair_correlation(sys, 0, 1, C);
    c.expect(vc.marginally_uncorrelated(), "q1,q2 marginally uncorrelated in C");
    c.equal(to_string(vc), std::string("conditionally_correlated{q3(c)}"), "C verdict");
    c.equal(verdict(sys, 1, 2, H), std::string("perfectly_correlated(0)"), "H verdict");
    c.note = "C: " + to_string(vc) + " (no marginal correlation); H: " + verdict(sys, 1, 2, H);
}

void criterion4(Check& c) {
    auto state = test::simulate(kPsi4);
    state.apply_h(3);
    const std::array<Amp, 2> zero{1, 0}, one{0, 1}, plus{kInvSqrt2, kInvSqrt2}, minus{kInvSqrt2, -kInvSqrt2};
    for (bool o : {false, true}) {
        const auto r = oracle::measure_collapse(state, 3, std::nullopt, o);
        c.expect(std::abs(r.probability - 0.5) < 1e-9, "branch probability 1/2");
        const auto want = o ? product({minus, minus, minus, one}) : product({plus, plus, plus, zero});
        c.expect(oracle::fidelity(r.state, want) >= kFid, "branch " + std::to_string(o) + " state");
    }
    const auto sys = test::derive(kPsi4);
    for (bool o : {false, true}) {
        const auto after = measure(sys, {3, H, o}).system;
        for (std::size_t q = 0; q < 4; ++q) {
            c.expect(after.status(q, H).is_determined(), "q" + std::to_string(q + 1) + "(h) determined");
            c.expect(after.status(q, C).is_lost(), "q" + std::to_string(q + 1) + "(c) lost");
        }
    }
    for (bool o4 : {false, true}) {
        for (bool o3 : {false, true}) {
            const auto after = measure(measure(sys, {3, C, o4}).system, {2, C, o3}).system;
            const std::string rhs = (o3 != o4) ? "1" : "0";
            c.equal(after.to_string(),
                    "c: 1+2=" + rhs + "; 3=" + (o3 ? "1" : "0") + "; 4=" + (o4 ? "1" : "0") + " | h: 1+2=0",
                    "after q4, q3 in C");
            c.expect(qil_entangled(after, 0, 1), "remaining pair entangled");
        }
    }
    c.note = "H4 branches |+++>|0>, |--->|1>; q4,q3 in C leave c: 1+2=r | h: 1+2=0";
}

void criterion5(Check& c) {
    const auto sys = test::derive(kPsi3L);
    const auto state = test::simulate(kPsi3L);
    c.expect(qil_entangled(sys, 0, 1), "qil_entangled(1,2)");
    c.expect(all_basis_uncorrelated(sys, 0, 1), "all_basis_uncorrelated(1,2)");
    c.expect(oracle::localizable_entanglement_search(state, 0, 1), "localizable search finds a witness");

    auto rotated = state;
    rotated.apply_h(3);
    const Amp r = kInvSqrt2;
    const std::vector<std::vector<std::pair<std::size_t, Amp>>> bell = {
        {{0, r}, {3, r}}, {{1, r}, {2, r}}, {{0, r}, {3, -r}}, {{1, r}, {2, -r}}};
    for (bool l : {false, true}) {
        for (bool q3 : {false, true}) {
            const auto a = oracle::measure_collapse(rotated, 3, std::nullopt, l);
            const auto b = oracle::measure_collapse(a.state, 2, std::nullopt, q3);
            c.expect(std::abs(a.probability * b.probability - 0.25) < 1e-9, "witness branch probability 1/4");
            std::vector<std::pair<std::size_t, Amp>> terms;
            for (auto [idx, amp] : bell[2 * l + q3]) terms.push_back({(idx << 2) | (q3 << 1) | l, amp});
            c.expect(oracle::fidelity(b.state, ket(4, terms)) >= kFid, "witness branch is a Bell pair");
            c.expect(std::abs(oracle::concurrence(oracle::partial_trace(b.state, {0, 1})) - 1.0) < 1e-6,
                     "witness concurrence 1");
        }
    }
    c.expect(oracle::random_basis_independence(state, 0, 1, 100, 1), "100 seeded random bases, |dp| < 1e-7");
    const auto rho = oracle::partial_trace(state, {0, 1});
    const double dist = (rho.matrix() - Eigen::MatrixXcd::Identity(4, 4) / 4.0).norm();
    c.expect(dist < 1e-9, "rho12 = I/4, distance " + std::to_string(dist));
    char buf[96];
    std::snprintf(buf, sizeof buf, "four Bell branches at 1/4; ||rho12 - I/4|| = %.1e", dist);
    c.note = buf;
}

void criterion6(Check& c) {
    const auto ghz = test::derive(kGhz);
    c.expect(dual_system(ghz).same_equations(test::derive(kPsi3)), "dual(GHZ) spans equal psi3's");
    auto state = test::simulate(kGhz);
    state.apply_h(QubitSet::all(3));
    const double f = oracle::fidelity(state, test::simulate(kPsi3));
    c.expect(f >= kFid, "H^3 GHZ vs psi3 fidelity");
    char buf[64];
    std::snprintf(buf, sizeof buf, "fidelity 1 - %.1e", 1.0 - f);
    c.note = buf;
}

void criterion7(Check& c) {
    const auto psi4 = test::derive(kPsi4);
    for (std::size_t i = 1; i <= 4; ++i) {
        for (std::size_t j = i + 1; j <= 4; ++j) {
            c.equal(verdict(psi4, i, j, H), std::string("perfectly_correlated(0)"), "psi4 H");
            std::string others;
            for (std::size_t k = 1; k <= 4; ++k)
                if (k != i && k != j) others += (others.empty() ? "" : ",") + std::string("q") + std::to_string(k) + "(c)";
            c.equal(verdict(psi4, i, j, C), "conditionally_correlated{" + others + "}", "psi4 C");
        }
    }
    const auto l = test::derive(kPsi3L);
    c.expect(equivalence_classes(l) == std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}}, "classes {1,3},{2,L}");
    c.equal(verdict(l, 2, 4, C), std::string("perfectly_correlated(0)"), "(2,L) C");
    const auto h24 = pair_correlation(l, 1, 3, H);
    c.expect(h24.marginally_uncorrelated(), "(2,L) marginally uncorrelated in H");
    c.equal(to_string(h24), std::string("conditionally_correlated{q1(h)}"), "(2,L) H");
    const auto c13 = pair_correlation(l, 0, 2, C);
    c.expect(c13.marginally_uncorrelated(), "(1,3) marginally uncorrelated in C");
    c.equal(to_string(c13), std::string("conditionally_correlated{q2(c)}"), "(1,3) C");
    c.equal(verdict(l, 1, 3, H), std::string("perfectly_correlated(0)"), "(1,3) H");
    c.note = "psi4 6 pairs; psi3L (2,L) H and (1,3) C have no marginal correlation (conditioning on q1(h), q2(c))";
}

void criterion8(Check& c) {
    const auto stats = test::run_fuzz(20261016, 500);
    c.expect(stats.representable >= 500, "at least 500 representable circuits");
    c.expect(stats.mismatches == 0, "mismatch: " + stats.first_mismatch);
    c.note = std::to_string(stats.representable) + " circuits verified, " + std::to_string(stats.not_representable) +
             " not representable (oracle-only), " + std::to_string(stats.mismatches) + " mismatches";
}

void criterion9(Check& c) {
    const auto bell = parse_circuit("qubits 2\nh 1\ncx 1 2");
    c.expect(bell.n == 2 && bell.gates.size() == 2 && bell.directives.empty(), "Bell document");
    const auto ghz = parse_circuit("qubits 3\nh 1\ncx 1 2\ncx 2 3\npair 1 2");
    c.expect(ghz.gates.size() == 3 && ghz.directives.size() == 1, "GHZ document with pair");
    for (const auto* d : {&bell, &ghz}) c.expect(parse_circuit(to_source(*d)) == *d, "round-trip");
    struct Bad {
        const char* text;
        std::size_t line, column;
    };
    for (auto [text, line, column] : {Bad{"qubits 2\ncx 1 1", 2, 6}, Bad{"qubits 2\nfoo 1", 2, 1},
                                      Bad{"qubits 2\nh 3", 2, 3}, Bad{"qubits 2\nu 1 0.6 0 x 0 0", 2, 11},
                                      Bad{"qubits 2\nqubits 2", 2, 1}}) {
        try {
            parse_circuit(text);
            c.expect(false, std::string("no error for ") + text);
        } catch (const ParseError& e) {
            c.expect(e.line() == line && e.column() == column, std::string("position of: ") + e.what());
        }
    }
    c.note = "3 examples parse and round-trip; 5 malformed inputs rejected at line/column";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"Bell equations and phi2 phase", criterion1},
        {"GHZ dormancy", criterion2},
        {"psi3 opposite dormancy", criterion3},
        {"psi4 paradox", criterion4},
        {"psi3L entangled yet uncorrelated", criterion5},
        {"GHZ / psi3 duality", criterion6},
        {"correlation tables", criterion7},
        {"random circuit property suite", criterion8},
        {"parser", criterion9},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[k].second(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = c.failures.empty();
        failed += !ok;
        std::printf("%s %zu  %-34s %6.2fs  %s\n", ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), secs,
                    c.note.c_str());
        for (const auto& f : c.failures) std::printf("       - %s\n", f.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
