#include <gtest/gtest.h>

#include "qil/system.hpp"
#include "support.hpp"

using namespace qil;
using test::derive;

namespace {

constexpr auto C = Basis::C;
constexpr auto H = Basis::H;

}  // namespace

TEST(QieSystem, FreshRegister) {
    auto s = QieSystem::fresh(std::vector<bool>{false, true});
    EXPECT_EQ(s.to_string(), "c: 1=0; 2=1 | h: -");
    EXPECT_EQ(s.status(1, C), InfoStatus::determined(true));
    EXPECT_TRUE(s.status(0, H).is_undetermined());
    EXPECT_EQ(s.total_rank(), 2u);
}

TEST(QieSystem, SingleQubitHadamard) {
    auto s = QieSystem::fresh(1);
    s.apply_h(0);
    EXPECT_EQ(s.to_string(), "c: - | h: 1=0");
    EXPECT_EQ(s.status(0, H), InfoStatus::determined(false));
    EXPECT_TRUE(s.status(0, C).is_undetermined());
    s.apply_h(0);
    EXPECT_EQ(s.to_string(), "c: 1=0 | h: -");
}

TEST(QieSystem, BellPair) {
    auto s = derive("qubits 2\nh 1\ncx 1 2");
    EXPECT_EQ(s.to_string(), "c: 1+2=0 | h: 1+2=0");
    for (std::size_t q = 0; q < 2; ++q)
        for (auto b : {C, H}) EXPECT_TRUE(s.status(q, b).is_undetermined());
}

TEST(QieSystem, PhaseAndBitFlips) {
    auto s = derive("qubits 2\nh 1\ncx 1 2\nz 1");
    EXPECT_EQ(s.to_string(), "c: 1+2=0 | h: 1+2=1");
    s.apply_x(1);
    EXPECT_EQ(s.to_string(), "c: 1+2=1 | h: 1+2=1");
    s.apply_z(1).apply_z(1);
    EXPECT_EQ(s.to_string(), "c: 1+2=1 | h: 1+2=1");
}

TEST(QieSystem, CnotRules) {
    // c-rows containing the target pick up the control; h-rows containing the control pick up the target.
    auto s = QieSystem::from_equations(3, EquationSet::parse(C, "2=1"), EquationSet::parse(H, "1+3=0"));
    s.apply_cnot(0, 1);
    EXPECT_EQ(s.equations(C).to_string(), "1+2=1");
    EXPECT_EQ(s.equations(H).to_string(), "1+2+3=0");
}

TEST(QieSystem, PartialHadamardOnEntangledPairIsNotRepresentable) {
    auto s = derive("qubits 2\nh 1\ncx 1 2");
    EXPECT_THROW(s.apply_h(0), RepresentabilityError);
    // Both qubits together is fine and maps the state to itself.
    s.apply_h(QubitSet::pair(0, 1));
    EXPECT_EQ(s.to_string(), "c: 1+2=0 | h: 1+2=0");
}

TEST(QieSystem, HadamardOnCorpusStates) {
    EXPECT_EQ(derive("qubits 3\nh 1 2 3\n").to_string(), "c: - | h: 1=0; 2=0; 3=0");
    auto ghz = derive("qubits 3\nh 1\ncx 1 2\ncx 2 3");
    EXPECT_THROW(ghz.apply_h(QubitSet::pair(0, 1)), RepresentabilityError);
    auto dual = ghz;
    dual.apply_h(QubitSet::all(3));
    EXPECT_TRUE(dual.same_equations(derive("qubits 3\nh 1\ncx 1 2\nh 3\ncx 3 2")));
    EXPECT_TRUE(ghz.dual().same_equations(dual));
}

TEST(QieSystem, DeriveRejectsRotation) {
    auto d = test::doc("qubits 1\nu 1 0.6 0 0.8 0 0");
    EXPECT_THROW(derive_from_circuit(d.gates, d.init), UnsupportedGate);
}

TEST(QieSystem, InitBits) {
    auto s = derive("qubits 3\ninit 101\ncx 1 2");
    EXPECT_EQ(s.to_string(), "c: 1=1; 2=1; 3=1 | h: -");
}

TEST(QieSystem, EliminateVariableMarksDroppedVariablesLost) {
    auto s = derive("qubits 3\nh 1\ncx 1 2\nh 3\ncx 3 2");
    s.eliminate_variable({0, C});
    EXPECT_EQ(s.equations(C).to_string(), "-");
    for (std::size_t q = 0; q < 3; ++q) EXPECT_TRUE(s.status(q, C).is_lost()) << q;
}

TEST(QieSystem, RecordOutcomeDeterminesAndLosesComplements) {
    auto s = derive("qubits 3\nh 1\ncx 1 2\ncx 2 3");
    s.record_outcome({2, C}, true);
    for (std::size_t q = 0; q < 3; ++q) {
        EXPECT_EQ(s.status(q, C), InfoStatus::determined(true)) << q;
        EXPECT_TRUE(s.status(q, H).is_lost()) << q;
    }
    EXPECT_NO_THROW(s.record_outcome({0, C}, true));
    EXPECT_THROW(s.record_outcome({0, C}, false), InternalInconsistency);
    s.check_invariants();
}

TEST(QieSystem, LostStaysLostUntilRedetermined) {
    auto s = derive("qubits 2\nh 1\ncx 1 2");
    s.record_outcome({0, C}, false);
    EXPECT_TRUE(s.status(1, H).is_lost());
    s.apply_cnot(0, 1);
    EXPECT_TRUE(s.status(1, H).is_lost());
    s.apply_h(1);
    EXPECT_EQ(s.status(1, H), InfoStatus::determined(false));
    EXPECT_TRUE(s.status(1, C).is_lost());
}

TEST(QieSystem, SwappedTransposesQubits) {
    auto s = derive("qubits 4\nh 1\ncx 1 2\nh 3\ncx 3 2\ncx 2 4");
    EXPECT_TRUE(s.swapped(0, 2).same_equations(s));
    EXPECT_TRUE(s.swapped(1, 3).same_equations(s));
    EXPECT_FALSE(s.swapped(0, 1).same_equations(s));
}

TEST(QieSystem, IndexChecks) {
    auto s = QieSystem::fresh(2);
    EXPECT_THROW(s.apply_x(2), std::out_of_range);
    EXPECT_THROW(s.apply_cnot(0, 0), std::invalid_argument);
    EXPECT_THROW(s.apply_h(QubitSet{}), std::invalid_argument);
}

TEST(QieSystem, GateInvolutions) {
    const auto base = derive("qubits 4\nh 1\ncx 1 2\nh 3\ncx 3 2\ncx 2 4\nx 3");
    for (std::size_t q = 0; q < 4; ++q) {
        EXPECT_EQ(QieSystem(base).apply_x(q).apply_x(q).to_string(), base.to_string());
        EXPECT_EQ(QieSystem(base).apply_z(q).apply_z(q).to_string(), base.to_string());
        for (std::size_t t = 0; t < 4; ++t)
            if (t != q) EXPECT_EQ(QieSystem(base).apply_cnot(q, t).apply_cnot(q, t).to_string(), base.to_string());
    }
    auto all = base;
    all.apply_h(QubitSet::all(4)).apply_h(QubitSet::all(4));
    EXPECT_EQ(all.to_string(), base.to_string());
}
