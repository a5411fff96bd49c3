#include <gtest/gtest.h>

#include "qil/circuit.hpp"

using namespace qil;

namespace {

void expect_error(std::string_view text, std::size_t line, std::size_t column, std::string_view message) {
    try {
        parse_circuit(text);
        ADD_FAILURE() << "no error for:\n" << text;
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), line) << e.what();
        EXPECT_EQ(e.column(), column) << e.what();
        EXPECT_NE(e.message().find(message), std::string::npos) << e.what();
    }
}

}  // namespace

TEST(Parser, BellCircuit) {
    const auto d = parse_circuit("qubits 2\nh 1\ncx 1 2");
    EXPECT_EQ(d.n, 2u);
    EXPECT_EQ(d.init, (std::vector<bool>{false, false}));
    ASSERT_EQ(d.gates.size(), 2u);
    EXPECT_EQ(std::get<gates::H>(d.gates[0]).qubits, QubitSet::single(0));
    EXPECT_EQ(std::get<gates::CNOT>(d.gates[1]), (gates::CNOT{0, 1}));
    EXPECT_TRUE(d.directives.empty());
}

TEST(Parser, GhzWithPairQuery) {
    const auto d = parse_circuit("qubits 3\nh 1\ncx 1 2\ncx 2 3\npair 1 2");
    EXPECT_EQ(d.gates.size(), 3u);
    ASSERT_EQ(d.directives.size(), 1u);
    EXPECT_EQ(std::get<PairDirective>(d.directives[0]), (PairDirective{0, 1}));
}

TEST(Parser, ControlEqualsTarget) { expect_error("qubits 2\ncx 1 1", 2, 6, "control equals target"); }

TEST(Parser, FullGrammar) {
    const auto d = parse_circuit(
        "# header comment\n"
        "qubits 3\n"
        "init 010   # trailing comment\n"
        "\n"
        "h 1 3\n"
        "x 2\n"
        "z 3\n"
        "cx 3 1\n"
        "u 2 0.6 0 0 0.8 1.5\n"
        "measure 1 h 1\n"
        "measure 2 c\n"
        "pair 1 3\n");
    EXPECT_EQ(d.init, (std::vector<bool>{false, true, false}));
    ASSERT_EQ(d.gates.size(), 5u);
    EXPECT_EQ(std::get<gates::H>(d.gates[0]).qubits, QubitSet::pair(0, 2));
    EXPECT_EQ(std::get<gates::X>(d.gates[1]).qubit, 1u);
    EXPECT_EQ(std::get<gates::Z>(d.gates[2]).qubit, 2u);
    EXPECT_EQ(std::get<gates::CNOT>(d.gates[3]), (gates::CNOT{2, 0}));
    EXPECT_EQ(std::get<gates::U1Q>(d.gates[4]).qubit, 1u);
    EXPECT_TRUE(d.has_arbitrary_rotations());
    ASSERT_EQ(d.directives.size(), 3u);
    EXPECT_EQ(std::get<MeasureDirective>(d.directives[0]), (MeasureDirective{0, Basis::H, true}));
    EXPECT_EQ(std::get<MeasureDirective>(d.directives[1]), (MeasureDirective{1, Basis::C, std::nullopt}));
}

TEST(Parser, RoundTrip) {
    for (const char* text : {"qubits 2\nh 1\ncx 1 2", "qubits 3\nh 1\ncx 1 2\ncx 2 3\npair 1 2",
                             "qubits 3\ninit 101\nh 1 2 3\nx 2\nz 1\nu 3 0.6 0 0 0.8 0.25\nmeasure 3 h 0\nmeasure 1 c\n",
                             "qubits 1"}) {
        const auto d = parse_circuit(text);
        const auto src = to_source(d);
        EXPECT_EQ(parse_circuit(src), d) << src;
        EXPECT_EQ(to_source(parse_circuit(src)), src);
    }
    EXPECT_EQ(to_source(parse_circuit("qubits 2\nh 1\ncx 1 2")), "qubits 2\nh 1\ncx 1 2\n");
}

TEST(Parser, PositionedErrors) {
    expect_error("qubits 2\nfoo 1", 2, 1, "unknown keyword 'foo'");
    expect_error("qubits 2\nh 3", 2, 3, "out of range");
    expect_error("qubits 2\nh 0", 2, 3, "out of range");
    expect_error("qubits 2\nx 1x", 2, 3, "malformed integer");
    expect_error("qubits 2\nu 1 0.6 0 abc 0 0", 2, 11, "malformed number");
    expect_error("qubits 2\nqubits 3", 2, 1, "duplicate qubits declaration");
    expect_error("h 1\n", 1, 1, "must come first");
    expect_error("# nothing\n", 1, 1, "missing 'qubits N'");
    expect_error("qubits 2\ninit 1", 2, 6, "needs 2 bits");
    expect_error("qubits 2\ninit 12", 2, 7, "0 or 1");
    expect_error("qubits 2\npair 1 2\nh 1", 3, 1, "gate after");
    expect_error("qubits 2\nmeasure 1 z", 2, 11, "basis must be");
    expect_error("qubits 2\nmeasure 1 c 2", 2, 13, "outcome must be");
    expect_error("qubits 2\ncx 1", 2, 5, "expects 2");
    expect_error("qubits 2\nx 1 2", 2, 5, "unexpected argument");
    expect_error("qubits 2\nu 1 1 0 1 0 0", 2, 5, "not unitary");
    expect_error("qubits 2\n  h 1 1", 2, 7, "listed twice");
    expect_error("qubits 0", 1, 8, "between 1 and 64");
    expect_error("qubits 2\npair 2 2", 2, 8, "distinct");
}

TEST(Parser, ErrorMessageFormat) {
    try {
        parse_circuit("qubits 2\ncx 1 1");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_STREQ(e.what(), "line 2, column 6: control equals target");
    }
}
