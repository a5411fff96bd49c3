#include "qil/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

namespace qil {

ParseError::ParseError(std::size_t line, std::size_t column, std::string message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(std::move(message)) {}

bool CircuitDocument::has_arbitrary_rotations() const {
    return std::any_of(gates.begin(), gates.end(), [](const Gate& g) { return std::holds_alternative<gates::U1Q>(g); });
}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size() || line[i] == '#') break;
        const auto start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

class LineParser {
  public:
    LineParser(std::size_t line, std::vector<Token> tokens) : line_(line), tokens_(std::move(tokens)) {}

    [[noreturn]] void fail(const Token& at, std::string message) const { throw ParseError(line_, at.column, std::move(message)); }
    [[noreturn]] void fail_end(std::string message) const {
        const auto& last = tokens_.back();
        throw ParseError(line_, last.column + last.text.size(), std::move(message));
    }

    const Token& keyword() const { return tokens_.front(); }
    std::size_t args() const { return tokens_.size() - 1; }
    const Token& arg(std::size_t k) const { return tokens_.at(k + 1); }

    void expect_args(std::size_t lo, std::size_t hi) const {
        if (args() < lo) fail_end("'" + std::string(keyword().text) + "' expects " + std::to_string(lo) + " argument(s)");
        if (args() > hi) fail(arg(hi), "unexpected argument");
    }

    std::size_t integer(std::size_t k) const {
        const auto& t = arg(k);
        std::size_t v = 0;
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc{} || p != t.text.data() + t.text.size()) fail(t, "malformed integer '" + std::string(t.text) + "'");
        return v;
    }

    /// 1-based index in the text, 0-based result.
    std::size_t index(std::size_t k, std::size_t n) const {
        const auto v = integer(k);
        if (v < 1 || v > n) fail(arg(k), "qubit index " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        return v - 1;
    }

    double number(std::size_t k) const {
        const auto& t = arg(k);
        double v = 0.0;
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc{} || p != t.text.data() + t.text.size()) fail(t, "malformed number '" + std::string(t.text) + "'");
        return v;
    }

  private:
    std::size_t line_;
    std::vector<Token> tokens_;
};

}  // namespace

CircuitDocument parse_circuit(std::string_view text) {
    CircuitDocument doc;
    bool declared = false;
    bool has_init = false;
    std::size_t line_no = 0;
    while (!text.empty() || line_no == 0) {
        ++line_no;
        const auto nl = text.find('\n');
        const auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            if (text.empty()) break;
            continue;
        }
        LineParser p(line_no, std::move(tokens));
        const auto kw = p.keyword().text;

        if (kw == "qubits") {
            if (declared) p.fail(p.keyword(), "duplicate qubits declaration");
            p.expect_args(1, 1);
            const auto n = p.integer(0);
            if (n < 1 || n > kMaxSymbolicQubits) p.fail(p.arg(0), "qubit count must be between 1 and 64");
            doc.n = n;
            doc.init.assign(n, false);
            declared = true;
            continue;
        }
        if (!declared) p.fail(p.keyword(), "'qubits N' must come first");

        const bool is_gate = kw == "h" || kw == "x" || kw == "z" || kw == "cx" || kw == "u";
        if (is_gate && !doc.directives.empty()) p.fail(p.keyword(), "gate after a measure/pair directive");

        if (kw == "init") {
            if (has_init) p.fail(p.keyword(), "duplicate init");
            if (!doc.gates.empty() || !doc.directives.empty()) p.fail(p.keyword(), "init must precede gates");
            p.expect_args(1, 1);
            const auto& bits = p.arg(0);
            if (bits.text.size() != doc.n)
                p.fail(bits, "init needs " + std::to_string(doc.n) + " bits, got " + std::to_string(bits.text.size()));
            for (std::size_t k = 0; k < bits.text.size(); ++k) {
                const char ch = bits.text[k];
                if (ch != '0' && ch != '1') throw ParseError(line_no, bits.column + k, "init bits must be 0 or 1");
                doc.init[k] = ch == '1';
            }
            has_init = true;
        } else if (kw == "h") {
            p.expect_args(1, doc.n);
            QubitSet qubits;
            for (std::size_t k = 0; k < p.args(); ++k) {
                const auto q = p.index(k, doc.n);
                if (qubits.contains(q)) p.fail(p.arg(k), "qubit listed twice");
                qubits.insert(q);
            }
            doc.gates.emplace_back(gates::H{qubits});
        } else if (kw == "x") {
            p.expect_args(1, 1);
            doc.gates.emplace_back(gates::X{p.index(0, doc.n)});
        } else if (kw == "z") {
            p.expect_args(1, 1);
            doc.gates.emplace_back(gates::Z{p.index(0, doc.n)});
        } else if (kw == "cx") {
            p.expect_args(2, 2);
            const auto c = p.index(0, doc.n);
            const auto t = p.index(1, doc.n);
            if (c == t) p.fail(p.arg(1), "control equals target");
            doc.gates.emplace_back(gates::CNOT{c, t});
        } else if (kw == "u") {
            p.expect_args(6, 6);
            const auto q = p.index(0, doc.n);
            const Complex a1{p.number(1), p.number(2)};
            const Complex a2{p.number(3), p.number(4)};
            const double alpha = p.number(5);
            try {
                doc.gates.emplace_back(gates::U1Q{q, SingleQubitUnitary(a1, a2, alpha, 1e-6)});
            } catch (const std::invalid_argument&) {
                p.fail(p.arg(1), "rotation is not unitary: |a1|^2 + |a2|^2 must be 1");
            }
        } else if (kw == "measure") {
            p.expect_args(2, 3);
            MeasureDirective m;
            m.qubit = p.index(0, doc.n);
            const auto b = p.arg(1).text;
            if (b == "c")
                m.basis = Basis::C;
            else if (b == "h")
                m.basis = Basis::H;
            else
                p.fail(p.arg(1), "basis must be 'c' or 'h'");
            if (p.args() == 3) {
                const auto o = p.arg(2).text;
                if (o != "0" && o != "1") p.fail(p.arg(2), "outcome must be 0 or 1");
                m.outcome = o == "1";
            }
            doc.directives.emplace_back(m);
        } else if (kw == "pair") {
            p.expect_args(2, 2);
            const auto a = p.index(0, doc.n);
            const auto b = p.index(1, doc.n);
            if (a == b) p.fail(p.arg(1), "pair needs two distinct qubits");
            doc.directives.emplace_back(PairDirective{a, b});
        } else {
            p.fail(p.keyword(), "unknown keyword '" + std::string(kw) + "'");
        }
    }
    if (!declared) throw ParseError(1, 1, "missing 'qubits N' declaration");
    return doc;
}

std::string to_source(const CircuitDocument& doc) {
    std::string out = "qubits " + std::to_string(doc.n) + "\n";
    if (std::find(doc.init.begin(), doc.init.end(), true) != doc.init.end()) {
        out += "init ";
        for (bool b : doc.init) out += b ? '1' : '0';
        out += '\n';
    }
    auto idx = [](std::size_t q) { return std::to_string(q + 1); };
    for (const auto& g : doc.gates) {
        std::visit(detail::overloaded{
                       [&](const gates::H& h) {
                           out += "h";
                           for (auto q : h.qubits.indices()) out += " " + idx(q);
                       },
                       [&](const gates::X& x) { out += "x " + idx(x.qubit); },
                       [&](const gates::Z& z) { out += "z " + idx(z.qubit); },
                       [&](const gates::CNOT& c) { out += "cx " + idx(c.control) + " " + idx(c.target); },
                       [&](const gates::U1Q& u) {
                           char buf[160];
                           std::snprintf(buf, sizeof buf, " %.17g %.17g %.17g %.17g %.17g", u.u.a1().real(), u.u.a1().imag(),
                                         u.u.a2().real(), u.u.a2().imag(), u.u.alpha());
                           out += "u " + idx(u.qubit) + buf;
                       },
                   },
                   g);
        out += '\n';
    }
    for (const auto& d : doc.directives) {
        std::visit(detail::overloaded{
                       [&](const MeasureDirective& m) {
                           out += "measure " + idx(m.qubit) + " " + basis_char(m.basis);
                           if (m.outcome) out += *m.outcome ? " 1" : " 0";
                       },
                       [&](const PairDirective& p) { out += "pair " + idx(p.first) + " " + idx(p.second); },
                   },
                   d);
        out += '\n';
    }
    return out;
}

}  // namespace qil
