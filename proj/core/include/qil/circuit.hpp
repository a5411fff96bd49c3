#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qil/gate.hpp"

namespace qil {

/// `measure I c|h [0|1]`
struct MeasureDirective {
    std::size_t qubit = 0;
    Basis basis = Basis::C;
    std::optional<bool> outcome;
    friend bool operator==(const MeasureDirective&, const MeasureDirective&) = default;
};

/// `pair I J`
struct PairDirective {
    std::size_t first = 0;
    std::size_t second = 0;
    friend bool operator==(const PairDirective&, const PairDirective&) = default;
};

using Directive = std::variant<MeasureDirective, PairDirective>;

/// A parsed circuit file. Qubit indices are 0-based here and 1-based in the text.
struct CircuitDocument {
    std::size_t n = 0;
    std::vector<bool> init;
    Circuit gates;
    /// Measurement script and pair queries, in source order, applied after the gates.
    std::vector<Directive> directives;

    bool has_arbitrary_rotations() const;
    friend bool operator==(const CircuitDocument&, const CircuitDocument&) = default;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, std::size_t column, std::string message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

  private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

/// Parses the line-oriented circuit language:
///
///     qubits N                       (once, before anything else)
///     init BITSTRING                 (optional, default all zeros)
///     h I [I...]                     (one simultaneous Hadamard layer)
///     x I | z I | cx CTRL TGT
///     u I a1re a1im a2re a2im alpha  (arbitrary rotation, statevector only)
///     measure I c|h [0|1]
///     pair I J
///
/// '#' starts a comment. Gates must precede measure/pair directives.
CircuitDocument parse_circuit(std::string_view text);

/// Canonical source text; parse_circuit(to_source(doc)) == doc.
std::string to_source(const CircuitDocument& doc);

}  // namespace qil
