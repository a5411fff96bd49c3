#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qil/basis.hpp"

namespace qil {

/// Raised when reduction produces 0 = 1. Always a bug, never a physical state.
class InternalInconsistency : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// XOR constraint over the variables of one basis: (+)_{i in members} q_i(basis) = rhs.
struct ParityEquation {
    Basis basis = Basis::C;
    QubitSet members;
    bool rhs = false;

    friend bool operator==(const ParityEquation&, const ParityEquation&) = default;
};

/// "1+2+3=0" with 1-based indices.
std::string to_string(const ParityEquation& eq);

/// A basis-pure set of parity equations kept in reduced row-echelon form over GF(2).
///
/// Pivot of a row is its lowest qubit index; rows are sorted by ascending pivot and every
/// pivot column is cleared from all other rows. Two sets therefore span the same affine
/// constraint space iff they compare equal.
class EquationSet {
  public:
    struct Row {
        QubitSet members;
        bool rhs = false;
        friend bool operator==(const Row&, const Row&) = default;
    };

    EquationSet() = default;
    explicit EquationSet(Basis basis) : basis_(basis) {}
    EquationSet(Basis basis, std::vector<Row> rows);

    /// Parses "1+2=0; 2+3=1" (1-based indices). An empty string or "-" is the empty set.
    static EquationSet parse(Basis basis, std::string_view text);

    Basis basis() const noexcept { return basis_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    bool empty() const noexcept { return rows_.empty(); }
    const std::vector<Row>& rows() const noexcept { return rows_; }
    std::vector<ParityEquation> equations() const;

    /// Another canonical generating set, used for text: for each pivot p, the span element
    /// with lowest qubit p that is smallest when higher qubits weigh more. Chains such as
    /// 1+2, 2+3, 3+4 come out as written instead of as a star around the last qubit.
    std::vector<Row> chain_rows() const;

    /// Union of the members of all rows.
    QubitSet support() const noexcept;

    /// Adds a constraint and re-reduces. Returns false if it was already implied.
    /// Throws InternalInconsistency if it contradicts the set.
    bool insert(Row row);

    /// The right-hand side forced on `members` by the span, if the members lie in it.
    std::optional<bool> implied_value(QubitSet members) const;

    /// Residual of `row` after reduction by the stored rows.
    Row reduce(Row row) const;

    /// Generating set of the sub-span whose elements avoid every qubit of `mask`.
    EquationSet avoiding(QubitSet mask) const;
    /// Generating set of the sub-span whose elements lie inside `mask`.
    EquationSet within(QubitSet mask, std::size_t n) const { return avoiding(~mask & QubitSet::all(n)); }

    /// Same constraints tagged with the other basis.
    EquationSet relabeled(Basis basis) const {
        EquationSet out = *this;
        out.basis_ = basis;
        return out;
    }

    /// Applies `f` to every row's members (a linear map on GF(2)^n) and re-reduces.
    template <typename F>
    EquationSet transformed(F&& f) const {
        std::vector<Row> mapped;
        mapped.reserve(rows_.size());
        for (const auto& r : rows_) mapped.push_back({f(r.members), r.rhs});
        return EquationSet(basis_, std::move(mapped));
    }

    /// Flips the rhs of every row containing qubit q. Keeps the form reduced.
    void flip_rhs_containing(std::size_t q) noexcept;

    /// chain_rows() as "1+2=0; 2+3=0", or "-" when empty.
    std::string to_string() const;

    friend bool operator==(const EquationSet&, const EquationSet&) = default;

  private:
    void rebuild(std::vector<Row> rows);

    Basis basis_ = Basis::C;
    std::vector<Row> rows_;
};

}  // namespace qil
