#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qil {

/// Measurement basis of a qubit variable: C is {|0>,|1>}, H is {|+>,|->}.
enum class Basis : std::uint8_t { C = 0, H = 1 };

constexpr Basis complement(Basis b) noexcept { return b == Basis::C ? Basis::H : Basis::C; }

constexpr char basis_char(Basis b) noexcept { return b == Basis::C ? 'c' : 'h'; }

constexpr std::size_t basis_index(Basis b) noexcept { return static_cast<std::size_t>(b); }

/// Largest system the symbolic layer accepts; one machine word per equation.
inline constexpr std::size_t kMaxSymbolicQubits = 64;

/// A set of qubit indices, stored as a bit mask (bit i = qubit i).
class QubitSet {
  public:
    constexpr QubitSet() noexcept = default;
    constexpr explicit QubitSet(std::uint64_t bits) noexcept : bits_(bits) {}

    static constexpr QubitSet single(std::size_t q) noexcept { return QubitSet{std::uint64_t{1} << q}; }
    static constexpr QubitSet pair(std::size_t a, std::size_t b) noexcept {
        return QubitSet{(std::uint64_t{1} << a) | (std::uint64_t{1} << b)};
    }
    /// Every qubit of an n-qubit register.
    static constexpr QubitSet all(std::size_t n) noexcept {
        return QubitSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(std::size_t q) const noexcept { return (bits_ >> q) & 1U; }
    /// Index of the lowest member; undefined on an empty set.
    constexpr std::size_t lowest() const noexcept { return static_cast<std::size_t>(std::countr_zero(bits_)); }
    constexpr bool is_subset_of(QubitSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(QubitSet other) const noexcept { return (bits_ & other.bits_) != 0; }

    constexpr QubitSet& insert(std::size_t q) noexcept {
        bits_ |= std::uint64_t{1} << q;
        return *this;
    }
    constexpr QubitSet& erase(std::size_t q) noexcept {
        bits_ &= ~(std::uint64_t{1} << q);
        return *this;
    }
    constexpr QubitSet& toggle(std::size_t q) noexcept {
        bits_ ^= std::uint64_t{1} << q;
        return *this;
    }

    friend constexpr QubitSet operator^(QubitSet a, QubitSet b) noexcept { return QubitSet{a.bits_ ^ b.bits_}; }
    friend constexpr QubitSet operator&(QubitSet a, QubitSet b) noexcept { return QubitSet{a.bits_ & b.bits_}; }
    friend constexpr QubitSet operator|(QubitSet a, QubitSet b) noexcept { return QubitSet{a.bits_ | b.bits_}; }
    constexpr QubitSet operator~() const noexcept { return QubitSet{~bits_}; }
    constexpr QubitSet& operator^=(QubitSet o) noexcept {
        bits_ ^= o.bits_;
        return *this;
    }
    friend constexpr bool operator==(QubitSet, QubitSet) noexcept = default;
    friend constexpr auto operator<=>(QubitSet, QubitSet) noexcept = default;

    /// Members in ascending order.
    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(size());
        for (auto b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
        return out;
    }

  private:
    std::uint64_t bits_ = 0;
};

/// One of the two value variables of a qubit, q_i(c) or q_i(h).
struct QubitVar {
    std::size_t qubit = 0;
    Basis basis = Basis::C;

    friend constexpr bool operator==(const QubitVar&, const QubitVar&) = default;
    friend constexpr auto operator<=>(const QubitVar&, const QubitVar&) = default;
};

/// "q3(c)" using 1-based qubit numbering.
inline std::string to_string(const QubitVar& v) {
    return "q" + std::to_string(v.qubit + 1) + "(" + basis_char(v.basis) + ")";
}

}  // namespace qil
