#include "qil/parity.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

namespace qil {

std::string to_string(const ParityEquation& eq) {
    std::string out;
    for (auto q : eq.members.indices()) {
        if (!out.empty()) out += '+';
        out += std::to_string(q + 1);
    }
    out += eq.rhs ? "=1" : "=0";
    return out;
}

EquationSet::EquationSet(Basis basis, std::vector<Row> rows) : basis_(basis) { rebuild(std::move(rows)); }

void EquationSet::rebuild(std::vector<Row> rows) {
    rows_.clear();
    for (auto& r : rows) insert(r);
}

bool EquationSet::insert(Row row) {
    row = reduce(row);
    if (row.members.empty()) {
        if (row.rhs) throw InternalInconsistency("parity reduction produced 0 = 1");
        return false;
    }
    const auto pivot = row.members.lowest();
    for (auto& r : rows_) {
        if (r.members.contains(pivot)) {
            r.members ^= row.members;
            r.rhs ^= row.rhs;
        }
    }
    auto pos = std::find_if(rows_.begin(), rows_.end(), [pivot](const Row& r) { return r.members.lowest() > pivot; });
    rows_.insert(pos, row);
    return true;
}

EquationSet::Row EquationSet::reduce(Row row) const {
    for (const auto& r : rows_) {
        if (row.members.contains(r.members.lowest())) {
            row.members ^= r.members;
            row.rhs ^= r.rhs;
        }
    }
    return row;
}

std::optional<bool> EquationSet::implied_value(QubitSet members) const {
    auto residual = reduce({members, false});
    if (!residual.members.empty()) return std::nullopt;
    return residual.rhs;
}

QubitSet EquationSet::support() const noexcept {
    QubitSet s;
    for (const auto& r : rows_) s = s | r.members;
    return s;
}

EquationSet EquationSet::avoiding(QubitSet mask) const {
    std::vector<Row> work = rows_;
    for (auto col : (mask & support()).indices()) {
        auto it = std::find_if(work.begin(), work.end(), [col](const Row& r) { return r.members.contains(col); });
        if (it == work.end()) continue;
        const Row pivot = *it;
        work.erase(it);
        for (auto& r : work) {
            if (r.members.contains(col)) {
                r.members ^= pivot.members;
                r.rhs ^= pivot.rhs;
            }
        }
    }
    return EquationSet(basis_, std::move(work));
}

void EquationSet::flip_rhs_containing(std::size_t q) noexcept {
    for (auto& r : rows_)
        if (r.members.contains(q)) r.rhs = !r.rhs;
}

std::vector<ParityEquation> EquationSet::equations() const {
    std::vector<ParityEquation> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back({basis_, r.members, r.rhs});
    return out;
}

std::vector<EquationSet::Row> EquationSet::chain_rows() const {
    std::vector<Row> out(rows_.size());
    // XOR basis of the rows with larger pivots, one vector per highest bit, descending.
    std::vector<Row> by_top;
    auto top = [](const Row& r) { return std::bit_width(r.members.bits()); };
    for (std::size_t k = rows_.size(); k-- > 0;) {
        Row x = rows_[k];
        for (const auto& b : by_top)
            if (x.members.bits() & (std::uint64_t{1} << (top(b) - 1))) {
                x.members ^= b.members;
                x.rhs ^= b.rhs;
            }
        out[k] = x;
        by_top.insert(std::find_if(by_top.begin(), by_top.end(), [&](const Row& b) { return top(b) < top(x); }), x);
    }
    return out;
}

std::string EquationSet::to_string() const {
    if (rows_.empty()) return "-";
    std::string out;
    for (const auto& r : chain_rows()) {
        if (!out.empty()) out += "; ";
        out += qil::to_string(ParityEquation{basis_, r.members, r.rhs});
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

EquationSet EquationSet::parse(Basis basis, std::string_view text) {
    std::vector<Row> rows;
    text = trim(text);
    if (text.empty() || text == "-") return EquationSet(basis);
    while (!text.empty()) {
        auto semi = text.find(';');
        auto item = trim(text.substr(0, semi));
        text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
        auto eq = item.find('=');
        if (eq == std::string_view::npos) throw std::invalid_argument("equation without '=': " + std::string(item));
        auto rhs = trim(item.substr(eq + 1));
        if (rhs != "0" && rhs != "1") throw std::invalid_argument("rhs must be 0 or 1: " + std::string(item));
        Row row{{}, rhs == "1"};
        auto lhs = trim(item.substr(0, eq));
        while (!lhs.empty()) {
            auto plus = lhs.find('+');
            auto tok = trim(lhs.substr(0, plus));
            lhs = plus == std::string_view::npos ? std::string_view{} : lhs.substr(plus + 1);
            std::size_t idx = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), idx);
            if (ec != std::errc{} || p != tok.data() + tok.size() || idx == 0 || idx > kMaxSymbolicQubits)
                throw std::invalid_argument("bad qubit index '" + std::string(tok) + "'");
            row.members.toggle(idx - 1);
        }
        rows.push_back(row);
    }
    return EquationSet(basis, std::move(rows));
}

}  // namespace qil
