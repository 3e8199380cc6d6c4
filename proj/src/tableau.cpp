#include "rsinf/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsinf {

std::size_t Tableau::box_count() const {
    std::size_t n = 0;
    for (const auto& row : rows) n += row.size();
    return n;
}

Partition Tableau::shape() const {
    std::vector<int> parts;
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

std::string Tableau::to_string() const {
    std::string s;
    for (const auto& row : rows) {
        s += "[" + format_seq(row) + "]";
    }
    return s;
}

void validate(const Tableau& t) {
    if (t.rows.empty()) return;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& row = t.rows[i];
        if (row.empty()) throw std::invalid_argument("tableau row " + std::to_string(i + 1) + " is empty");
        if (i > 0 && row.size() > t.rows[i - 1].size()) {
            throw std::invalid_argument("tableau row " + std::to_string(i + 1) + " is longer than the row above");
        }
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (!row[j].same_class(t.rows[0][0])) {
                throw std::invalid_argument("tableau mixes integrality classes");
            }
            if (j > 0 && !greater_z(row[j - 1], row[j])) {
                throw std::invalid_argument("tableau row " + std::to_string(i + 1) + " is not strictly decreasing");
            }
            if (i > 0 && !greater_eq_z(t.rows[i - 1][j], row[j])) {
                throw std::invalid_argument("tableau column " + std::to_string(j + 1) + " increases");
            }
        }
    }
}

std::size_t TableauFamily::box_count() const {
    std::size_t n = 0;
    for (const auto& t : tableaux) n += t.box_count();
    return n;
}

void validate(const TableauFamily& family) {
    for (std::size_t i = 0; i < family.tableaux.size(); ++i) {
        const auto& t = family.tableaux[i];
        if (t.empty()) throw std::invalid_argument("empty tableau in family");
        validate(t);
        for (std::size_t j = 0; j < i; ++j) {
            if (family.tableaux[j].anchor() == t.anchor()) {
                throw std::invalid_argument("two tableaux share the class " + t.anchor().to_string());
            }
        }
    }
}

bool same_tableaux(const TableauFamily& a, const TableauFamily& b) {
    if (a.tableaux.size() != b.tableaux.size()) return false;
    for (const auto& t : a.tableaux) {
        auto it = std::find_if(b.tableaux.begin(), b.tableaux.end(),
                               [&](const Tableau& u) { return u.anchor() == t.anchor(); });
        if (it == b.tableaux.end() || !(*it == t)) return false;
    }
    return true;
}

FiniteSeq parse_seq(std::string_view text) {
    FiniteSeq out;
    std::size_t start = 0;
    bool blank = text.find_first_not_of(" \t") == std::string_view::npos;
    if (blank) return out;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(FieldElem::parse(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string format_seq(std::span<const FieldElem> seq) {
    std::string s;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) s += ",";
        s += seq[i].to_string();
    }
    return s;
}

}  // namespace rsinf
