#pragma once

#include <span>
#include <string>
#include <vector>

#include "rsinf/field_elem.hpp"
#include "rsinf/partition.hpp"

namespace rsinf {

using FiniteSeq = std::vector<FieldElem>;

// Young tableau over one integrality class: rows strictly decreasing under
// >_Z, columns nonincreasing, corner at the top left.
struct Tableau {
    std::vector<std::vector<FieldElem>> rows;

    bool empty() const { return rows.empty(); }
    std::size_t box_count() const;
    Partition shape() const;
    // Anchor of the entries; the tableau must be nonempty.
    const Anchor& anchor() const { return rows.front().front().anchor(); }
    std::string to_string() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

// Throws std::invalid_argument naming the first violated invariant.
void validate(const Tableau& t);

// One tableau per integrality class, ordered by first appearance of the class
// in the generating sequence.
struct TableauFamily {
    std::vector<Tableau> tableaux;

    std::size_t box_count() const;
    friend bool operator==(const TableauFamily&, const TableauFamily&) = default;
};

void validate(const TableauFamily& family);

// Equality as a set of tableaux keyed by class, ignoring listing order.
bool same_tableaux(const TableauFamily& a, const TableauFamily& b);

FiniteSeq parse_seq(std::string_view comma_separated);
std::string format_seq(std::span<const FieldElem> seq);

}  // namespace rsinf
