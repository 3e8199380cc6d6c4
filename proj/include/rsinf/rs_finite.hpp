#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "rsinf/tableau.hpp"

namespace rsinf {

// A value tagged with its 1-based position in the generating sequence.
struct IndexedValue {
    FieldElem value;
    std::size_t index = 0;
    friend bool operator==(const IndexedValue&, const IndexedValue&) = default;
};

// Total order on pairs of one class: (a, i) < (b, j) iff a >_Z b, or a = b
// and i > j.
bool pair_precedes(const IndexedValue& x, const IndexedValue& y);

// Recording tableau of pairs for one class, as built by Schensted insertion.
struct PairTableau {
    std::vector<std::vector<IndexedValue>> rows;

    Tableau values() const;
    std::vector<std::vector<std::size_t>> indices() const;
    friend bool operator==(const PairTableau&, const PairTableau&) = default;
};

// State after each insertion step; tableaux listed by first appearance.
using RsState = std::vector<PairTableau>;

std::vector<RsState> rs_trace(std::span<const FieldElem> seq);

TableauFamily rs(std::span<const FieldElem> seq);

// rs(f_1 - 1, ..., f_n - n)
TableauFamily j_map(std::span<const FieldElem> seq);

FiniteSeq rho_shifted(std::span<const FieldElem> seq);

// Rows of each tableau, shorter rows first and among rows of equal length the
// one with the smaller first entry first; tableaux concatenated in order.
FiniteSeq seq_of(std::span<const Tableau> tableaux);
inline FiniteSeq seq_of(const TableauFamily& family) { return seq_of(family.tableaux); }

// Whether swapping 1-based positions i, i+1 is an admissible interchange.
// `shifted` evaluates the conditions on f_j - j. Throws std::out_of_range for
// i outside [1, n-1].
bool admissible(std::span<const FieldElem> f, std::size_t i, bool shifted);

// Exchanges positions i and i+1 (1-based). The shifted move exchanges the
// entries of f + rho, so f(i+1) - 1 lands at i and f(i) + 1 at i+1.
FiniteSeq swapped(std::span<const FieldElem> f, std::size_t i, bool shifted = false);

struct InterchangeStep {
    std::size_t position = 0;
    bool shifted = false;
    friend bool operator==(const InterchangeStep&, const InterchangeStep&) = default;
};

struct InterchangePath {
    std::vector<InterchangeStep> steps;
    friend bool operator==(const InterchangePath&, const InterchangePath&) = default;
};

// Breadth-first search; the returned path is a shortest one.
std::optional<InterchangePath> connected(std::span<const FieldElem> from,
                                         std::span<const FieldElem> to, bool shifted);

// Every sequence reachable from f by (shifted) admissible interchanges.
std::set<FiniteSeq> reachable(std::span<const FieldElem> f, bool shifted);

// j(f) = j(f' + k). Without k, tries every integer k that matches an entry
// of f' to an entry of f in the same class.
bool joseph_equal(std::span<const FieldElem> f, std::span<const FieldElem> f_prime,
                  std::optional<std::int64_t> k = std::nullopt);

FiniteSeq shifted_seq(std::span<const FieldElem> f, std::int64_t k);

}  // namespace rsinf
