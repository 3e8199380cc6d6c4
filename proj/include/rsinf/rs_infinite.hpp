#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rsinf/partition.hpp"
#include "rsinf/rs_finite.hpp"

namespace rsinf {

// NegInts = ..., -2, -1; PosInts = 1, 2, ...; AllInts = every integer.
enum class Axis { neg, pos, all };

std::string to_string(Axis axis);

// An infinite sequence that is a finite "middle" block at positions
// [start, start + middle.size()) and follows a tail law outside it:
// value(i) = base + Step * i. Step 0 gives eventually constant sequences,
// Step -1 the arithmetic tails c - i of stably decreasing ones.
//
// Canonical form: middle entries agreeing with the neighbouring tail law are
// trimmed. On NegInts the middle always ends at -1, on PosInts it starts at 1.
template <int Step>
class TailedSeq {
public:
    TailedSeq() = default;
    // Throws std::invalid_argument when the tails do not match the axis or the
    // middle does not sit flush against the finite end of a half-line.
    TailedSeq(Axis axis, std::optional<FieldElem> left_base, std::vector<FieldElem> middle,
              std::int64_t start, std::optional<FieldElem> right_base);

    // Exceptions listed in position order, flush against the finite end.
    static TailedSeq neg(FieldElem left_base, std::vector<FieldElem> exceptions);
    static TailedSeq pos(std::vector<FieldElem> exceptions, FieldElem right_base);
    // Exceptions at positions 1..m.
    static TailedSeq all(FieldElem left_base, std::vector<FieldElem> exceptions,
                         FieldElem right_base);

    Axis axis() const { return axis_; }
    const std::optional<FieldElem>& left_base() const { return left_; }
    const std::optional<FieldElem>& right_base() const { return right_; }
    const std::vector<FieldElem>& middle() const { return middle_; }
    std::int64_t start() const { return start_; }
    // one past the last middle position
    std::int64_t end() const { return start_ + static_cast<std::int64_t>(middle_.size()); }

    bool contains(std::int64_t i) const;
    FieldElem at(std::int64_t i) const;

    // Same sequence with every position moved by t: result(i) = at(i - t).
    // Only meaningful on AllInts.
    TailedSeq translated(std::int64_t t) const;
    // Adds k to every value.
    TailedSeq value_shifted(std::int64_t k) const;

    friend bool operator==(const TailedSeq&, const TailedSeq&) = default;

private:
    void canonicalize();

    Axis axis_ = Axis::all;
    std::optional<FieldElem> left_;
    std::optional<FieldElem> right_;
    std::vector<FieldElem> middle_;
    std::int64_t start_ = 0;
};

using EventuallyConstantSeq = TailedSeq<0>;
using StablyDecreasingSeq = TailedSeq<-1>;

// h^- and h^+: the limits at -inf and +inf.
inline std::optional<FieldElem> h_minus(const EventuallyConstantSeq& f) { return f.left_base(); }
inline std::optional<FieldElem> h_plus(const EventuallyConstantSeq& f) { return f.right_base(); }

// f+(i) = f(i) - i.
StablyDecreasingSeq plus_rho(const EventuallyConstantSeq& f);

// f*(i) = -f(-i); swaps NegInts and PosInts.
template <int Step>
TailedSeq<Step> star_seq(const TailedSeq<Step>& f);

// Inserts f1 at the given strictly increasing positions of f2 (see the
// piecewise definition in the README). On NegInts the right end is kept
// fixed and the left part moves outward; otherwise the left part is kept.
StablyDecreasingSeq ins(std::span<const std::int64_t> positions, std::span<const FieldElem> f1,
                        const StablyDecreasingSeq& f2);

struct InfiniteRSResult {
    // The infinite first row, indexed like the input on its infinite side.
    StablyDecreasingSeq first_row;
    // Rows 2, 3, ... of the tableau holding the first row; may be empty.
    Tableau rest_of_first;
    // Finite tableaux of the other classes, by first appearance.
    std::vector<Tableau> others;
    // seq(rest_of_first, others...)
    FiniteSeq underline;
    // extent past the exceptional block at which the adaptive loop stopped
    std::int64_t window = 0;

    std::size_t rank() const { return underline.size(); }
    bool same_output(const InfiniteRSResult& other) const {
        return first_row == other.first_row && rest_of_first == other.rest_of_first &&
               others == other.others && underline == other.underline;
    }
};

// RS of the finite window that extends `extent` positions beyond the middle
// on each infinite side (extent >= 1). PosInts input is run through its star
// first.
InfiniteRSResult rs_infinite_window(const StablyDecreasingSeq& g, std::int64_t extent);

// Grows the window by doubling from (middle size + 8) until two consecutive
// windows give the same output. Throws std::invalid_argument on AllInts input
// whose two tails lie in different classes.
InfiniteRSResult rs_infinite(const StablyDecreasingSeq& g);

// Conservative window size from which the output no longer changes:
// middle size + integer spread of the middle relative to the tail law + r,
// at least 1.
std::int64_t stabilization_bound(const StablyDecreasingSeq& g, std::size_t rank);

// Whether positions satisfy i_{k+1} > i_k + 1 and the entry of the first row
// at i_r exceeds (or is incomparable with) every underline entry.
bool insertion_positions_valid(std::span<const std::int64_t> positions,
                               const InfiniteRSResult& result);

// Y_i = (h_minus + r + i) - w_i where w_1, w_2, ... read the first row from
// its right end; returns the nonzero values. NegInts results only.
Partition partition_from_row(const InfiniteRSResult& result, const FieldElem& h_minus,
                             std::size_t r);

struct BlockIdeal {
    std::int64_t r = 0;
    std::int64_t g = 0;
    Partition X;
    Partition Y;
    friend bool operator==(const BlockIdeal&, const BlockIdeal&) = default;
};

// NegInts: (r, 0, empty, Y(f)); PosInts: (r(f*), 0, Y(f*), empty);
// AllInts: (r, h^- - h^+ + r, empty, empty).
BlockIdeal block_ideal(const EventuallyConstantSeq& f);

}  // namespace rsinf
