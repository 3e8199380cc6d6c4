#include "rsinf/rs_infinite.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace rsinf {

std::string to_string(Axis axis) {
    switch (axis) {
        case Axis::neg: return "neg";
        case Axis::pos: return "pos";
        case Axis::all: return "all";
    }
    return "?";
}

template <int Step>
TailedSeq<Step>::TailedSeq(Axis axis, std::optional<FieldElem> left_base,
                           std::vector<FieldElem> middle, std::int64_t start,
                           std::optional<FieldElem> right_base)
    : axis_(axis), left_(std::move(left_base)), right_(std::move(right_base)),
      middle_(std::move(middle)), start_(start) {
    const bool need_left = axis_ != Axis::pos;
    const bool need_right = axis_ != Axis::neg;
    if (need_left != left_.has_value() || need_right != right_.has_value()) {
        throw std::invalid_argument("tail constants do not match the " + to_string(axis_) + " axis");
    }
    if (axis_ == Axis::neg) {
        if (middle_.empty()) start_ = 0;
        if (end() != 0) throw std::invalid_argument("NegInts block must end at position -1");
    }
    if (axis_ == Axis::pos) {
        if (middle_.empty()) start_ = 1;
        if (start_ != 1) throw std::invalid_argument("PosInts block must start at position 1");
    }
    canonicalize();
}

template <int Step>
TailedSeq<Step> TailedSeq<Step>::neg(FieldElem left_base, std::vector<FieldElem> exceptions) {
    auto m = static_cast<std::int64_t>(exceptions.size());
    return TailedSeq(Axis::neg, std::move(left_base), std::move(exceptions), -m, std::nullopt);
}

template <int Step>
TailedSeq<Step> TailedSeq<Step>::pos(std::vector<FieldElem> exceptions, FieldElem right_base) {
    return TailedSeq(Axis::pos, std::nullopt, std::move(exceptions), 1, std::move(right_base));
}

template <int Step>
TailedSeq<Step> TailedSeq<Step>::all(FieldElem left_base, std::vector<FieldElem> exceptions,
                                     FieldElem right_base) {
    return TailedSeq(Axis::all, std::move(left_base), std::move(exceptions), 1, std::move(right_base));
}

template <int Step>
void TailedSeq<Step>::canonicalize() {
    if (left_) {
        std::size_t drop = 0;
        while (drop < middle_.size() &&
               middle_[drop] == left_->shifted(Step * (start_ + static_cast<std::int64_t>(drop)))) {
            ++drop;
        }
        middle_.erase(middle_.begin(), middle_.begin() + static_cast<std::ptrdiff_t>(drop));
        start_ += static_cast<std::int64_t>(drop);
    }
    if (right_) {
        while (!middle_.empty() && middle_.back() == right_->shifted(Step * (end() - 1))) {
            middle_.pop_back();
        }
    }
    if (middle_.empty()) {
        if (axis_ == Axis::neg) start_ = 0;
        if (axis_ == Axis::pos) start_ = 1;
        if (axis_ == Axis::all && *left_ == *right_) start_ = 0;
    }
}

template <int Step>
bool TailedSeq<Step>::contains(std::int64_t i) const {
    if (axis_ == Axis::neg) return i <= -1;
    if (axis_ == Axis::pos) return i >= 1;
    return true;
}

template <int Step>
FieldElem TailedSeq<Step>::at(std::int64_t i) const {
    if (!contains(i)) {
        throw std::out_of_range("position " + std::to_string(i) + " outside the " + to_string(axis_) + " axis");
    }
    if (i < start_) return left_->shifted(Step * i);
    if (i >= end()) return right_->shifted(Step * i);
    return middle_[static_cast<std::size_t>(i - start_)];
}

template <int Step>
TailedSeq<Step> TailedSeq<Step>::translated(std::int64_t t) const {
    if (axis_ != Axis::all) throw std::invalid_argument("only AllInts sequences can be translated");
    TailedSeq out = *this;
    out.start_ += t;
    out.left_ = left_->shifted(-Step * t);
    out.right_ = right_->shifted(-Step * t);
    out.canonicalize();
    return out;
}

template <int Step>
TailedSeq<Step> TailedSeq<Step>::value_shifted(std::int64_t k) const {
    TailedSeq out = *this;
    for (auto& v : out.middle_) v = v.shifted(k);
    if (out.left_) out.left_ = out.left_->shifted(k);
    if (out.right_) out.right_ = out.right_->shifted(k);
    return out;
}

template class TailedSeq<0>;
template class TailedSeq<-1>;

template <int Step>
TailedSeq<Step> star_seq(const TailedSeq<Step>& f) {
    Axis axis = f.axis() == Axis::neg ? Axis::pos : f.axis() == Axis::pos ? Axis::neg : Axis::all;
    std::vector<FieldElem> middle;
    for (auto it = f.middle().rbegin(); it != f.middle().rend(); ++it) middle.push_back(it->negated());
    std::optional<FieldElem> left, right;
    if (f.right_base()) left = f.right_base()->negated();
    if (f.left_base()) right = f.left_base()->negated();
    std::int64_t start = 1 - f.end();
    return TailedSeq<Step>(axis, left, std::move(middle), start, right);
}

template TailedSeq<0> star_seq(const TailedSeq<0>&);
template TailedSeq<-1> star_seq(const TailedSeq<-1>&);

StablyDecreasingSeq plus_rho(const EventuallyConstantSeq& f) {
    std::vector<FieldElem> middle;
    middle.reserve(f.middle().size());
    for (std::size_t k = 0; k < f.middle().size(); ++k) {
        middle.push_back(f.middle()[k].shifted(-(f.start() + static_cast<std::int64_t>(k))));
    }
    return StablyDecreasingSeq(f.axis(), f.left_base(), std::move(middle), f.start(), f.right_base());
}

StablyDecreasingSeq ins(std::span<const std::int64_t> positions, std::span<const FieldElem> f1,
                        const StablyDecreasingSeq& f2) {
    if (positions.size() != f1.size()) {
        throw std::invalid_argument("ins: number of positions differs from number of inserted values");
    }
    for (std::size_t t = 1; t < positions.size(); ++t) {
        if (positions[t] <= positions[t - 1]) throw std::invalid_argument("ins: positions must increase");
    }
    if (positions.empty()) return f2;
    const auto s = static_cast<std::int64_t>(f1.size());
    const std::int64_t first = positions.front();
    const std::int64_t last = positions.back();

    // t = number of inserted positions strictly below i
    auto inserted_before = [&](std::int64_t i) {
        return static_cast<std::int64_t>(std::lower_bound(positions.begin(), positions.end(), i) -
                                         positions.begin());
    };
    auto inserted_at = [&](std::int64_t i) -> std::optional<std::size_t> {
        auto it = std::lower_bound(positions.begin(), positions.end(), i);
        if (it != positions.end() && *it == i) return static_cast<std::size_t>(it - positions.begin());
        return std::nullopt;
    };

    if (f2.axis() == Axis::neg) {
        if (last > -1) throw std::invalid_argument("ins: NegInts positions must be negative");
        const std::int64_t lo = std::min(first, f2.start() - s);
        std::vector<FieldElem> middle;
        for (std::int64_t i = lo; i <= -1; ++i) {
            if (auto t = inserted_at(i)) {
                middle.push_back(f1[*t]);
            } else {
                // before i_1 every insertion is still to come, after i_r none
                middle.push_back(f2.at(i + s - inserted_before(i)));
            }
        }
        return StablyDecreasingSeq(Axis::neg, f2.left_base()->shifted(-s), std::move(middle), lo,
                                   std::nullopt);
    }

    if (f2.axis() == Axis::pos && first < 1) {
        throw std::invalid_argument("ins: PosInts positions must be positive");
    }
    std::int64_t lo = std::min(first, f2.start());
    if (f2.axis() == Axis::pos) lo = 1;
    const std::int64_t hi = std::max(last, f2.end() - 1 + s);
    std::vector<FieldElem> middle;
    for (std::int64_t i = lo; i <= hi; ++i) {
        if (auto t = inserted_at(i)) {
            middle.push_back(f1[*t]);
        } else {
            middle.push_back(f2.at(i - inserted_before(i)));
        }
    }
    std::optional<FieldElem> left = f2.left_base();
    return StablyDecreasingSeq(f2.axis(), left, std::move(middle), lo, f2.right_base()->shifted(s));
}

namespace {

void require_almost_integral(const StablyDecreasingSeq& g) {
    if (g.axis() == Axis::all && !g.left_base()->same_class(*g.right_base())) {
        throw std::invalid_argument("two-sided sequence is not almost integral: tails " +
                                    g.left_base()->to_string() + " and " +
                                    g.right_base()->to_string() + " lie in different classes");
    }
}

}  // namespace

InfiniteRSResult rs_infinite_window(const StablyDecreasingSeq& input, std::int64_t extent) {
    if (extent < 1) throw std::invalid_argument("window extent must be positive");
    if (input.axis() == Axis::pos) return rs_infinite_window(star_seq(input), extent);
    require_almost_integral(input);

    const std::int64_t lo = input.start() - extent;
    const std::int64_t hi = input.axis() == Axis::neg ? -1 : input.end() - 1 + extent;
    FiniteSeq word;
    word.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t i = lo; i <= hi; ++i) word.push_back(input.at(i));

    TableauFamily family = rs(word);
    const Anchor& tail_class = input.left_base()->anchor();
    InfiniteRSResult out;
    out.window = extent;
    Tableau* infinite = nullptr;
    for (auto& t : family.tableaux) {
        if (t.anchor() == tail_class) {
            infinite = &t;
        } else {
            out.others.push_back(t);
        }
    }
    // the leftmost window entry is in the tail class, so this tableau exists
    const auto& row = infinite->rows.front();
    const auto len = static_cast<std::int64_t>(row.size());
    if (input.axis() == Axis::neg) {
        out.first_row = StablyDecreasingSeq(Axis::neg, row.front().shifted(-len), row, -len, std::nullopt);
    } else {
        out.first_row = StablyDecreasingSeq(Axis::all, row.front().shifted(lo), row, lo,
                                            row.back().shifted(lo + len - 1));
    }
    out.rest_of_first.rows.assign(infinite->rows.begin() + 1, infinite->rows.end());

    std::vector<Tableau> finite;
    if (!out.rest_of_first.empty()) finite.push_back(out.rest_of_first);
    finite.insert(finite.end(), out.others.begin(), out.others.end());
    out.underline = seq_of(finite);
    return out;
}

InfiniteRSResult rs_infinite(const StablyDecreasingSeq& g) {
    require_almost_integral(g);
    std::int64_t extent = static_cast<std::int64_t>(g.middle().size()) + 8;
    InfiniteRSResult prev = rs_infinite_window(g, extent);
    constexpr std::int64_t max_extent = std::int64_t{1} << 20;
    while (extent < max_extent) {
        extent *= 2;
        InfiniteRSResult cur = rs_infinite_window(g, extent);
        if (cur.same_output(prev)) return prev;
        prev = std::move(cur);
    }
    throw std::runtime_error("infinite RS did not stabilize within the window limit");
}

std::int64_t stabilization_bound(const StablyDecreasingSeq& input, std::size_t rank) {
    const StablyDecreasingSeq g = input.axis() == Axis::pos ? star_seq(input) : input;
    std::int64_t spread = 0;
    for (std::int64_t i = g.start(); i < g.end(); ++i) {
        FieldElem v = g.at(i);
        for (const auto& base : {g.left_base(), g.right_base()}) {
            if (!base) continue;
            if (auto d = int_difference(v, base->shifted(-i))) spread = std::max(spread, std::abs(*d));
        }
    }
    if (g.axis() == Axis::all) {
        spread = std::max(spread, std::abs(*int_difference(*g.left_base(), *g.right_base())));
    }
    return std::max<std::int64_t>(
        1, static_cast<std::int64_t>(g.middle().size()) + spread + static_cast<std::int64_t>(rank));
}

bool insertion_positions_valid(std::span<const std::int64_t> positions, const InfiniteRSResult& result) {
    if (positions.size() != result.underline.size()) return false;
    if (positions.empty()) return true;
    for (std::size_t k = 1; k < positions.size(); ++k) {
        if (positions[k] <= positions[k - 1] + 1) return false;
    }
    const auto& row = result.first_row;
    if (!row.contains(positions.back())) return false;
    const FieldElem pivot = row.at(positions.back());
    return std::all_of(result.underline.begin(), result.underline.end(), [&](const FieldElem& u) {
        auto c = compare_z(pivot, u);
        return c == ZOrder::greater || c == ZOrder::incomparable;
    });
}

Partition partition_from_row(const InfiniteRSResult& result, const FieldElem& h_minus, std::size_t r) {
    const auto& row = result.first_row;
    if (row.axis() != Axis::neg) throw std::invalid_argument("partition_from_row needs a NegInts row");
    const auto rank = static_cast<std::int64_t>(r);
    // positions -1 .. start-1 cover the irregular block and one law entry
    const std::int64_t count = -row.start() + 1;
    std::vector<int> values;
    for (std::int64_t i = 1; i <= count; ++i) {
        auto y = int_difference(h_minus.shifted(rank + i), row.at(-i));
        if (!y) throw std::invalid_argument("first row is not in the class of h^-");
        values.push_back(static_cast<int>(*y));
    }
    if (values.back() != 0) {
        throw std::logic_error("row deviations do not vanish at infinity");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0 || (i > 0 && values[i] > values[i - 1])) {
            throw std::logic_error("row deviations are not a partition");
        }
    }
    return Partition(std::move(values));
}

BlockIdeal block_ideal(const EventuallyConstantSeq& f) {
    BlockIdeal out;
    switch (f.axis()) {
        case Axis::neg: {
            auto res = rs_infinite(plus_rho(f));
            out.r = static_cast<std::int64_t>(res.rank());
            out.Y = partition_from_row(res, *f.left_base(), res.rank());
            break;
        }
        case Axis::pos: {
            auto dual = block_ideal(star_seq(f));
            out.r = dual.r;
            out.X = dual.Y;
            break;
        }
        case Axis::all: {
            auto diff = int_difference(*f.left_base(), *f.right_base());
            if (!diff) {
                throw std::invalid_argument("two-sided block is not almost integral: tails " +
                                            f.left_base()->to_string() + " and " +
                                            f.right_base()->to_string());
            }
            auto res = rs_infinite(plus_rho(f));
            out.r = static_cast<std::int64_t>(res.rank());
            out.g = *diff + out.r;
            if (out.g < 0) throw std::logic_error("negative Grassmann number for a two-sided block");
            break;
        }
    }
    return out;
}

}  // namespace rsinf
