#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rsinf/partition.hpp"
#include "rsinf/rs_infinite.hpp"

namespace rsinf {

// Order blocks of a splitting Borel order. Listed values follow the block's
// own order; tails are the constant taken on the infinite part.
struct FiniteRegion {
    std::vector<FieldElem> values;
    friend bool operator==(const FiniteRegion&, const FiniteRegion&) = default;
};
// order type omega: exceptions first, then the constant tail
struct OmegaRegion {
    std::vector<FieldElem> exceptions;
    FieldElem tail;
    friend bool operator==(const OmegaRegion&, const OmegaRegion&) = default;
};
// order type omega*: the constant tail, then the exceptions
struct OmegaStarRegion {
    FieldElem tail;
    std::vector<FieldElem> exceptions;
    friend bool operator==(const OmegaStarRegion&, const OmegaStarRegion&) = default;
};
// order type zeta
struct ZetaRegion {
    FieldElem left_tail;
    std::vector<FieldElem> exceptions;
    FieldElem right_tail;
    friend bool operator==(const ZetaRegion&, const ZetaRegion&) = default;
};

using Region = std::variant<FiniteRegion, OmegaRegion, OmegaStarRegion, ZetaRegion>;

// A splitting Borel order (concatenation of region order types) together with
// a locally constant weight on it.
class WeightSpec {
public:
    // Throws std::invalid_argument when no region is infinite.
    explicit WeightSpec(std::vector<Region> regions);

    const std::vector<Region>& regions() const { return regions_; }
    friend bool operator==(const WeightSpec&, const WeightSpec&) = default;

private:
    std::vector<Region> regions_;
};

struct Validity {
    // first pair of infinite-tail constants in different classes
    std::optional<std::pair<FieldElem, FieldElem>> conflict;

    bool ok() const { return !conflict; }
    std::string reason() const;
};

// The annihilator is nonzero iff all infinite-tail constants share one class.
Validity validate(const WeightSpec& spec);

struct Segmentation {
    EventuallyConstantSeq head;                 // PosInts
    std::vector<EventuallyConstantSeq> middles;  // AllInts
    EventuallyConstantSeq tail;                 // NegInts
};

// Regrouping into one omega head, zeta middles and one omega* tail; each
// infinite constant is split between the two segments around it. Throws
// std::invalid_argument when validate fails.
Segmentation segment(const WeightSpec& spec);

struct Quadruple {
    std::int64_t r = 0;
    std::int64_t g = 0;
    Partition X;
    Partition Y;
    friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

class IdealDescriptor {
public:
    static IdealDescriptor zero(std::string reason) {
        IdealDescriptor d;
        d.reason_ = std::move(reason);
        return d;
    }
    static IdealDescriptor proper(Quadruple q) {
        IdealDescriptor d;
        d.quadruple_ = std::move(q);
        return d;
    }

    bool is_zero() const { return !quadruple_; }
    const Quadruple& quadruple() const { return quadruple_.value(); }
    const std::string& reason() const { return reason_; }
    std::string to_string() const;

    friend bool operator==(const IdealDescriptor& a, const IdealDescriptor& b) {
        return a.quadruple_ == b.quadruple_;
    }

private:
    std::optional<Quadruple> quadruple_;
    std::string reason_;
};

struct Classification {
    BlockIdeal head;
    std::vector<BlockIdeal> middles;
    BlockIdeal tail;
    Quadruple total;
};

// Per-segment ideals and their sum.
Classification classify_segments(const Segmentation& segments);

IdealDescriptor classify(const WeightSpec& spec);

}  // namespace rsinf
