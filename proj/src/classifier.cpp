#include "rsinf/classifier.hpp"

#include <stdexcept>

namespace rsinf {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Flattened view: exceptional values and infinite constants in order.
struct Token {
    bool infinite = false;
    FieldElem value;
};

std::vector<Token> tokens(const WeightSpec& spec) {
    std::vector<Token> out;
    auto values = [&](const std::vector<FieldElem>& vs) {
        for (const auto& v : vs) out.push_back({false, v});
    };
    for (const auto& region : spec.regions()) {
        std::visit(overloaded{
                       [&](const FiniteRegion& r) { values(r.values); },
                       [&](const OmegaRegion& r) {
                           values(r.exceptions);
                           out.push_back({true, r.tail});
                       },
                       [&](const OmegaStarRegion& r) {
                           out.push_back({true, r.tail});
                           values(r.exceptions);
                       },
                       [&](const ZetaRegion& r) {
                           out.push_back({true, r.left_tail});
                           values(r.exceptions);
                           out.push_back({true, r.right_tail});
                       },
                   },
                   region);
    }
    return out;
}

}  // namespace

WeightSpec::WeightSpec(std::vector<Region> regions) : regions_(std::move(regions)) {
    bool infinite = false;
    for (const auto& r : regions_) infinite = infinite || !std::holds_alternative<FiniteRegion>(r);
    if (!infinite) throw std::invalid_argument("no infinite region");
}

std::string Validity::reason() const {
    if (!conflict) return "";
    return "not almost integral: infinite tails " + conflict->first.to_string() + " and " +
           conflict->second.to_string() + " lie in different integrality classes";
}

Validity validate(const WeightSpec& spec) {
    std::optional<FieldElem> first;
    for (const auto& t : tokens(spec)) {
        if (!t.infinite) continue;
        if (!first) {
            first = t.value;
        } else if (!first->same_class(t.value)) {
            return Validity{std::make_pair(*first, t.value)};
        }
    }
    return {};
}

Segmentation segment(const WeightSpec& spec) {
    if (auto v = validate(spec); !v.ok()) throw std::invalid_argument(v.reason());

    std::vector<FieldElem> pending;
    std::vector<FieldElem> constants;
    std::vector<std::vector<FieldElem>> gaps;  // exceptions before each constant
    for (auto& t : tokens(spec)) {
        if (t.infinite) {
            constants.push_back(t.value);
            gaps.push_back(std::move(pending));
            pending.clear();
        } else {
            pending.push_back(t.value);
        }
    }

    Segmentation s;
    s.head = EventuallyConstantSeq::pos(gaps.front(), constants.front());
    for (std::size_t k = 1; k < constants.size(); ++k) {
        s.middles.push_back(EventuallyConstantSeq::all(constants[k - 1], gaps[k], constants[k]));
    }
    s.tail = EventuallyConstantSeq::neg(constants.back(), pending);
    return s;
}

Classification classify_segments(const Segmentation& segments) {
    Classification c;
    c.head = block_ideal(segments.head);
    c.tail = block_ideal(segments.tail);
    c.total.r = c.head.r + c.tail.r;
    for (const auto& m : segments.middles) {
        c.middles.push_back(block_ideal(m));
        c.total.r += c.middles.back().r;
        c.total.g += c.middles.back().g;
    }
    c.total.X = c.head.X;
    c.total.Y = c.tail.Y;
    return c;
}

IdealDescriptor classify(const WeightSpec& spec) {
    if (auto v = validate(spec); !v.ok()) return IdealDescriptor::zero(v.reason());
    return IdealDescriptor::proper(classify_segments(segment(spec)).total);
}

std::string IdealDescriptor::to_string() const {
    if (is_zero()) return "zero";
    const auto& q = quadruple();
    return "I(" + std::to_string(q.r) + ", " + std::to_string(q.g) + ", " + q.X.to_string() + ", " +
           q.Y.to_string() + ")";
}

}  // namespace rsinf
