#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rsinf {

// Integrality class of a scalar. Either a reduced fraction num/den in [0, 1)
// or a named symbol; negated symbols carry a leading '-'.
struct Anchor {
    std::string symbol;  // empty for rational anchors
    std::int64_t num = 0;
    std::int64_t den = 1;

    bool is_symbol() const { return !symbol.empty(); }
    bool is_integral() const { return symbol.empty() && num == 0; }
    std::string to_string() const;

    friend bool operator==(const Anchor&, const Anchor&) = default;
    friend std::strong_ordering operator<=>(const Anchor&, const Anchor&) = default;
};

enum class ZOrder { incomparable, less, equal, greater };

// A scalar of the ground field, stored as anchor + integer offset. Only the
// integrality class and the integer offset inside it matter to the
// combinatorics, so no field multiplication is provided.
class FieldElem {
public:
    FieldElem() = default;
    explicit FieldElem(std::int64_t value) : offset_(value) {}

    static FieldElem integer(std::int64_t value) { return FieldElem(value); }
    // num/den with den != 0; reduced and split into anchor in [0,1) + offset.
    static FieldElem rational(std::int64_t num, std::int64_t den);
    static FieldElem symbol(std::string name, std::int64_t offset = 0);

    // Parses INT | INT "/" INT | ["-"] SYM [("+"|"-") INT].
    static FieldElem parse(std::string_view text);

    const Anchor& anchor() const { return anchor_; }
    std::int64_t offset() const { return offset_; }

    bool same_class(const FieldElem& other) const { return anchor_ == other.anchor_; }

    FieldElem shifted(std::int64_t k) const;
    FieldElem negated() const;

    std::string to_string() const;

    friend bool operator==(const FieldElem&, const FieldElem&) = default;
    // Arbitrary total order for use as container keys; unrelated to >_Z.
    friend std::strong_ordering operator<=>(const FieldElem&, const FieldElem&) = default;

private:
    Anchor anchor_;
    std::int64_t offset_ = 0;
};

// greater iff a - b is a positive integer, less iff b - a is, equal iff a = b.
ZOrder compare_z(const FieldElem& a, const FieldElem& b);

inline FieldElem shift_by_int(const FieldElem& a, std::int64_t k) { return a.shifted(k); }
inline FieldElem negate(const FieldElem& a) { return a.negated(); }

// a - b when it is an integer.
std::optional<std::int64_t> int_difference(const FieldElem& a, const FieldElem& b);

inline bool greater_z(const FieldElem& a, const FieldElem& b) {
    return compare_z(a, b) == ZOrder::greater;
}
inline bool greater_eq_z(const FieldElem& a, const FieldElem& b) {
    auto c = compare_z(a, b);
    return c == ZOrder::greater || c == ZOrder::equal;
}

}  // namespace rsinf
