#include "rsinf/field_elem.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace rsinf {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

bool valid_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("malformed field literal '" + std::string(whole) + "'");
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string Anchor::to_string() const {
    if (is_symbol()) return symbol;
    if (num == 0) return "0";
    return std::to_string(num) + "/" + std::to_string(den);
}

FieldElem FieldElem::rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g != 0) {
        num /= g;
        den /= g;
    }
    FieldElem e;
    e.offset_ = floor_div(num, den);
    e.anchor_.num = num - e.offset_ * den;
    e.anchor_.den = e.anchor_.num == 0 ? 1 : den;
    return e;
}

FieldElem FieldElem::symbol(std::string name, std::int64_t offset) {
    std::string_view core = name;
    if (!core.empty() && core.front() == '-') core.remove_prefix(1);
    if (!valid_identifier(core)) throw std::invalid_argument("invalid symbol name '" + name + "'");
    FieldElem e;
    e.anchor_.symbol = std::move(name);
    e.offset_ = offset;
    return e;
}

FieldElem FieldElem::parse(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty field literal");

    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        return rational(parse_int(trim(s.substr(0, slash)), text),
                        parse_int(trim(s.substr(slash + 1)), text));
    }

    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '-' || s[pos] == '+') {
        neg = s[pos] == '-';
        ++pos;
    }
    if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
        return FieldElem(parse_int(s, text));
    }

    // symbolic: [-]SYM [(+|-) INT]
    std::size_t end = pos;
    while (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_')) ++end;
    std::string_view name = s.substr(pos, end - pos);
    if (!valid_identifier(name)) {
        throw std::invalid_argument("malformed field literal '" + std::string(text) + "'");
    }
    std::int64_t offset = 0;
    std::string_view rest = trim(s.substr(end));
    if (!rest.empty()) {
        if (rest.front() != '+' && rest.front() != '-') {
            throw std::invalid_argument("malformed field literal '" + std::string(text) + "'");
        }
        bool minus = rest.front() == '-';
        rest = trim(rest.substr(1));
        if (rest.empty() || !std::isdigit(static_cast<unsigned char>(rest.front()))) {
            throw std::invalid_argument("malformed field literal '" + std::string(text) + "'");
        }
        offset = parse_int(rest, text);
        if (minus) offset = -offset;
    }
    return symbol((neg ? "-" : "") + std::string(name), offset);
}

FieldElem FieldElem::shifted(std::int64_t k) const {
    FieldElem e = *this;
    e.offset_ += k;
    return e;
}

FieldElem FieldElem::negated() const {
    FieldElem e;
    if (anchor_.is_symbol()) {
        const std::string& s = anchor_.symbol;
        e.anchor_.symbol = s.front() == '-' ? s.substr(1) : "-" + s;
        e.offset_ = -offset_;
    } else if (anchor_.num == 0) {
        e.offset_ = -offset_;
    } else {
        // -(o + p/q) = (-o - 1) + (q - p)/q
        e.anchor_.num = anchor_.den - anchor_.num;
        e.anchor_.den = anchor_.den;
        e.offset_ = -offset_ - 1;
    }
    return e;
}

std::string FieldElem::to_string() const {
    if (anchor_.is_symbol()) {
        if (offset_ == 0) return anchor_.symbol;
        return anchor_.symbol + (offset_ > 0 ? "+" : "-") +
               std::to_string(offset_ > 0 ? offset_ : -offset_);
    }
    if (anchor_.num == 0) return std::to_string(offset_);
    return std::to_string(offset_ * anchor_.den + anchor_.num) + "/" + std::to_string(anchor_.den);
}

ZOrder compare_z(const FieldElem& a, const FieldElem& b) {
    if (!a.same_class(b)) return ZOrder::incomparable;
    if (a.offset() > b.offset()) return ZOrder::greater;
    if (a.offset() < b.offset()) return ZOrder::less;
    return ZOrder::equal;
}

std::optional<std::int64_t> int_difference(const FieldElem& a, const FieldElem& b) {
    if (!a.same_class(b)) return std::nullopt;
    return a.offset() - b.offset();
}

}  // namespace rsinf
