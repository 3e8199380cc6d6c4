#pragma once

#include <set>
#include <string>
#include <vector>

#include "rsinf/partition.hpp"

namespace rsinf {

// Highest weight of a simple sl(n)-module: nonnegative, weakly decreasing,
// last entry 0.
using WeightVec = std::vector<int>;
using WeightSet = std::set<WeightVec>;

// Subtracts the last entry from every entry.
WeightVec normalized(WeightVec v);

struct BasicCls {
    enum class Kind { L, R, Linf, Rinf, E, Einf, T };
    Kind kind = Kind::T;
    int index = 0;

    static BasicCls L(int i) { return {Kind::L, i}; }
    static BasicCls R(int i) { return {Kind::R, i}; }
    static BasicCls Linf(int i) { return {Kind::Linf, i}; }
    static BasicCls Rinf(int i) { return {Kind::Rinf, i}; }
    static BasicCls E() { return {Kind::E, 0}; }
    static BasicCls Einf() { return {Kind::Einf, 0}; }
    static BasicCls T() { return {Kind::T, 0}; }

    std::string to_string() const;
    friend bool operator==(const BasicCls&, const BasicCls&) = default;
};

struct ClsParams {
    int r1 = 0;  // r'
    int r2 = 0;  // r''
    int g = 0;
    Partition X;
    Partition Y;

    std::string to_string() const;
    friend bool operator==(const ClsParams&, const ClsParams&) = default;
    friend auto operator<=>(const ClsParams&, const ClsParams&) = default;
};

// Canonical Cartan factorization, one entry per factor (repeated by
// multiplicity). Linf(0) and Rinf(0) are replaced by T and then dropped.
std::vector<BasicCls> factors(const ClsParams& p);

// k ones followed by zeros, normalized.
WeightVec f_kn(int k, int n);

// Level-n set of a basic system; entries of the infinite ones are capped at bound.
WeightSet basic_level(const BasicCls& b, int n, int bound);

// Normalized pairwise sums. Throws std::invalid_argument on length mismatch.
WeightSet product_level(const WeightSet& a, const WeightSet& b);

// Throws std::domain_error unless n >= 2, n > r' + len(X) and n > r'' + len(Y).
void check_level(const ClsParams& p, int n);

WeightSet cls_level(const ClsParams& p, int n, int bound);

// Length 2n; throws std::domain_error when some factor index is >= 2n.
WeightVec gamma(const ClsParams& p, int n);
WeightVec gamma(const BasicCls& b, int n);

// Exact: decides membership in the untruncated level set.
bool member(const WeightVec& f, const ClsParams& p, int n, int bound);

WeightSet q_union_level(int r, int g, const Partition& X, const Partition& Y, int n, int bound);

std::string format_weight(const WeightVec& v);
// "r',r'',g;X;Y" with comma-separated parts, X and Y possibly empty.
ClsParams parse_params(const std::string& text);
WeightVec parse_weight(const std::string& text);

}  // namespace rsinf
