#include "rsinf/cls.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <stdexcept>

namespace rsinf {

namespace {

// Weakly decreasing sequences of length m with entries in [0, bound].
void decreasing_sequences(int m, int bound, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int cap) {
        if (static_cast<int>(cur.size()) == m) {
            emit(cur);
            return;
        }
        for (int v = 0; v <= cap; ++v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(bound);
}

bool dominated(const WeightVec& e, const WeightVec& f) {
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] > f[i]) return false;
    }
    return true;
}

std::vector<int> parse_ints(std::string_view text, std::string_view what) {
    std::vector<int> out;
    if (text.find_first_not_of(" ") == std::string_view::npos) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto field = text.substr(pos, comma - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
            throw std::invalid_argument("malformed integer '" + std::string(field) + "' in " +
                                        std::string(what));
        }
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

}  // namespace

WeightVec normalized(WeightVec v) {
    if (v.empty()) return v;
    const int last = v.back();
    for (auto& x : v) x -= last;
    return v;
}

std::string BasicCls::to_string() const {
    switch (kind) {
        case Kind::L: return "L" + std::to_string(index);
        case Kind::R: return "R" + std::to_string(index);
        case Kind::Linf: return "Linf" + std::to_string(index);
        case Kind::Rinf: return "Rinf" + std::to_string(index);
        case Kind::E: return "E";
        case Kind::Einf: return "Einf";
        case Kind::T: return "T";
    }
    return "?";
}

std::string ClsParams::to_string() const {
    return "cls(" + std::to_string(r1) + ", " + std::to_string(r2) + ", " + std::to_string(g) +
           ", " + X.to_string() + ", " + Y.to_string() + ")";
}

std::vector<BasicCls> factors(const ClsParams& p) {
    if (p.r1 < 0 || p.r2 < 0 || p.g < 0) throw std::invalid_argument("negative cls parameter");
    std::vector<BasicCls> out;
    if (p.r1 > 0) out.push_back(BasicCls::Linf(p.r1));
    for (std::size_t j = 0; j < p.X.length(); ++j) {
        const int mult = p.X.part(j) - p.X.part(j + 1);
        for (int m = 0; m < mult; ++m) out.push_back(BasicCls::L(p.r1 + static_cast<int>(j) + 1));
    }
    for (int m = 0; m < p.g; ++m) out.push_back(BasicCls::E());
    if (p.r2 > 0) out.push_back(BasicCls::Rinf(p.r2));
    for (std::size_t j = 0; j < p.Y.length(); ++j) {
        const int mult = p.Y.part(j) - p.Y.part(j + 1);
        for (int m = 0; m < mult; ++m) out.push_back(BasicCls::R(p.r2 + static_cast<int>(j) + 1));
    }
    return out;
}

WeightVec f_kn(int k, int n) {
    if (n < 1 || k < 0 || k > n) {
        throw std::out_of_range("f_kn: need 0 <= k <= n, got k=" + std::to_string(k) +
                                ", n=" + std::to_string(n));
    }
    WeightVec v(n, 0);
    std::fill(v.begin(), v.begin() + k, 1);
    return normalized(std::move(v));
}

WeightSet basic_level(const BasicCls& b, int n, int bound) {
    if (n < 2) throw std::domain_error("level must be at least 2");
    WeightSet out;
    const int i = b.index;
    switch (b.kind) {
        case BasicCls::Kind::T:
            out.insert(WeightVec(n, 0));
            break;
        case BasicCls::Kind::L:
            for (int k = 0; k <= std::min(i, n); ++k) out.insert(f_kn(k, n));
            break;
        case BasicCls::Kind::R:
            for (int k = std::max(0, n - i); k <= n; ++k) out.insert(f_kn(k, n));
            break;
        case BasicCls::Kind::E:
            for (int k = 0; k < n; ++k) out.insert(f_kn(k, n));
            break;
        case BasicCls::Kind::Linf: {
            const int m = std::min(i, n - 1);
            decreasing_sequences(m, bound, [&](const std::vector<int>& s) {
                WeightVec v(n, 0);
                std::copy(s.begin(), s.end(), v.begin());
                out.insert(v);
            });
            break;
        }
        case BasicCls::Kind::Rinf: {
            // constant on the first n - i coordinates
            const int m = std::min(i, n - 1);
            decreasing_sequences(m, bound, [&](const std::vector<int>& s) {
                WeightVec v(n, 0);
                if (m > 0) {
                    std::fill(v.begin(), v.begin() + (n - m), s[0]);
                    std::copy(s.begin() + 1, s.end(), v.begin() + (n - m));
                }
                out.insert(v);
            });
            break;
        }
        case BasicCls::Kind::Einf:
            decreasing_sequences(n - 1, bound, [&](const std::vector<int>& s) {
                WeightVec v(n, 0);
                std::copy(s.begin(), s.end(), v.begin());
                out.insert(v);
            });
            break;
    }
    return out;
}

WeightSet product_level(const WeightSet& a, const WeightSet& b) {
    WeightSet out;
    for (const auto& x : a) {
        for (const auto& y : b) {
            if (x.size() != y.size()) throw std::invalid_argument("product of different levels");
            WeightVec s(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
            out.insert(normalized(std::move(s)));
        }
    }
    return out;
}

void check_level(const ClsParams& p, int n) {
    const int left = p.r1 + static_cast<int>(p.X.length());
    const int right = p.r2 + static_cast<int>(p.Y.length());
    if (n < 2 || n <= left || n <= right) {
        throw std::domain_error("level " + std::to_string(n) + " too small for " + p.to_string() +
                                ": need n >= 2, n > " + std::to_string(left) + " and n > " +
                                std::to_string(right));
    }
}

WeightSet cls_level(const ClsParams& p, int n, int bound) {
    check_level(p, n);
    WeightSet acc{WeightVec(n, 0)};
    for (const auto& b : factors(p)) acc = product_level(acc, basic_level(b, n, bound));
    return acc;
}

WeightVec gamma(const BasicCls& b, int n) {
    const int two_n = 2 * n;
    const int i = b.index;
    auto needs_index = [&] {
        if (i >= two_n) {
            throw std::domain_error("gamma: index " + std::to_string(i) + " needs 2n > " +
                                    std::to_string(i) + ", got n=" + std::to_string(n));
        }
    };
    auto scaled = [](WeightVec v, int c) {
        for (auto& x : v) x *= c;
        return v;
    };
    if (n < 1) throw std::domain_error("gamma: n must be positive");
    switch (b.kind) {
        case BasicCls::Kind::T: return WeightVec(two_n, 0);
        case BasicCls::Kind::L: needs_index(); return f_kn(i, two_n);
        case BasicCls::Kind::Linf: needs_index(); return scaled(f_kn(i, two_n), 2 * i - 1);
        case BasicCls::Kind::R: needs_index(); return f_kn(two_n - i, two_n);
        case BasicCls::Kind::Rinf: needs_index(); return scaled(f_kn(two_n - i, two_n), 2 * i - 1);
        case BasicCls::Kind::E: return f_kn(n, two_n);
        case BasicCls::Kind::Einf: break;
    }
    throw std::domain_error("gamma is undefined for Einf");
}

WeightVec gamma(const ClsParams& p, int n) {
    WeightVec out(2 * std::max(n, 0), 0);
    for (const auto& b : factors(p)) {
        auto v = gamma(b, n);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += v[i];
    }
    return out;
}

bool member(const WeightVec& f, const ClsParams& p, int n, int bound) {
    check_level(p, n);
    if (static_cast<int>(f.size()) != n) return false;
    if (normalized(f) != f || !std::is_sorted(f.rbegin(), f.rend())) return false;

    const int cap = std::max(bound, f.empty() ? 0 : f.front());
    const auto fs = factors(p);
    std::vector<std::vector<WeightVec>> levels;
    for (const auto& b : fs) {
        const auto s = basic_level(b, n, cap);
        levels.emplace_back(s.begin(), s.end());
    }

    std::map<std::pair<std::size_t, WeightVec>, bool> memo;
    std::function<bool(std::size_t, const WeightVec&)> search = [&](std::size_t k,
                                                                    const WeightVec& rest) {
        if (k == levels.size()) return std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; });
        auto key = std::make_pair(k, rest);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        bool found = false;
        for (const auto& e : levels[k]) {
            if (!dominated(e, rest)) continue;
            WeightVec next(rest.size());
            for (std::size_t i = 0; i < rest.size(); ++i) next[i] = rest[i] - e[i];
            if (search(k + 1, next)) {
                found = true;
                break;
            }
        }
        memo.emplace(std::move(key), found);
        return found;
    };
    return search(0, f);
}

WeightSet q_union_level(int r, int g, const Partition& X, const Partition& Y, int n, int bound) {
    if (r < 0) throw std::invalid_argument("negative r");
    WeightSet out;
    for (int r1 = 0; r1 <= r; ++r1) {
        auto s = cls_level(ClsParams{r1, r - r1, g, X, Y}, n, bound);
        out.insert(s.begin(), s.end());
    }
    return out;
}

std::string format_weight(const WeightVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

ClsParams parse_params(const std::string& text) {
    std::vector<std::string_view> fields;
    std::string_view rest(text);
    for (;;) {
        auto semi = rest.find(';');
        fields.push_back(rest.substr(0, semi));
        if (semi == std::string_view::npos) break;
        rest.remove_prefix(semi + 1);
    }
    if (fields.size() != 3) {
        throw std::invalid_argument("cls params must look like \"r',r'',g;X;Y\", got \"" + text + "\"");
    }
    auto head = parse_ints(fields[0], "r',r'',g");
    if (head.size() != 3) throw std::invalid_argument("expected three integers r',r'',g");
    for (int v : head) {
        if (v < 0) throw std::invalid_argument("r', r'' and g must be nonnegative");
    }
    return ClsParams{head[0], head[1], head[2], Partition(parse_ints(fields[1], "X")),
                     Partition(parse_ints(fields[2], "Y"))};
}

WeightVec parse_weight(const std::string& text) {
    std::string_view body(text);
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
    return parse_ints(body, "weight");
}

}  // namespace rsinf
