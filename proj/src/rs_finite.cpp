#include "rsinf/rs_finite.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace rsinf {

bool pair_precedes(const IndexedValue& x, const IndexedValue& y) {
    switch (compare_z(x.value, y.value)) {
        case ZOrder::greater: return true;
        case ZOrder::equal: return x.index > y.index;
        default: return false;
    }
}

Tableau PairTableau::values() const {
    Tableau t;
    for (const auto& row : rows) {
        auto& out = t.rows.emplace_back();
        for (const auto& p : row) out.push_back(p.value);
    }
    return t;
}

std::vector<std::vector<std::size_t>> PairTableau::indices() const {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& row : rows) {
        auto& r = out.emplace_back();
        for (const auto& p : row) r.push_back(p.index);
    }
    return out;
}

namespace {

// Row insertion: the new pair replaces the <-smallest entry that is <-greater
// than it, and the displaced entry moves to the next row.
void insert(PairTableau& t, IndexedValue x) {
    for (auto& row : t.rows) {
        auto it = std::upper_bound(row.begin(), row.end(), x, pair_precedes);
        if (it == row.end()) {
            row.push_back(std::move(x));
            return;
        }
        std::swap(*it, x);
    }
    t.rows.push_back({std::move(x)});
}

void insert_into_state(RsState& state, const FieldElem& value, std::size_t index) {
    auto it = std::find_if(state.begin(), state.end(), [&](const PairTableau& t) {
        return t.rows.front().front().value.same_class(value);
    });
    if (it == state.end()) {
        state.push_back(PairTableau{{{IndexedValue{value, index}}}});
    } else {
        insert(*it, IndexedValue{value, index});
    }
}

}  // namespace

std::vector<RsState> rs_trace(std::span<const FieldElem> seq) {
    std::vector<RsState> trace;
    RsState state;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        insert_into_state(state, seq[i], i + 1);
        trace.push_back(state);
    }
    return trace;
}

TableauFamily rs(std::span<const FieldElem> seq) {
    RsState state;
    for (std::size_t i = 0; i < seq.size(); ++i) insert_into_state(state, seq[i], i + 1);
    TableauFamily out;
    out.tableaux.reserve(state.size());
    for (const auto& t : state) out.tableaux.push_back(t.values());
    return out;
}

FiniteSeq rho_shifted(std::span<const FieldElem> seq) {
    FiniteSeq out;
    out.reserve(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        out.push_back(seq[i].shifted(-static_cast<std::int64_t>(i + 1)));
    }
    return out;
}

TableauFamily j_map(std::span<const FieldElem> seq) {
    auto shifted = rho_shifted(seq);
    return rs(shifted);
}

FiniteSeq seq_of(std::span<const Tableau> tableaux) {
    FiniteSeq out;
    for (const auto& t : tableaux) {
        validate(t);
        // Bottom row first: among rows of equal length, a lower row never
        // starts with a larger entry, so ties keep the lower row first.
        std::vector<std::size_t> order(t.rows.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const auto& ra = t.rows[a];
            const auto& rb = t.rows[b];
            if (ra.size() != rb.size()) return ra.size() < rb.size();
            return greater_z(rb.front(), ra.front());
        });
        for (std::size_t r : order) {
            out.insert(out.end(), t.rows[r].begin(), t.rows[r].end());
        }
    }
    return out;
}

bool admissible(std::span<const FieldElem> f, std::size_t i, bool shifted) {
    const std::size_t n = f.size();
    if (i < 1 || i + 1 > n) {
        throw std::out_of_range("interchange position " + std::to_string(i) + " outside [1, " +
                                std::to_string(n == 0 ? 0 : n - 1) + "]");
    }
    // 1-based accessor
    auto at = [&](std::size_t j) {
        return shifted ? f[j - 1].shifted(-static_cast<std::int64_t>(j)) : f[j - 1];
    };
    const FieldElem a = at(i);
    const FieldElem b = at(i + 1);
    if (!a.same_class(b)) return true;  // 1)
    if (i + 2 <= n) {
        const FieldElem c = at(i + 2);
        if (greater_z(b, c) && greater_eq_z(c, a)) return true;  // 2)
        if (greater_z(a, c) && greater_eq_z(c, b)) return true;  // 2')
    }
    if (i >= 2) {
        const FieldElem p = at(i - 1);
        if (greater_eq_z(b, p) && greater_z(p, a)) return true;  // 3)
        if (greater_eq_z(a, p) && greater_z(p, b)) return true;  // 3')
    }
    return false;
}

FiniteSeq swapped(std::span<const FieldElem> f, std::size_t i, bool shifted) {
    FiniteSeq g(f.begin(), f.end());
    std::swap(g.at(i - 1), g.at(i));
    if (shifted) {
        g[i - 1] = g[i - 1].shifted(-1);
        g[i] = g[i].shifted(1);
    }
    return g;
}

std::optional<InterchangePath> connected(std::span<const FieldElem> from,
                                         std::span<const FieldElem> to, bool shifted) {
    FiniteSeq start(from.begin(), from.end());
    FiniteSeq goal(to.begin(), to.end());
    if (start == goal) return InterchangePath{};
    if (start.size() != goal.size()) return std::nullopt;

    // parent map: sequence -> (predecessor, position)
    std::map<FiniteSeq, std::pair<FiniteSeq, std::size_t>> parent;
    std::deque<FiniteSeq> queue{start};
    parent.emplace(start, std::make_pair(FiniteSeq{}, 0));
    while (!queue.empty()) {
        FiniteSeq cur = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 1; i < cur.size(); ++i) {
            if (!admissible(cur, i, shifted)) continue;
            FiniteSeq next = swapped(cur, i, shifted);
            if (parent.contains(next)) continue;
            parent.emplace(next, std::make_pair(cur, i));
            if (next == goal) {
                InterchangePath path;
                FiniteSeq walk = goal;
                while (walk != start) {
                    const auto& [prev, pos] = parent.at(walk);
                    path.steps.push_back({pos, shifted});
                    walk = prev;
                }
                std::reverse(path.steps.begin(), path.steps.end());
                return path;
            }
            queue.push_back(std::move(next));
        }
    }
    return std::nullopt;
}

std::set<FiniteSeq> reachable(std::span<const FieldElem> f, bool shifted) {
    std::set<FiniteSeq> seen{FiniteSeq(f.begin(), f.end())};
    std::vector<FiniteSeq> stack{FiniteSeq(f.begin(), f.end())};
    while (!stack.empty()) {
        FiniteSeq cur = std::move(stack.back());
        stack.pop_back();
        for (std::size_t i = 1; i < cur.size(); ++i) {
            if (!admissible(cur, i, shifted)) continue;
            FiniteSeq next = swapped(cur, i, shifted);
            if (seen.insert(next).second) stack.push_back(std::move(next));
        }
    }
    return seen;
}

FiniteSeq shifted_seq(std::span<const FieldElem> f, std::int64_t k) {
    FiniteSeq out;
    out.reserve(f.size());
    for (const auto& x : f) out.push_back(x.shifted(k));
    return out;
}

bool joseph_equal(std::span<const FieldElem> f, std::span<const FieldElem> f_prime,
                  std::optional<std::int64_t> k) {
    if (f.size() != f_prime.size()) return false;
    const TableauFamily target = j_map(f);
    if (k) return same_tableaux(target, j_map(shifted_seq(f_prime, *k)));
    if (f.empty()) return true;

    std::set<std::int64_t> candidates;
    for (const auto& a : f) {
        for (const auto& b : f_prime) {
            if (auto d = int_difference(a, b)) candidates.insert(*d);
        }
    }
    for (std::int64_t c : candidates) {
        if (same_tableaux(target, j_map(shifted_seq(f_prime, c)))) return true;
    }
    return false;
}

}  // namespace rsinf
