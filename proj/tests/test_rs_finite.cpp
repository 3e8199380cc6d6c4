#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rsinf/rs_finite.hpp"

using namespace rsinf;

namespace {

Tableau tab(std::vector<std::vector<std::string>> rows) {
    Tableau t;
    for (const auto& r : rows) {
        auto& out = t.rows.emplace_back();
        for (const auto& s : r) out.push_back(FieldElem::parse(s));
    }
    return t;
}

FiniteSeq seq(const char* s) { return parse_seq(s); }

// Plain Schensted shape on integers with the usual bump-the-first-larger rule;
// reversing the values turns the decreasing-row convention into it.
Partition schensted_shape(const std::vector<long>& xs) {
    std::vector<std::vector<long>> rows;
    for (long x : xs) {
        long v = -x;
        bool placed = false;
        for (auto& row : rows) {
            auto it = std::upper_bound(row.begin(), row.end(), v);
            if (it == row.end()) {
                row.push_back(v);
                placed = true;
                break;
            }
            std::swap(*it, v);
        }
        if (!placed) rows.push_back({v});
    }
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Partition(parts);
}

}  // namespace

TEST_CASE("rs of the worked example") {
    auto out = rs(seq("2,2,a-3,1"));
    REQUIRE(out.tableaux.size() == 2);
    CHECK(out.tableaux[0] == tab({{"2", "1"}, {"2"}}));
    CHECK(out.tableaux[1] == tab({{"a-3"}}));
    CHECK(same_tableaux(out, j_map(seq("3,4,a,5"))));
}

TEST_CASE("small rs cases") {
    CHECK(rs(seq("a")).tableaux == std::vector<Tableau>{tab({{"a"}})});
    CHECK(rs(seq("3,1,2")).tableaux == std::vector<Tableau>{tab({{"3", "2"}, {"1"}})});
    CHECK(j_map(seq("2,1")).tableaux == std::vector<Tableau>{tab({{"1", "-1"}})});
    CHECK(j_map(seq("1,2")).tableaux == std::vector<Tableau>{tab({{"0"}, {"0"}})});
    CHECK(rs(FiniteSeq{}).tableaux.empty());
}

TEST_CASE("trace records index projections") {
    auto trace = rs_trace(seq("2,2,a-3,1"));
    REQUIRE(trace.size() == 4);
    CHECK(trace[1][0].indices() == std::vector<std::vector<std::size_t>>{{2}, {1}});
    CHECK(trace[3][0].indices() == std::vector<std::vector<std::size_t>>{{2, 4}, {1}});
    CHECK(trace[3][1].indices() == std::vector<std::vector<std::size_t>>{{3}});
}

TEST_CASE("seq_of examples") {
    auto t = tab({{"a+4", "a+2", "a+1"}, {"a+4", "a+1"}, {"a+4", "a+1"}, {"a+3"}});
    CHECK(format_seq(seq_of(std::vector<Tableau>{t})) == "a+3,a+4,a+1,a+4,a+1,a+4,a+2,a+1");

    auto t1 = tab({{"a+7", "a-4"}, {"a-8"}});
    auto t2 = tab({{"b-4", "b-6"}, {"b-5"}});
    CHECK(format_seq(seq_of(std::vector<Tableau>{t1, t2})) == "a-8,a+7,a-4,b-5,b-4,b-6");

    CHECK(seq_of(std::vector<Tableau>{tab({{"x"}})}) == seq("x"));
    CHECK_THROWS_AS(seq_of(std::vector<Tableau>{tab({{"1", "2"}})}), std::invalid_argument);
}

TEST_CASE("seq_of inverts rs on random sequences") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(0, 10), val(-3, 3), cls(0, 2);
    for (int iter = 0; iter < 300; ++iter) {
        FiniteSeq f;
        for (int i = len(rng); i > 0; --i) {
            int c = cls(rng);
            FieldElem base = c == 0 ? FieldElem(0) : c == 1 ? FieldElem::symbol("a") : FieldElem::rational(1, 3);
            f.push_back(base.shifted(val(rng)));
        }
        auto t = rs(f);
        CHECK(rs(seq_of(t)) == t);
    }
}

TEST_CASE("rs shapes agree with plain Schensted") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> len(1, 9), val(-4, 4);
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<long> xs(len(rng));
        FiniteSeq f;
        for (auto& x : xs) {
            x = val(rng);
            f.push_back(FieldElem(x));
        }
        // a later equal value precedes the earlier one in the pair order
        std::vector<long> keyed;
        for (std::size_t i = 0; i < xs.size(); ++i) keyed.push_back(xs[i] * 100 + static_cast<long>(i));
        auto out = rs(f);
        REQUIRE(out.tableaux.size() == 1);
        CHECK(out.tableaux[0].shape() == schensted_shape(keyed));
    }
}

TEST_CASE("admissible interchange examples") {
    CHECK(admissible(seq("0,5,3"), 1, false));
    CHECK(admissible(seq("0,a"), 1, false));
    CHECK_FALSE(admissible(seq("1,2"), 1, false));
    CHECK_THROWS_AS(admissible(seq("1,2"), 2, false), std::out_of_range);
    CHECK_THROWS_AS(admissible(seq("1,2"), 0, false), std::out_of_range);
}

TEST_CASE("admissibility is symmetric under the swap") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> len(2, 6), val(0, 3);
    for (int iter = 0; iter < 500; ++iter) {
        FiniteSeq f;
        for (int i = len(rng); i > 0; --i) f.push_back(FieldElem(val(rng)));
        std::uniform_int_distribution<std::size_t> pos(1, f.size() - 1);
        const auto i = pos(rng);
        for (bool shifted : {false, true}) {
            CHECK(admissible(f, i, shifted) == admissible(swapped(f, i, shifted), i, shifted));
        }
    }
}

TEST_CASE("shifted admissible moves preserve J") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> len(2, 6), val(0, 3);
    for (int iter = 0; iter < 500; ++iter) {
        FiniteSeq f;
        for (int i = len(rng); i > 0; --i) f.push_back(FieldElem(val(rng)));
        for (std::size_t i = 1; i < f.size(); ++i) {
            if (admissible(f, i, true)) CHECK(same_tableaux(j_map(f), j_map(swapped(f, i, true))));
        }
    }
}

TEST_CASE("connected") {
    auto path = connected(seq("0,5,3"), seq("5,0,3"), false);
    REQUIRE(path);
    REQUIRE(path->steps.size() == 1);
    CHECK(path->steps[0].position == 1);
    CHECK_FALSE(connected(seq("1,2"), seq("2,1"), true));
    auto self = connected(seq("1,a,2"), seq("1,a,2"), true);
    REQUIRE(self);
    CHECK(self->steps.empty());
    CHECK_FALSE(connected(seq("1,2"), seq("1"), false));
}

TEST_CASE("connected paths replay") {
    auto from = seq("3,0,a,1,2");
    for (const auto& to : reachable(from, true)) {
        auto path = connected(from, to, true);
        REQUIRE(path);
        FiniteSeq cur = from;
        for (const auto& s : path->steps) {
            REQUIRE(admissible(cur, s.position, true));
            cur = swapped(cur, s.position, true);
        }
        CHECK(cur == to);
    }
}

TEST_CASE("joseph_equal") {
    // f' = f + 1, so J(f) = J(f' + k) at k = -1
    CHECK(joseph_equal(seq("3,4,a,5"), seq("4,5,a+1,6"), std::int64_t{-1}));
    CHECK_FALSE(joseph_equal(seq("3,4,a,5"), seq("4,5,a+1,6"), std::int64_t{1}));
    CHECK(joseph_equal(seq("3,4,a,5"), seq("4,5,a+1,6"), std::nullopt));
    CHECK_FALSE(joseph_equal(seq("2,1"), seq("1,2"), std::nullopt));
    CHECK(joseph_equal(seq("3,4,a,5"), seq("3,4,a,5"), std::int64_t{0}));
    CHECK_FALSE(joseph_equal(seq("3,4,a,5"), seq("3,4,a,5"), std::int64_t{2}));
}
