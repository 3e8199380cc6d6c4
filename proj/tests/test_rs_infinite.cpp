#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rsinf/rs_infinite.hpp"

using namespace rsinf;

namespace {

FieldElem lit(const char* s) { return FieldElem::parse(s); }
FieldElem el(std::int64_t v) { return FieldElem(v); }

std::vector<FieldElem> vals(std::initializer_list<std::int64_t> xs) {
    std::vector<FieldElem> out;
    for (auto x : xs) out.push_back(FieldElem(x));
    return out;
}

EventuallyConstantSeq random_block(std::mt19937& rng, Axis axis) {
    std::uniform_int_distribution<int> count(0, 5), off(-6, 6), coin(0, 3);
    std::vector<FieldElem> exc;
    for (int i = count(rng); i > 0; --i) {
        exc.push_back(coin(rng) == 0 ? FieldElem::symbol("a", off(rng)) : FieldElem(off(rng)));
    }
    switch (axis) {
        case Axis::neg: return EventuallyConstantSeq::neg(el(off(rng)), exc);
        case Axis::pos: return EventuallyConstantSeq::pos(exc, el(off(rng)));
        case Axis::all: break;
    }
    return EventuallyConstantSeq::all(el(off(rng)), exc, el(off(rng)));
}

}  // namespace

TEST_CASE("canonical form trims law-conforming entries") {
    auto f = EventuallyConstantSeq::neg(el(0), vals({0, 0, -2, -2}));
    CHECK(f.middle() == vals({-2, -2}));
    CHECK(f.start() == -2);
    CHECK(f.at(-7) == el(0));
    auto c = EventuallyConstantSeq::all(el(3), vals({3, 3}), el(3));
    CHECK(c.middle().empty());
    CHECK(c.start() == 0);
    CHECK(c == EventuallyConstantSeq::all(el(3), {}, el(3)));
    auto p = EventuallyConstantSeq::pos(vals({0, 0}), el(0));
    CHECK(p == EventuallyConstantSeq::pos({}, el(0)));
    CHECK_THROWS_AS(f.at(0), std::out_of_range);
    CHECK_THROWS_AS(EventuallyConstantSeq(Axis::neg, el(0), vals({1}), -3, std::nullopt),
                    std::invalid_argument);
    CHECK_THROWS_AS(EventuallyConstantSeq(Axis::pos, el(0), {}, 1, el(0)), std::invalid_argument);
}

TEST_CASE("plus_rho") {
    for (std::int64_t n = 1; n <= 4; ++n) {
        EventuallyConstantSeq f(Axis::all, el(-1), {lit("a")}, n, el(0));
        auto g = plus_rho(f);
        CHECK(g.at(n - 1) == el(-n));
        CHECK(g.at(n - 2) == el(1 - n));
        CHECK(g.at(n) == lit("a").shifted(-n));
        CHECK(g.at(n + 1) == el(-1 - n));
    }
    auto c = plus_rho(EventuallyConstantSeq::neg(el(4), {}));
    CHECK(c.middle().empty());
    CHECK(c.at(-3) == el(7));

    auto p = plus_rho(EventuallyConstantSeq::pos(vals({2, 2}), el(0)));
    CHECK(p.at(1) == el(1));
    CHECK(p.at(2) == el(0));
    CHECK(p.at(3) == el(-3));
    CHECK(p.at(4) == el(-4));
}

TEST_CASE("star") {
    auto f = EventuallyConstantSeq::pos(vals({2, 2}), el(0));
    auto s = star_seq(f);
    CHECK(s.axis() == Axis::neg);
    CHECK(s == EventuallyConstantSeq::neg(el(0), vals({-2, -2})));
    CHECK(star_seq(s) == f);
    CHECK(star_seq(EventuallyConstantSeq::pos({}, el(5))) == EventuallyConstantSeq::neg(el(-5), {}));

    std::mt19937 rng(1);
    for (int iter = 0; iter < 200; ++iter) {
        for (Axis axis : {Axis::neg, Axis::pos, Axis::all}) {
            auto g = random_block(rng, axis);
            CHECK(star_seq(star_seq(g)) == g);
            auto gs = star_seq(g);
            for (std::int64_t i = -12; i <= 12; ++i) {
                if (g.contains(i)) CHECK(gs.at(-i) == g.at(i).negated());
            }
            // rho commutes with star
            CHECK(star_seq(plus_rho(g)) == plus_rho(gs));
        }
    }
}

TEST_CASE("ins") {
    const auto g = StablyDecreasingSeq(Axis::all, el(0), {}, 0, el(0));
    std::vector<std::int64_t> at0{0};
    std::vector<FieldElem> beta{lit("b")};
    auto one = ins(at0, beta, g);
    CHECK(one.at(-2) == el(2));
    CHECK(one.at(-1) == el(1));
    CHECK(one.at(0) == lit("b"));
    CHECK(one.at(1) == el(0));
    CHECK(one.at(2) == el(-1));

    std::vector<std::int64_t> two_pos{-2, 1};
    std::vector<FieldElem> two_vals{lit("b"), lit("c")};
    auto two = ins(two_pos, two_vals, g);
    std::vector<FieldElem> expected{el(3), lit("b"), el(2), el(1), lit("c"), el(0), el(-1)};
    for (std::int64_t i = -3; i <= 3; ++i) CHECK(two.at(i) == expected[static_cast<std::size_t>(i + 3)]);

    CHECK(ins({}, {}, g) == g);

    const auto neg = StablyDecreasingSeq(Axis::neg, el(0), {}, 0, std::nullopt);
    std::vector<std::int64_t> p{-4, -2};
    auto n2 = ins(p, two_vals, neg);
    CHECK(n2.at(-1) == el(1));
    CHECK(n2.at(-2) == lit("c"));
    CHECK(n2.at(-3) == el(2));
    CHECK(n2.at(-4) == lit("b"));
    CHECK(n2.at(-5) == el(3));
    CHECK(n2.at(-9) == el(7));

    std::vector<std::int64_t> bad{0};
    CHECK_THROWS_AS(ins(bad, beta, neg), std::invalid_argument);
    CHECK_THROWS_AS(ins(bad, beta, StablyDecreasingSeq(Axis::pos, std::nullopt, {}, 1, el(0))),
                    std::invalid_argument);
    std::vector<std::int64_t> unordered{2, 1};
    CHECK_THROWS_AS(ins(unordered, two_vals, g), std::invalid_argument);
}

TEST_CASE("infinite RS examples") {
    auto strict = rs_infinite(plus_rho(EventuallyConstantSeq::neg(el(0), vals({-2, -2}))));
    CHECK(strict.underline.empty());
    CHECK(strict.others.empty());
    CHECK(strict.first_row == plus_rho(EventuallyConstantSeq::neg(el(0), vals({-2, -2}))));

    for (std::int64_t n = 1; n <= 5; ++n) {
        std::vector<FieldElem> exc{lit("a")};
        for (std::int64_t k = 1; k < n; ++k) exc.push_back(el(0));
        auto res = rs_infinite(plus_rho(EventuallyConstantSeq::neg(el(-1), exc)));
        REQUIRE(res.underline.size() == 1);
        CHECK(res.underline[0] == lit("a").shifted(n));
        CHECK(res.rank() == 1);
    }

    auto wide = rs_infinite(plus_rho(EventuallyConstantSeq::all(el(0), {}, el(5))));
    CHECK(wide.underline == vals({4, 3, 2, 1, 0}));
    CHECK(wide.rank() == 5);
}

TEST_CASE("mixed-class two-sided input is rejected") {
    auto bad = plus_rho(EventuallyConstantSeq::all(el(0), {}, lit("a")));
    CHECK_THROWS_AS(rs_infinite(bad), std::invalid_argument);
    CHECK_THROWS_AS(block_ideal(EventuallyConstantSeq::all(el(0), {}, lit("a"))), std::invalid_argument);
}

TEST_CASE("partition_from_row") {
    auto res = rs_infinite(plus_rho(EventuallyConstantSeq::neg(el(0), vals({-2, -2}))));
    CHECK(partition_from_row(res, el(0), 0) == Partition({2, 2}));
    auto flat = rs_infinite(plus_rho(EventuallyConstantSeq::neg(el(3), {})));
    CHECK(partition_from_row(flat, el(3), 0).empty());
    auto all = rs_infinite(plus_rho(EventuallyConstantSeq::all(el(0), {}, el(0))));
    CHECK_THROWS_AS(partition_from_row(all, el(0), 0), std::invalid_argument);
}

TEST_CASE("block ideal examples") {
    for (std::int64_t n = 1; n <= 5; ++n) {
        for (const char* alpha : {"a", "1/2"}) {
            std::vector<FieldElem> exc(static_cast<std::size_t>(n - 1), el(-1));
            exc.push_back(lit(alpha));
            CHECK(block_ideal(EventuallyConstantSeq::pos(exc, el(0))) == BlockIdeal{1, 0, {}, {}});
        }
    }
    CHECK(block_ideal(EventuallyConstantSeq::pos(vals({2, 2}), el(0))) ==
          BlockIdeal{0, 0, Partition({2, 2}), {}});
    CHECK(block_ideal(EventuallyConstantSeq::neg(el(0), vals({-2, -2}))) ==
          BlockIdeal{0, 0, {}, Partition({2, 2})});
    CHECK(block_ideal(EventuallyConstantSeq::all(el(0), {}, el(5))) == BlockIdeal{5, 0, {}, {}});
    CHECK(block_ideal(EventuallyConstantSeq::all(el(1), vals({0, 1}), el(0))).g >= 0);
}

TEST_CASE("block ideal symmetries") {
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> shift(-5, 5);
    for (int iter = 0; iter < 150; ++iter) {
        for (Axis axis : {Axis::neg, Axis::pos, Axis::all}) {
            auto f = random_block(rng, axis);
            if (axis == Axis::all && !f.left_base()->same_class(*f.right_base())) continue;
            const auto b = block_ideal(f);
            CHECK(block_ideal(f.value_shifted(shift(rng))) == b);
            const auto d = block_ideal(star_seq(f));
            CHECK(d.r == b.r);
            CHECK(d.g == b.g);
            CHECK(d.X == b.Y);
            CHECK(d.Y == b.X);
            if (axis == Axis::all) CHECK(block_ideal(f.translated(shift(rng))) == b);
        }
    }
}

TEST_CASE("stabilization bound is not exceeded by the observed exit") {
    std::mt19937 rng(4);
    for (int iter = 0; iter < 150; ++iter) {
        for (Axis axis : {Axis::neg, Axis::all}) {
            auto f = random_block(rng, axis);
            if (axis == Axis::all && !f.left_base()->same_class(*f.right_base())) continue;
            auto g = plus_rho(f);
            auto res = rs_infinite(g);
            const auto bound = stabilization_bound(g, res.rank());
            CHECK(rs_infinite_window(g, bound).same_output(res));
            CHECK(rs_infinite_window(g, bound + 17).same_output(res));
        }
    }
}

TEST_CASE("insertion identity on chosen positions") {
    auto f = plus_rho(EventuallyConstantSeq::neg(el(-1), {lit("a"), el(0), el(0)}));
    auto res = rs_infinite(f);
    REQUIRE(res.rank() == 1);
    std::vector<std::int64_t> pos{-20};
    REQUIRE(insertion_positions_valid(pos, res));
    auto rebuilt = ins(pos, res.underline, res.first_row);
    CHECK(rs_infinite(rebuilt).same_output(res));

    std::vector<std::int64_t> crowded{-3, -2};
    CHECK_FALSE(insertion_positions_valid(crowded, res));
}
