#include "doctest.h"

#include <random>

#include "gerry/enumerate.hpp"
#include "gerry/metrics.hpp"
#include "fixtures.hpp"

using namespace gerry;

TEST_CASE("num_of is popcount") {
    CHECK(num_of(0) == 0);
    CHECK(num_of((1ull << 25) - 1) == 25);
    CHECK(num_of(fixtures::example_dots()) == 4);
}

TEST_CASE("clustering scores on the worked example graph") {
    DualGraph g = fixtures::example_graph();
    std::uint64_t dots = fixtures::example_dots();
    CHECK(clus(g, dots) == Rational(3, 12));
    CHECK(clusp(g, dots) == Rational(4, 13));
}

TEST_CASE("clustering edge cases") {
    DualGraph g = grid_graph(2, 2);
    CHECK(clus(g, 0b1111) == Rational(1));
    CHECK(clusp(g, 0b1111) == Rational(1));
    CHECK(clus(g, 0b0101) == Rational(2, 4));  // one column dotted

    DualGraph g5 = grid_graph(5, 5);
    CHECK(clusp(g5, 1ull << 12) == Rational(0));          // lone dot
    CHECK_THROWS_AS(clusp(g5, 0), UndefinedMetric);       // no dot blocks
    DualGraph lone = grid_graph(1, 1);
    CHECK_THROWS_AS(clus(lone, 1), UndefinedMetric);      // edgeless graph
}

TEST_CASE("clus and clusp stay inside [0,1]") {
    DualGraph g = grid_graph(4, 4);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        std::uint64_t v = rng() & 0xffff;
        Rational c = clus(g, v);
        CHECK(Rational(0) <= c);
        CHECK(c <= Rational(1));
        if (v != 0) {
            Rational cp = clusp(g, v);
            CHECK(Rational(0) <= cp);
            CHECK(cp <= Rational(1));
        }
    }
}

TEST_CASE("district representation thresholds") {
    BlockMask five = 0b11111;
    CHECK(district_rep(0b00111, five, 5) == 1.0);   // 3 of 5
    CHECK(district_rep(0b00011, five, 5) == 0.0);   // 2 of 5
    CHECK(district_rep(0b01, 0b11, 2) == 0.5);      // tie
    CHECK_THROWS_AS(district_rep(0, BlockMask{0}, 5), std::invalid_argument);
}

TEST_CASE("odd district size never yields a half seat") {
    DualGraph g = grid_graph(5, 5);
    PlanSet ps = enumerate_plans(5);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        std::uint64_t v = rng() & ((1ull << 25) - 1);
        const Plan& p = ps.plans[rng() % ps.plans.size()];
        CHECK(total_rep2(v, p) % 2 == 0);
    }
}

TEST_CASE("seat counts for the two-plan example") {
    DualGraph g = grid_graph(5, 5);
    std::uint64_t dots = fixtures::seat_example_dots();
    CHECK(num_of(dots) == 10);
    Plan left = fixtures::seat_example_plan_left(g);
    Plan right = fixtures::seat_example_plan_right(g);
    REQUIRE(is_legal(g, left));
    REQUIRE(is_legal(g, right));
    CHECK(total_rep(dots, left) == 1.0);
    CHECK(total_rep(dots, right) == 3.0);
    CHECK(total_rep((1ull << 25) - 1, left) == 5.0);
}

TEST_CASE("rep_stats basics") {
    PlanSet ps = enumerate_plans(4);
    RepStats zero = rep_stats(0, ps);
    CHECK(zero.expectation == Rational(0));
    CHECK(zero.variance == Rational(0));
    CHECK(zero.min2 == 0);
    CHECK(zero.max2 == 0);
    CHECK(zero.histogram[0] == static_cast<std::int64_t>(ps.plans.size()));

    std::mt19937_64 rng(19);
    for (int i = 0; i < 20; ++i) {
        std::uint64_t v = rng() & 0xffff;
        RepStats st = rep_stats(v, ps);
        std::int64_t total = 0;
        for (auto h : st.histogram) total += h;
        CHECK(total == st.total_plans);
        CHECK(Rational(st.min2, 2) <= st.expectation);
        CHECK(st.expectation <= Rational(st.max2, 2));
        CHECK(Rational(0) <= st.variance);
    }
    CHECK_THROWS_AS(rep_stats(0, PlanSet{}), std::invalid_argument);
}

TEST_CASE("complement identity on the 4x4 grid") {
    PlanSet ps = enumerate_plans(4);
    std::mt19937_64 rng(23);
    const std::uint64_t all = 0xffff;
    for (int i = 0; i < 100; ++i) {
        std::uint64_t v = rng() & all;
        RepStats a = rep_stats(v, ps);
        RepStats b = rep_stats(~v & all, ps);
        CHECK(a.expectation + b.expectation == Rational(4));
    }
}

TEST_CASE("monotonicity under dot addition") {
    PlanSet ps = enumerate_plans(4);
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        std::uint64_t v = rng() & 0xffff;
        int missing = 16 - num_of(v);
        if (missing == 0) continue;
        int pickth = static_cast<int>(rng() % missing);
        std::uint64_t w = v;
        for (int b = 0, seen = 0; b < 16; ++b)
            if (!((v >> b) & 1) && seen++ == pickth) {
                w |= 1ull << b;
                break;
            }
        CHECK(rep_stats(v, ps).expectation <= rep_stats(w, ps).expectation);
    }
}
