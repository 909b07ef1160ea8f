#include "doctest.h"

#include <sstream>

#include "gerry/enumerate.hpp"
#include "gerry/plan.hpp"

using namespace gerry;

TEST_CASE("contiguity on the 5x5 grid") {
    DualGraph g = grid_graph(5, 5);
    CHECK(is_contiguous(g, std::vector<BlockId>{0, 1, 2, 3, 4}));  // top row
    CHECK_FALSE(is_contiguous(g, std::vector<BlockId>{0, 6}));     // corner contact only
    CHECK(is_contiguous(g, std::vector<BlockId>{13}));
    CHECK_THROWS_AS(is_contiguous(g, BlockMask{0}), std::invalid_argument);
}

TEST_CASE("legality on the 2x2 grid") {
    DualGraph g = grid_graph(2, 2);
    Plan cols = make_plan(g, {0, 1, 0, 1});
    CHECK(is_legal(g, cols));
    Plan diag = make_plan(g, {0, 1, 1, 0});
    CHECK_FALSE(is_legal(g, diag));
}

TEST_CASE("label normalization is canonical and idempotent") {
    DualGraph g = grid_graph(2, 2);
    Plan a = make_plan(g, {1, 0, 1, 0});
    Plan b = make_plan(g, {0, 1, 0, 1});
    CHECK(a == b);  // relabeling invariance
    Plan c = make_plan(g, a.assignment);
    CHECK(c == a);
    CHECK(a.key() == "0101");
}

TEST_CASE("legality is invariant under relabeling") {
    DualGraph g = grid_graph(3, 3);
    Plan rows = make_plan(g, {2, 2, 2, 0, 0, 0, 1, 1, 1});
    CHECK(is_legal(g, rows));
    CHECK(rows.key() == "000111222");
}

TEST_CASE("make_plan rejects malformed input") {
    DualGraph g = grid_graph(2, 2);
    CHECK_THROWS_AS(make_plan(g, {0, 1, 0}), std::invalid_argument);      // wrong length
    CHECK_THROWS_AS(make_plan(g, {0, 0, 0, 1}), std::invalid_argument);   // unequal sizes
}

TEST_CASE("plan file round trip is byte identical") {
    PlanSet ps = enumerate_plans(3);
    std::stringstream first;
    write_plans(ps, first);
    std::stringstream copy(first.str());
    PlanSet back = read_plans(copy);
    std::stringstream second;
    write_plans(back, second);
    CHECK(first.str() == second.str());
    CHECK(back.plans.size() == ps.plans.size());
}
