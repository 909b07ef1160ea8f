#include "doctest.h"

#include <sstream>

#include "gerry/graph.hpp"

using namespace gerry;

TEST_CASE("grid graph shape") {
    DualGraph g = grid_graph(5, 5);
    CHECK(g.k == 25);
    CHECK(g.edges.size() == 40);  // 5*4 + 5*4

    DualGraph one = grid_graph(1, 1);
    CHECK(one.k == 1);
    CHECK(one.edges.empty());
    CHECK(one.border[0]);
    CHECK(one.neighbors(0).empty());

    DualGraph two = grid_graph(2, 2);
    CHECK(two.k == 4);
    CHECK(two.edges.size() == 4);
    for (BlockId b = 0; b < 4; ++b) CHECK(two.border[b]);

    CHECK_THROWS_AS(grid_graph(0, 3), std::invalid_argument);
}

TEST_CASE("grid neighbors are rook-adjacent and symmetric") {
    DualGraph g = grid_graph(5, 5);
    CHECK(g.neighbors(0) == std::vector<BlockId>{1, 5});          // corner
    CHECK(g.neighbors(12) == std::vector<BlockId>{7, 11, 13, 17});  // center
    for (BlockId a = 0; a < g.k; ++a)
        for (BlockId b : g.neighbors(a)) {
            const auto& back = g.neighbors(b);
            CHECK(std::find(back.begin(), back.end(), a) != back.end());
        }
    CHECK_THROWS_AS(g.neighbors(25), std::invalid_argument);
}

TEST_CASE("grid degree sum and connectivity") {
    for (int n = 1; n <= 6; ++n) {
        DualGraph g = grid_graph(n, n);
        std::size_t deg_sum = 0;
        for (BlockId b = 0; b < g.k; ++b) {
            deg_sum += g.neighbors(b).size();
            if (n > 1) {
                CHECK(g.neighbors(b).size() >= 2);
                CHECK(g.neighbors(b).size() <= 4);
            }
        }
        CHECK(deg_sum == 2 * g.edges.size());
        // border flags per definition
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                CHECK(g.border[r * n + c] == (r == 0 || c == 0 || r == n - 1 || c == n - 1));
    }
}

TEST_CASE("general graph construction validates input") {
    CHECK_THROWS_AS(make_graph(2, {{0, 0}}, {0}), std::invalid_argument);   // self loop
    CHECK_THROWS_AS(make_graph(2, {{0, 1}, {1, 0}}, {0}), std::invalid_argument);  // dup
    CHECK_THROWS_AS(make_graph(3, {{0, 1}}, {0}), std::invalid_argument);   // disconnected
    DualGraph g = make_graph(3, {{0, 1}, {1, 2}}, {0, 2});
    CHECK(g.neighbors(1) == std::vector<BlockId>{0, 2});
    CHECK_FALSE(g.border[1]);
}

TEST_CASE("edge list round trip") {
    DualGraph g = grid_graph(3, 4);
    std::stringstream ss;
    write_edge_list(g, ss);
    DualGraph h = read_edge_list(ss);
    CHECK(h.k == g.k);
    CHECK(h.edges == g.edges);
    CHECK(h.border == g.border);
}
