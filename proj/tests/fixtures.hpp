#pragma once

// Shared worked-example fixtures used by unit and acceptance tests: the
// eight-block example graph, the 5x5 seat-count example with its two plans,
// and the extremal Num = 9, 10, 11 grids.

#include <cstdint>
#include <utility>
#include <vector>

#include "gerry/graph.hpp"
#include "gerry/plan.hpp"

namespace fixtures {

// Eight blocks A..H indexed 0..7; twelve edges; dots on A, D, F, G.
inline gerry::DualGraph example_graph() {
    return gerry::make_graph(8,
                             {{0, 1}, {1, 6}, {6, 7}, {7, 3}, {3, 2}, {2, 0},
                              {0, 4}, {4, 5}, {5, 6}, {6, 4}, {4, 2}, {5, 3}},
                             {0, 1, 2, 3, 5, 6, 7});
}

inline std::uint64_t example_dots() {
    return (1ull << 0) | (1ull << 3) | (1ull << 5) | (1ull << 6);  // A, D, F, G
}

// Cells below are (col, row-from-bottom) on an n x n grid.
using Cell = std::pair<int, int>;

inline std::uint64_t bits_from_cells(const std::vector<Cell>& cells, int n) {
    std::uint64_t bits = 0;
    for (auto [x, y] : cells) bits |= std::uint64_t{1} << ((n - 1 - y) * n + x);
    return bits;
}

inline gerry::Plan plan_from_districts(const gerry::DualGraph& g,
                                       const std::vector<std::vector<Cell>>& districts, int n) {
    std::vector<std::uint8_t> assignment(g.k);
    for (std::size_t d = 0; d < districts.size(); ++d)
        for (auto [x, y] : districts[d])
            assignment[(n - 1 - y) * n + x] = static_cast<std::uint8_t>(d);
    return gerry::make_plan(g, assignment);
}

// The Num = 10 distribution used in the two-plan seat-count example.
inline std::uint64_t seat_example_dots() {
    return bits_from_cells({{2, 4}, {3, 4}, {4, 4}, {0, 3}, {1, 3},
                            {2, 3}, {3, 3}, {0, 2}, {1, 2}, {0, 1}},
                           5);
}

// Plan under which the dot party takes one seat.
inline gerry::Plan seat_example_plan_left(const gerry::DualGraph& g) {
    return plan_from_districts(
        g,
        {{{0, 0}, {1, 0}, {2, 0}, {1, 1}, {2, 1}},
         {{3, 0}, {4, 0}, {3, 1}, {3, 2}, {3, 3}},
         {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}},
         {{0, 4}, {1, 4}, {2, 4}, {2, 2}, {2, 3}},
         {{3, 4}, {4, 4}, {4, 1}, {4, 2}, {4, 3}}},
        5);
}

// Plan under which the same distribution takes three seats.
inline gerry::Plan seat_example_plan_right(const gerry::DualGraph& g) {
    return plan_from_districts(
        g,
        {{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {3, 1}},
         {{0, 3}, {1, 3}, {2, 3}, {3, 3}, {0, 4}},
         {{4, 0}, {4, 1}, {2, 2}, {3, 2}, {4, 2}},
         {{0, 1}, {1, 1}, {2, 1}, {0, 2}, {1, 2}},
         {{4, 3}, {4, 4}, {1, 4}, {2, 4}, {3, 4}}},
        5);
}

// Representation-maximizing distributions for Num = 9, 10, 11.
inline std::uint64_t best_grid(int num) {
    std::vector<Cell> base = {{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}, {4, 2}, {4, 3}, {4, 4}};
    if (num == 9) return bits_from_cells(base, 5);
    if (num == 10) {
        base.push_back({3, 3});
        return bits_from_cells(base, 5);
    }
    if (num == 11)
        return bits_from_cells({{1, 0}, {2, 0}, {2, 1}, {2, 4}, {3, 0}, {3, 2},
                                {3, 3}, {3, 4}, {4, 1}, {4, 2}, {4, 4}},
                               5);
    return 0;
}

// Representation-minimizing distributions for Num = 9, 10, 11.
inline std::uint64_t worst_grid(int num) {
    if (num == 9)
        return bits_from_cells(
            {{0, 0}, {0, 3}, {1, 1}, {1, 4}, {2, 2}, {3, 0}, {3, 3}, {4, 1}, {4, 4}}, 5);
    if (num == 10)
        return bits_from_cells({{0, 0}, {0, 3}, {1, 2}, {1, 4}, {2, 1},
                                {2, 3}, {3, 0}, {3, 2}, {4, 1}, {4, 4}},
                               5);
    if (num == 11)
        return bits_from_cells({{0, 0}, {0, 2}, {1, 2}, {1, 4}, {2, 1}, {2, 3},
                                {3, 0}, {3, 2}, {3, 4}, {4, 1}, {4, 3}},
                               5);
    return 0;
}

}  // namespace fixtures
