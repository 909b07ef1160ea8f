#pragma once

#include <cstdint>
#include <optional>

#include "gerry/plan.hpp"
#include "gerry/symmetry.hpp"

namespace gerry {

// All partitions of the n x n grid into n contiguous districts of n blocks,
// label-normalized, file order (lexicographic by digit string). Counts match
// 1, 2, 10, 117, 4006, 451206 for n = 1..6.
PlanSet enumerate_plans(int n);

// Streams voter distributions on k blocks in increasing numeric order, all
// 2^k of them or only those with a fixed popcount.
class DistStream {
  public:
    DistStream(int k, std::optional<int> num);
    // resumes strictly after `last`
    DistStream(int k, std::optional<int> num, std::uint64_t last);

    // next distribution, or nullopt when exhausted
    std::optional<std::uint64_t> next();

    static std::uint64_t count(int k, std::optional<int> num);

  private:
    int k_;
    std::optional<int> num_;
    std::uint64_t cur_ = 0;
    bool done_ = false;
    bool started_ = false;
};

// Smallest D4 image of a distribution on the n x n grid. Idempotent.
std::uint64_t canonicalize(std::uint64_t bits, int n);

}  // namespace gerry
