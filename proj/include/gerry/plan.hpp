#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gerry/graph.hpp"

namespace gerry {

// Block subsets are k-bit masks (k <= 64 everywhere we enumerate).
using BlockMask = std::uint64_t;

// A districting plan: every district has exactly `district_size` blocks,
// labels normalized to first appearance in block-index order.
struct Plan {
    std::vector<std::uint8_t> assignment;  // block -> district id
    int n_districts = 0;
    int district_size = 0;
    std::vector<BlockMask> masks;          // one bitmask per district

    // Digit string of the normalized assignment; doubles as the file line.
    std::string key() const;

    friend bool operator==(const Plan& a, const Plan& b) {
        return a.assignment == b.assignment;
    }
};

// Normalizes labels and builds the per-district masks. Throws if the
// assignment length mismatches g.k or districts are not equally sized.
Plan make_plan(const DualGraph& g, std::vector<std::uint8_t> assignment);

// True iff the induced subgraph on `blocks` is connected. Empty set is invalid.
bool is_contiguous(const DualGraph& g, BlockMask blocks);
bool is_contiguous(const DualGraph& g, const std::vector<BlockId>& blocks);

// Def-faithful legality: equal district sizes, each district connected, and
// removing any district leaves every remaining component touching a border.
bool is_legal(const DualGraph& g, const Plan& plan);

struct PlanSet {
    int n = 0;  // grid side; plans partition the n x n grid into n districts
    std::vector<Plan> plans;
};

// Plan file format (bit-exact): header `gerrygrid-plans v1 n=<n>`, then one
// plan per line as k digits, lines sorted lexicographically.
void write_plans(const PlanSet& ps, std::ostream& out);
PlanSet read_plans(std::istream& in);

}  // namespace gerry
