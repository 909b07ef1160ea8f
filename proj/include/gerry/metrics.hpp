#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gerry/graph.hpp"
#include "gerry/plan.hpp"
#include "gerry/rational.hpp"

namespace gerry {

// Raised when a clustering score has an empty denominator (e.g. no edges
// leave a dot block). Distinct from a score of zero.
struct UndefinedMetric : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int num_of(std::uint64_t bits);

// Fraction of edges whose endpoints vote alike.
Rational clus(const DualGraph& g, std::uint64_t bits);

// Fraction of directed dot-originating edges that end at a dot block;
// dot-dot edges count twice. Throws UndefinedMetric when no edge leaves a dot.
Rational clusp(const DualGraph& g, std::uint64_t bits);

// Seats in half-units: 0, 1 (tie) or 2. m = district size.
int district_rep2(std::uint64_t bits, BlockMask district, int m);
double district_rep(std::uint64_t bits, BlockMask district, int m);

// Seat sum over the plan's districts, in half-units.
int total_rep2(std::uint64_t bits, const Plan& plan);
double total_rep(std::uint64_t bits, const Plan& plan);

// Distribution of the seat count over a uniformly drawn plan.
struct RepStats {
    std::vector<std::int64_t> histogram;  // index = seats * 2, size 2 * n_districts + 1
    Rational expectation;
    Rational variance;  // population variance over plans
    int min2 = 0, max2 = 0;  // extremes in half-units
    std::int64_t total_plans = 0;

    double min_seats() const { return min2 / 2.0; }
    double max_seats() const { return max2 / 2.0; }
};

RepStats rep_stats(std::uint64_t bits, const PlanSet& plans);

}  // namespace gerry
