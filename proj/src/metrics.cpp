#include "gerry/metrics.hpp"

#include <bit>

namespace gerry {

int num_of(std::uint64_t bits) { return std::popcount(bits); }

Rational clus(const DualGraph& g, std::uint64_t bits) {
    if (g.edges.empty()) throw UndefinedMetric("clus: graph has no edges");
    std::int64_t same = 0;
    for (auto [a, b] : g.edges)
        if (((bits >> a) & 1) == ((bits >> b) & 1)) ++same;
    return Rational(same, static_cast<std::int64_t>(g.edges.size()));
}

Rational clusp(const DualGraph& g, std::uint64_t bits) {
    std::int64_t dot_dot = 0, dot_out = 0;
    for (auto [a, b] : g.edges) {
        bool da = (bits >> a) & 1, db = (bits >> b) & 1;
        if (da && db) {
            dot_dot += 2;  // both directions
            dot_out += 2;
        } else if (da || db) {
            dot_out += 1;
        }
    }
    if (dot_out == 0) throw UndefinedMetric("clusp: no edge leaves a dot block");
    return Rational(dot_dot, dot_out);
}

int district_rep2(std::uint64_t bits, BlockMask district, int m) {
    if (district == 0) throw std::invalid_argument("district_rep: empty district");
    int dots2 = 2 * std::popcount(bits & district);
    if (dots2 > m) return 2;
    if (dots2 == m) return 1;
    return 0;
}

double district_rep(std::uint64_t bits, BlockMask district, int m) {
    return district_rep2(bits, district, m) / 2.0;
}

int total_rep2(std::uint64_t bits, const Plan& plan) {
    int sum = 0;
    for (BlockMask d : plan.masks) sum += district_rep2(bits, d, plan.district_size);
    return sum;
}

double total_rep(std::uint64_t bits, const Plan& plan) { return total_rep2(bits, plan) / 2.0; }

RepStats rep_stats(std::uint64_t bits, const PlanSet& plans) {
    if (plans.plans.empty()) throw std::invalid_argument("rep_stats: empty plan set");
    const int nd = plans.plans.front().n_districts;
    RepStats st;
    st.histogram.assign(2 * nd + 1, 0);
    st.total_plans = static_cast<std::int64_t>(plans.plans.size());
    std::int64_t sum2 = 0, sumsq4 = 0;  // seat sums in half-units and quarter-units
    st.min2 = 2 * nd;
    st.max2 = 0;
    for (const Plan& p : plans.plans) {
        int r2 = total_rep2(bits, p);
        ++st.histogram[r2];
        sum2 += r2;
        sumsq4 += static_cast<std::int64_t>(r2) * r2;
        if (r2 < st.min2) st.min2 = r2;
        if (r2 > st.max2) st.max2 = r2;
    }
    st.expectation = Rational(sum2, 2 * st.total_plans);
    // Var = E[X^2] - E[X]^2 with X in seats
    Rational ex2 = Rational(sumsq4, 4 * st.total_plans);
    st.variance = ex2 - st.expectation * st.expectation;
    return st;
}

}  // namespace gerry
