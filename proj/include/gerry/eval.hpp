#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "gerry/metrics.hpp"
#include "gerry/plan.hpp"

namespace gerry {

// Distinct district masks across a plan set with multiplicities. Collapses
// the expected-seats sum: E(Rep) = sum over masks of mult * seat / |plans|.
struct MaskTable {
    std::vector<BlockMask> masks;
    std::vector<std::uint32_t> mult;
    int district_size = 0;
    int n_districts = 0;
    std::int64_t n_plans = 0;
};

MaskTable build_mask_table(const PlanSet& plans);

// Expected seats, exact up to one floating division.
double exact_e_rep(std::uint64_t bits, const MaskTable& table);

// Random walk over legal plans. One proposal per step: pick an adjacent
// district pair, swap one mutual-boundary block of each, Metropolis-Hastings
// accept so the stationary distribution on the reachable set is uniform.
struct ChainState {
    const DualGraph* g = nullptr;
    Plan plan;
    std::uint64_t steps = 0;
    std::uint64_t accepts = 0;
    std::mt19937_64 rng;
};

ChainState make_chain(const DualGraph& g, int n_districts, std::uint64_t seed);
void chain_step(ChainState& s);

// Deterministic greedy construction of one legal plan; throws on failure.
Plan initial_plan(const DualGraph& g, int n_districts);

// Eval(dist) ~ E(Rep_dist): exact over a plan set, a uniform subsample of it,
// or a thinned MCMC chain over plans.
class Evaluator {
  public:
    enum class SampleMode { with_replacement, full_pass };

    static Evaluator exact(const PlanSet& plans);
    static Evaluator sampled(const PlanSet& plans, std::size_t sample_size, std::uint64_t seed,
                             SampleMode mode = SampleMode::with_replacement);
    static Evaluator chain(const DualGraph& g, int n_districts, std::uint64_t steps,
                           std::uint64_t burn_in, std::uint64_t thinning, std::uint64_t seed);

    double eval(std::uint64_t bits);
    std::uint64_t evaluations() const { return evaluations_; }

  private:
    Evaluator() = default;
    enum class Backend { exact, sampled, chain } backend_ = Backend::exact;
    MaskTable table_;
    const PlanSet* plans_ = nullptr;
    std::size_t sample_size_ = 0;
    SampleMode mode_ = SampleMode::with_replacement;
    const DualGraph* g_ = nullptr;
    int n_districts_ = 0;
    std::uint64_t steps_ = 0, burn_in_ = 0, thinning_ = 1;
    std::mt19937_64 rng_;
    std::uint64_t evaluations_ = 0;
};

}  // namespace gerry
