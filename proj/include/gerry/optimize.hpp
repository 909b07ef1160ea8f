#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gerry/eval.hpp"
#include "gerry/graph.hpp"

namespace gerry {

struct OptimizerConfig {
    double theta = 0.4;    // happiness threshold
    double t0 = 1.0;       // initial temperature
    double alpha = 0.95;   // cooling schedule
    double theta_r = 0.05; // random-restart probability
    int n_swap = 4;        // blocks shuffled per random step
    long k_max = 1000;     // evaluation budget
    std::uint64_t seed = 0;
    bool cool_every_step = false;  // opt-in: cool on every iteration, not only on acceptance

    void validate() const;
};

struct TrialResult {
    std::uint64_t best_bits = 0;
    double best_score = 0.0;
    std::vector<double> best_so_far;  // one entry per evaluation, cumulative max
};

// One sweep of the unhappy-block shuffle: blocks whose like-neighbor
// proportion is below theta trade values under a uniform random permutation.
// Preserves popcount; blocks with no neighbors count as happy.
std::uint64_t evolve(const DualGraph& g, std::uint64_t bits, double theta, std::mt19937_64& rng);

// Permutes the values of n_swap uniformly chosen distinct blocks.
std::uint64_t step_random(std::uint64_t bits, int k, int n_swap, std::mt19937_64& rng);

// Uniform random distribution with the given popcount.
std::uint64_t random_distribution(int k, int num, std::mt19937_64& rng);

double prob_accept(double delta_score, double t);

TrialResult rrils(Evaluator& e, const DualGraph& g, int num, const OptimizerConfig& cfg);
TrialResult simulated_anneal(Evaluator& e, const DualGraph& g, int num, const OptimizerConfig& cfg);
TrialResult rsa(Evaluator& e, const DualGraph& g, int num, const OptimizerConfig& cfg);
TrialResult random_benchmark(Evaluator& e, const DualGraph& g, int num, long k_max,
                             std::uint64_t seed);

// Dispatch by name: "rrils", "sa", "rsa", "random".
TrialResult run_algorithm(const std::string& name, Evaluator& e, const DualGraph& g, int num,
                          const OptimizerConfig& cfg);

struct CurvePoint {
    std::string algorithm;
    long k_max = 0;
    double mean_best = 0.0;
    double stderr_best = 0.0;
};

// Mean best-so-far per algorithm at each budget in k_max_grid; budgets share
// one trial run (values read off the best_so_far sequence), so curves are
// monotone by construction. Trials use per-trial derived seeds.
std::vector<CurvePoint> compare(const std::vector<std::string>& algorithms, Evaluator& e,
                                const DualGraph& g, int num, int trials,
                                const std::vector<long>& k_max_grid, const OptimizerConfig& base,
                                std::uint64_t seed);

}  // namespace gerry
