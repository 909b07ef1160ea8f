#include "doctest.h"

#include <bit>
#include <cmath>
#include <random>
#include <set>

#include "gerry/enumerate.hpp"
#include "gerry/optimize.hpp"

using namespace gerry;

TEST_CASE("evolve preserves popcount and respects theta") {
    DualGraph g = grid_graph(5, 5);
    std::mt19937_64 rng(1);

    // theta = 0: the strict inequality never fires, so nothing moves
    std::uint64_t v = 0b1010110101;
    CHECK(evolve(g, v, 0.0, rng) == v);

    // all alike: every proportion is 1
    std::uint64_t all = (1ull << 25) - 1;
    CHECK(evolve(g, all, 1.0, rng) == all);

    // lone corner dot at theta 0.4: only the dot is unhappy, and permuting
    // a single element changes nothing
    CHECK(evolve(g, 1ull << 0, 0.4, rng) == (1ull << 0));

    for (int i = 0; i < 200; ++i) {
        std::uint64_t w = rng() & all;
        CHECK(std::popcount(evolve(g, w, 0.6, rng)) == std::popcount(w));
    }
}

TEST_CASE("step_random permutes values of chosen blocks") {
    std::mt19937_64 rng(2);
    CHECK(step_random(0, 25, 25, rng) == 0);  // all-zeros fixed
    for (int i = 0; i < 200; ++i) {
        std::uint64_t v = rng() & ((1ull << 25) - 1);
        CHECK(std::popcount(step_random(v, 25, 4, rng)) == std::popcount(v));
    }
    // n_swap = 2 on 2x2 with a single dot: dot lands on one of the two
    // touched positions
    for (int i = 0; i < 50; ++i) {
        std::uint64_t out = step_random(0b0001, 4, 2, rng);
        CHECK(std::popcount(out) == 1);
    }
    CHECK_THROWS_AS(step_random(0, 4, 1, rng), std::invalid_argument);
    CHECK_THROWS_AS(step_random(0, 4, 5, rng), std::invalid_argument);
}

TEST_CASE("prob_accept analytic values") {
    CHECK(prob_accept(0.0, 1.0) == 1.0);
    CHECK(prob_accept(-1.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(prob_accept(0.5, 2.0) >= 1.0);
    CHECK_THROWS_AS(prob_accept(0.1, 0.0), std::invalid_argument);
    // monotone in delta and, for delta < 0, in t
    CHECK(prob_accept(-0.5, 1.0) < prob_accept(-0.25, 1.0));
    CHECK(prob_accept(-0.5, 1.0) < prob_accept(-0.5, 2.0));
}

TEST_CASE("random_distribution draws the requested popcount") {
    std::mt19937_64 rng(3);
    for (int num = 0; num <= 16; num += 4)
        for (int i = 0; i < 50; ++i)
            CHECK(std::popcount(random_distribution(16, num, rng)) == num);
}

namespace {

struct Setup {
    DualGraph g = grid_graph(4, 4);
    PlanSet ps = enumerate_plans(4);
    Evaluator e = Evaluator::exact(ps);
};

}  // namespace

TEST_CASE("trial results are monotone and deterministic under a fixed seed") {
    Setup s;
    OptimizerConfig cfg;
    cfg.k_max = 60;
    cfg.seed = 12345;
    for (const char* alg : {"rrils", "sa", "rsa", "random"}) {
        TrialResult a = run_algorithm(alg, s.e, s.g, 6, cfg);
        TrialResult b = run_algorithm(alg, s.e, s.g, 6, cfg);
        CHECK(a.best_bits == b.best_bits);
        CHECK(a.best_so_far == b.best_so_far);
        REQUIRE(!a.best_so_far.empty());
        for (std::size_t i = 1; i < a.best_so_far.size(); ++i)
            CHECK(a.best_so_far[i] >= a.best_so_far[i - 1]);
        CHECK(a.best_so_far.back() == a.best_score);
        CHECK(std::popcount(a.best_bits) == 6);
    }
}

TEST_CASE("k_max of one returns a single evaluation") {
    Setup s;
    OptimizerConfig cfg;
    cfg.k_max = 1;
    cfg.seed = 9;
    TrialResult r = rrils(s.e, s.g, 5, cfg);
    CHECK(r.best_so_far.size() == 1);
    TrialResult b = random_benchmark(s.e, s.g, 5, 1, 9);
    CHECK(b.best_so_far.size() == 1);
}

TEST_CASE("degenerate annealing terminates with the initial score") {
    Setup s;
    OptimizerConfig cfg;
    cfg.alpha = 1.0;
    cfg.theta_r = 0.0;
    cfg.theta = 0.0;  // evolve is the identity
    cfg.k_max = 50;
    cfg.seed = 77;
    TrialResult r = simulated_anneal(s.e, s.g, 6, cfg);
    CHECK(r.best_so_far.size() == 1);  // only the initial state is ever evaluated
}

TEST_CASE("benchmark extremes") {
    Setup s;
    TrialResult zero = random_benchmark(s.e, s.g, 0, 5, 1);
    for (double v : zero.best_so_far) CHECK(v == 0.0);
    TrialResult full = random_benchmark(s.e, s.g, 16, 5, 1);
    CHECK(full.best_score == 4.0);  // every district won
}

TEST_CASE("compare produces monotone bounded curves") {
    Setup s;
    OptimizerConfig base;
    auto rowsv = compare({"random", "rsa"}, s.e, s.g, 6, 5, {1, 10, 50}, base, 2024);
    REQUIRE(rowsv.size() == 6);
    for (std::size_t i = 0; i < rowsv.size(); i += 3) {
        CHECK(rowsv[i].mean_best <= rowsv[i + 1].mean_best);
        CHECK(rowsv[i + 1].mean_best <= rowsv[i + 2].mean_best);
    }
    for (const auto& r : rowsv) CHECK(r.mean_best <= 4.0);
}

TEST_CASE("config validation") {
    OptimizerConfig cfg;
    cfg.theta = 1.5;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.t0 = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.n_swap = 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
