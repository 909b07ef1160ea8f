#include "gerry/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace gerry {

void OptimizerConfig::validate() const {
    if (theta < 0.0 || theta > 1.0) throw std::invalid_argument("config: theta must be in [0,1]");
    if (t0 <= 0.0) throw std::invalid_argument("config: t0 must be > 0");
    if (alpha <= 0.0 || alpha > 1.0) throw std::invalid_argument("config: alpha must be in (0,1]");
    if (theta_r < 0.0 || theta_r > 1.0) throw std::invalid_argument("config: theta_r must be in [0,1]");
    if (n_swap < 2) throw std::invalid_argument("config: n_swap must be >= 2");
    if (k_max < 1) throw std::invalid_argument("config: k_max must be >= 1");
}

std::uint64_t evolve(const DualGraph& g, std::uint64_t bits, double theta, std::mt19937_64& rng) {
    if (theta < 0.0 || theta > 1.0) throw std::invalid_argument("evolve: theta must be in [0,1]");
    std::vector<BlockId> unhappy;
    std::vector<std::uint8_t> values;
    for (BlockId b = 0; b < g.k; ++b) {
        const auto& nb = g.adj[b];
        if (nb.empty()) continue;
        int same = 0;
        bool v = (bits >> b) & 1;
        for (BlockId x : nb)
            if (((bits >> x) & 1) == v) ++same;
        if (static_cast<double>(same) < theta * static_cast<double>(nb.size())) {
            unhappy.push_back(b);
            values.push_back(v);
        }
    }
    std::shuffle(values.begin(), values.end(), rng);
    std::uint64_t out = bits;
    for (std::size_t i = 0; i < unhappy.size(); ++i) {
        out &= ~(std::uint64_t{1} << unhappy[i]);
        out |= std::uint64_t{values[i]} << unhappy[i];
    }
    return out;
}

std::uint64_t step_random(std::uint64_t bits, int k, int n_swap, std::mt19937_64& rng) {
    if (n_swap < 2 || n_swap > k) throw std::invalid_argument("step_random: n_swap out of range");
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < n_swap; ++i) {
        int j = i + static_cast<int>(std::uniform_int_distribution<int>(0, k - 1 - i)(rng));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(n_swap);
    std::sort(idx.begin(), idx.end());
    std::vector<std::uint8_t> values;
    values.reserve(n_swap);
    for (int b : idx) values.push_back((bits >> b) & 1);
    std::shuffle(values.begin(), values.end(), rng);
    std::uint64_t out = bits;
    for (int i = 0; i < n_swap; ++i) {
        out &= ~(std::uint64_t{1} << idx[i]);
        out |= std::uint64_t{values[i]} << idx[i];
    }
    return out;
}

std::uint64_t random_distribution(int k, int num, std::mt19937_64& rng) {
    if (num < 0 || num > k) throw std::invalid_argument("random_distribution: num out of range");
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::uint64_t out = 0;
    for (int i = 0; i < num; ++i) {
        int j = i + static_cast<int>(std::uniform_int_distribution<int>(0, k - 1 - i)(rng));
        std::swap(idx[i], idx[j]);
        out |= std::uint64_t{1} << idx[i];
    }
    return out;
}

double prob_accept(double delta_score, double t) {
    if (t <= 0.0) throw std::invalid_argument("prob_accept: t must be > 0");
    return std::exp(delta_score / t);
}

namespace {

// Trials record: memoized scores keyed by distribution. Only evaluations of
// unseen states consume the k_max budget. Earliest-visited wins ties.
struct Recorder {
    Evaluator& e;
    long k_max;
    std::unordered_map<std::uint64_t, double> trials;
    TrialResult res;

    Recorder(Evaluator& ev, long budget) : e(ev), k_max(budget) {}

    bool budget_left() const { return static_cast<long>(res.best_so_far.size()) < k_max; }

    // Returns false when the state is unseen and the budget is spent.
    bool try_score(std::uint64_t bits, double& out) {
        auto it = trials.find(bits);
        if (it != trials.end()) {
            out = it->second;
            return true;
        }
        if (!budget_left()) return false;
        out = e.eval(bits);
        trials.emplace(bits, out);
        if (res.best_so_far.empty() || out > res.best_score) {
            res.best_score = out;
            res.best_bits = bits;
        }
        res.best_so_far.push_back(res.best_score);
        return true;
    }
};

// Iterations tolerated without a new evaluation before bailing out; guards
// against degenerate configurations where proposals never leave the set of
// already-scored states (e.g. theta = 0 making evolve the identity).
constexpr int kStallCap = 10000;

}  // namespace

TrialResult rrils(Evaluator& e, const DualGraph& g, int num, const OptimizerConfig& cfg) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    Recorder rec(e, cfg.k_max);
    int stall = 0;
    while (rec.budget_left() && stall < kStallCap) {
        std::uint64_t d = random_distribution(static_cast<int>(g.k), num, rng);
        while (true) {
            std::size_t before = rec.res.best_so_far.size();
            double s;
            if (!rec.try_score(d, s)) break;
            stall = rec.res.best_so_far.size() == before ? stall + 1 : 0;
            std::uint64_t dn = evolve(g, d, cfg.theta, rng);
            if (dn == d) break;  // fixpoint of this draw: restart
            d = dn;
            if (!rec.budget_left() || stall >= kStallCap) break;
        }
    }
    return rec.res;
}

namespace {

TrialResult anneal_impl(Evaluator& e, const DualGraph& g, int num, const OptimizerConfig& cfg,
                        bool random_step) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    Recorder rec(e, cfg.k_max);
    const int k = static_cast<int>(g.k);
    double t = cfg.t0;
    std::uint64_t d = random_distribution(k, num, rng);
    double score;
    if (!rec.try_score(d, score)) return rec.res;
    const double theta_r = random_step ? 0.0 : cfg.theta_r;
    int stall = 0;
    while (rec.budget_left() && stall < kStallCap) {
        std::size_t before = rec.res.best_so_far.size();
        std::uint64_t dn = random_step ? step_random(d, k, cfg.n_swap, rng)
                                       : evolve(g, d, cfg.theta, rng);
        // A self-proposal (e.g. every block already happy) is a non-move:
        // accepting it would pin the search forever, so route it to the
        // random-restart branch instead.
        bool moved = false;
        if (dn != d) {
            double score_n;
            if (!rec.try_score(dn, score_n)) break;
            double delta = score_n - score;
            if (prob_accept(delta, t) > std::uniform_real_distribution<double>(0.0, 1.0)(rng)) {
                d = dn;
                score = score_n;
                if (!cfg.cool_every_step) t *= cfg.alpha;
                moved = true;
            }
        }
        if (!moved && theta_r > std::uniform_real_distribution<double>(0.0, 1.0)(rng)) {
            d = random_distribution(k, num, rng);
            if (!rec.try_score(d, score)) break;
        }
        if (cfg.cool_every_step) t *= cfg.alpha;
        stall = rec.res.best_so_far.size() == before ? stall + 1 : 0;
    }
    return rec.res;
}

}  // namespace

TrialResult simulated_anneal(Evaluator& e, const DualGraph& g, int num,
                             const OptimizerConfig& cfg) {
    return anneal_impl(e, g, num, cfg, false);
}

TrialResult rsa(Evaluator& e, const DualGraph& g, int num, const OptimizerConfig& cfg) {
    return anneal_impl(e, g, num, cfg, true);
}

TrialResult random_benchmark(Evaluator& e, const DualGraph& g, int num, long k_max,
                             std::uint64_t seed) {
    if (k_max < 1) throw std::invalid_argument("random_benchmark: k_max must be >= 1");
    std::mt19937_64 rng(seed);
    TrialResult res;
    for (long i = 0; i < k_max; ++i) {
        std::uint64_t d = random_distribution(static_cast<int>(g.k), num, rng);
        double s = e.eval(d);
        if (i == 0 || s > res.best_score) {
            res.best_score = s;
            res.best_bits = d;
        }
        res.best_so_far.push_back(res.best_score);
    }
    return res;
}

TrialResult run_algorithm(const std::string& name, Evaluator& e, const DualGraph& g, int num,
                          const OptimizerConfig& cfg) {
    if (name == "rrils") return rrils(e, g, num, cfg);
    if (name == "sa") return simulated_anneal(e, g, num, cfg);
    if (name == "rsa") return rsa(e, g, num, cfg);
    if (name == "random") return random_benchmark(e, g, num, cfg.k_max, cfg.seed);
    throw std::invalid_argument("unknown algorithm: " + name);
}

std::vector<CurvePoint> compare(const std::vector<std::string>& algorithms, Evaluator& e,
                                const DualGraph& g, int num, int trials,
                                const std::vector<long>& k_max_grid, const OptimizerConfig& base,
                                std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("compare: trials must be >= 1");
    if (k_max_grid.empty()) throw std::invalid_argument("compare: empty k_max grid");
    long top = *std::max_element(k_max_grid.begin(), k_max_grid.end());
    auto mix = [](std::uint64_t x) {  // splitmix64
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    };
    std::vector<CurvePoint> out;
    for (std::size_t ai = 0; ai < algorithms.size(); ++ai) {
        std::vector<std::vector<double>> per_budget(k_max_grid.size());
        for (int t = 0; t < trials; ++t) {
            OptimizerConfig cfg = base;
            cfg.k_max = top;
            cfg.seed = mix(seed + mix(ai * 1000003ull + t));
            TrialResult r = run_algorithm(algorithms[ai], e, g, num, cfg);
            for (std::size_t bi = 0; bi < k_max_grid.size(); ++bi) {
                std::size_t want = static_cast<std::size_t>(k_max_grid[bi]);
                std::size_t at = std::min(want, r.best_so_far.size());
                per_budget[bi].push_back(r.best_so_far[at - 1]);
            }
        }
        for (std::size_t bi = 0; bi < k_max_grid.size(); ++bi) {
            const auto& vals = per_budget[bi];
            double mean = std::accumulate(vals.begin(), vals.end(), 0.0) / vals.size();
            double var = 0.0;
            for (double v : vals) var += (v - mean) * (v - mean);
            double se = vals.size() > 1 ? std::sqrt(var / (vals.size() - 1) / vals.size()) : 0.0;
            out.push_back({algorithms[ai], k_max_grid[bi], mean, se});
        }
    }
    return out;
}

}  // namespace gerry
