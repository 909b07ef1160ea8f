#include "gerry/eval.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace gerry {

MaskTable build_mask_table(const PlanSet& plans) {
    if (plans.plans.empty()) throw std::invalid_argument("build_mask_table: empty plan set");
    MaskTable t;
    t.district_size = plans.plans.front().district_size;
    t.n_districts = plans.plans.front().n_districts;
    t.n_plans = static_cast<std::int64_t>(plans.plans.size());
    std::unordered_map<BlockMask, std::uint32_t> counts;
    for (const Plan& p : plans.plans)
        for (BlockMask m : p.masks) ++counts[m];
    t.masks.reserve(counts.size());
    t.mult.reserve(counts.size());
    for (auto [m, c] : counts) {
        t.masks.push_back(m);
        t.mult.push_back(c);
    }
    return t;
}

double exact_e_rep(std::uint64_t bits, const MaskTable& table) {
    std::int64_t sum2 = 0;
    const int m = table.district_size;
    for (std::size_t i = 0; i < table.masks.size(); ++i) {
        int dots2 = 2 * std::popcount(bits & table.masks[i]);
        int seat2 = dots2 > m ? 2 : (dots2 == m ? 1 : 0);
        sum2 += static_cast<std::int64_t>(table.mult[i]) * seat2;
    }
    return static_cast<double>(sum2) / static_cast<double>(2 * table.n_plans);
}

namespace {

// First-fit partition search: same anchored growth as the exhaustive
// enumerator but stops at the first complete partition.
struct FirstFit {
    const DualGraph& g;
    int m;
    std::vector<BlockMask> adj_mask;
    std::vector<BlockMask> found;

    FirstFit(const DualGraph& graph, int district_size) : g(graph), m(district_size) {
        adj_mask.resize(g.k);
        for (BlockId b = 0; b < g.k; ++b)
            for (BlockId nb : g.adj[b]) adj_mask[b] |= BlockMask{1} << nb;
    }

    bool fill(BlockMask free, std::vector<BlockMask>& acc) {
        if (free == 0) {
            found = acc;
            return true;
        }
        int anchor = std::countr_zero(free);
        BlockMask cur = BlockMask{1} << anchor;
        std::vector<int> ext;
        BlockMask queued = cur;
        for (BlockMask c = adj_mask[anchor] & free; c; c &= c - 1) {
            ext.push_back(std::countr_zero(c));
            queued |= c & -c;
        }
        return grow(cur, ext, 0, queued, free, acc);
    }

    bool grow(BlockMask cur, std::vector<int>& ext, std::size_t pos, BlockMask queued,
              BlockMask free, std::vector<BlockMask>& acc) {
        if (std::popcount(cur) == m) {
            acc.push_back(cur);
            if (fill(free & ~cur, acc)) return true;
            acc.pop_back();
            return false;
        }
        for (std::size_t i = pos; i < ext.size(); ++i) {
            int v = ext[i];
            std::size_t old_size = ext.size();
            BlockMask new_queued = queued;
            for (BlockMask c = adj_mask[v] & free & ~queued; c; c &= c - 1) {
                ext.push_back(std::countr_zero(c));
                new_queued |= c & -c;
            }
            if (grow(cur | BlockMask{1} << v, ext, i + 1, new_queued, free, acc)) return true;
            ext.resize(old_size);
        }
        return false;
    }
};

}  // namespace

Plan initial_plan(const DualGraph& g, int n_districts) {
    if (n_districts < 1 || g.k % n_districts != 0)
        throw std::invalid_argument("initial_plan: n_districts must divide block count");
    int m = static_cast<int>(g.k) / n_districts;
    FirstFit ff(g, m);
    BlockMask all = (g.k == 64) ? ~BlockMask{0} : (BlockMask{1} << g.k) - 1;
    std::vector<BlockMask> acc;
    bool ok = ff.fill(all, acc);
    Plan p;
    if (ok) {
        std::vector<std::uint8_t> assignment(g.k);
        for (std::size_t d = 0; d < ff.found.size(); ++d)
            for (BlockMask mm = ff.found[d]; mm; mm &= mm - 1)
                assignment[std::countr_zero(mm)] = static_cast<std::uint8_t>(d);
        p = make_plan(g, std::move(assignment));
    }
    if (!ok || !is_legal(g, p)) throw std::runtime_error("initial_plan: initialization failure");
    return p;
}

ChainState make_chain(const DualGraph& g, int n_districts, std::uint64_t seed) {
    ChainState s;
    s.g = &g;
    s.plan = initial_plan(g, n_districts);
    s.rng.seed(seed);
    return s;
}

namespace {

// Adjacent district pairs of a plan, and the mutual boundary of one pair.
std::vector<std::pair<int, int>> adjacent_pairs(const DualGraph& g, const Plan& p) {
    std::vector<std::pair<int, int>> pairs;
    for (auto [a, b] : g.edges) {
        int da = p.assignment[a], db = p.assignment[b];
        if (da == db) continue;
        auto pr = std::minmax(da, db);
        pairs.emplace_back(pr.first, pr.second);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

std::vector<BlockId> boundary_blocks(const DualGraph& g, const Plan& p, int of, int toward) {
    std::vector<BlockId> out;
    for (BlockId b = 0; b < g.k; ++b) {
        if (p.assignment[b] != of) continue;
        for (BlockId nb : g.adj[b])
            if (p.assignment[nb] == toward) {
                out.push_back(b);
                break;
            }
    }
    return out;
}

}  // namespace

void chain_step(ChainState& s) {
    const DualGraph& g = *s.g;
    ++s.steps;
    auto pairs = adjacent_pairs(g, s.plan);
    if (pairs.empty()) return;
    auto pick = [&](std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(s.rng);
    };
    auto [di, dj] = pairs[pick(pairs.size())];
    auto bd_i = boundary_blocks(g, s.plan, di, dj);
    auto bd_j = boundary_blocks(g, s.plan, dj, di);
    BlockId a = bd_i[pick(bd_i.size())];
    BlockId b = bd_j[pick(bd_j.size())];

    std::vector<std::uint8_t> assignment = s.plan.assignment;
    std::swap(assignment[a], assignment[b]);
    Plan proposal = make_plan(g, assignment);
    // make_plan relabels; the swap keeps first-appearance order stable only
    // sometimes, so locate the two districts again via the swapped blocks.
    int pi = proposal.assignment[b];  // b took over district di
    int pj = proposal.assignment[a];
    if (!is_legal(g, proposal)) return;

    // Hastings ratio: the literal swap kernel is not symmetric (pair and
    // boundary counts differ between states), so correct it to keep the
    // stationary distribution uniform.
    auto rev_pairs = adjacent_pairs(g, proposal);
    auto pr = std::minmax(pi, pj);
    if (!std::binary_search(rev_pairs.begin(), rev_pairs.end(), std::pair<int, int>(pr.first, pr.second)))
        return;
    auto rev_bd_i = boundary_blocks(g, proposal, pi, pj);
    auto rev_bd_j = boundary_blocks(g, proposal, pj, pi);
    if (std::find(rev_bd_i.begin(), rev_bd_i.end(), b) == rev_bd_i.end()) return;
    if (std::find(rev_bd_j.begin(), rev_bd_j.end(), a) == rev_bd_j.end()) return;
    double q_fwd = 1.0 / (static_cast<double>(pairs.size()) * bd_i.size() * bd_j.size());
    double q_rev = 1.0 / (static_cast<double>(rev_pairs.size()) * rev_bd_i.size() * rev_bd_j.size());
    double accept = std::min(1.0, q_rev / q_fwd);
    if (std::uniform_real_distribution<double>(0.0, 1.0)(s.rng) < accept) {
        s.plan = std::move(proposal);
        ++s.accepts;
    }
}

Evaluator Evaluator::exact(const PlanSet& plans) {
    Evaluator e;
    e.backend_ = Backend::exact;
    e.table_ = build_mask_table(plans);
    return e;
}

Evaluator Evaluator::sampled(const PlanSet& plans, std::size_t sample_size, std::uint64_t seed,
                             SampleMode mode) {
    if (plans.plans.empty()) throw std::invalid_argument("Evaluator::sampled: empty plan set");
    if (sample_size == 0) throw std::invalid_argument("Evaluator::sampled: sample_size must be > 0");
    Evaluator e;
    e.backend_ = Backend::sampled;
    e.plans_ = &plans;
    e.sample_size_ = sample_size;
    e.mode_ = mode;
    e.rng_.seed(seed);
    return e;
}

Evaluator Evaluator::chain(const DualGraph& g, int n_districts, std::uint64_t steps,
                           std::uint64_t burn_in, std::uint64_t thinning, std::uint64_t seed) {
    if (thinning == 0) throw std::invalid_argument("Evaluator::chain: thinning must be > 0");
    Evaluator e;
    e.backend_ = Backend::chain;
    e.g_ = &g;
    e.n_districts_ = n_districts;
    e.steps_ = steps;
    e.burn_in_ = burn_in;
    e.thinning_ = thinning;
    e.rng_.seed(seed);
    initial_plan(g, n_districts);  // fail fast if no legal plan exists
    return e;
}

double Evaluator::eval(std::uint64_t bits) {
    ++evaluations_;
    switch (backend_) {
        case Backend::exact:
            return exact_e_rep(bits, table_);
        case Backend::sampled: {
            const auto& plans = plans_->plans;
            std::int64_t sum2 = 0;
            if (mode_ == SampleMode::full_pass) {
                for (const Plan& p : plans) sum2 += total_rep2(bits, p);
                return static_cast<double>(sum2) / static_cast<double>(2 * plans.size());
            }
            std::uniform_int_distribution<std::size_t> draw(0, plans.size() - 1);
            for (std::size_t i = 0; i < sample_size_; ++i) sum2 += total_rep2(bits, plans[draw(rng_)]);
            return static_cast<double>(sum2) / static_cast<double>(2 * sample_size_);
        }
        case Backend::chain: {
            ChainState s = make_chain(*g_, n_districts_, rng_());
            for (std::uint64_t i = 0; i < burn_in_; ++i) chain_step(s);
            std::int64_t sum2 = 0;
            std::uint64_t samples = 0;
            for (std::uint64_t i = 0; i < steps_; ++i) {
                chain_step(s);
                if ((i + 1) % thinning_ == 0) {
                    sum2 += total_rep2(bits, s.plan);
                    ++samples;
                }
            }
            if (samples == 0) throw std::invalid_argument("Evaluator::chain: no samples collected");
            return static_cast<double>(sum2) / static_cast<double>(2 * samples);
        }
    }
    throw std::logic_error("Evaluator: bad backend");
}

}  // namespace gerry
