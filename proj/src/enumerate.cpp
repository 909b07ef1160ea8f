#include "gerry/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gerry {

namespace {

using Mask = std::uint64_t;

struct Enumerator {
    const DualGraph& g;
    int m;  // district size = grid side
    std::vector<Mask> adj_mask;
    std::vector<std::vector<std::uint8_t>> partition;  // districts of current branch
    std::vector<Plan>& out;

    Enumerator(const DualGraph& graph, int district_size, std::vector<Plan>& sink)
        : g(graph), m(district_size), out(sink) {
        adj_mask.resize(g.k);
        for (BlockId b = 0; b < g.k; ++b) {
            Mask mm = 0;
            for (BlockId nb : g.adj[b]) mm |= Mask{1} << nb;
            adj_mask[b] = mm;
        }
    }

    // Every component of `free` must be fillable with m-sized districts.
    bool components_ok(Mask free) const {
        while (free) {
            int start = std::countr_zero(free);
            Mask comp = Mask{1} << start;
            Mask frontier = comp;
            while (frontier) {
                Mask next = 0;
                Mask f = frontier;
                while (f) {
                    int b = std::countr_zero(f);
                    f &= f - 1;
                    next |= adj_mask[b];
                }
                frontier = next & free & ~comp;
                comp |= frontier;
            }
            if (std::popcount(comp) % m != 0) return false;
            free &= ~comp;
        }
        return true;
    }

    void emit(const std::vector<Mask>& districts) {
        std::vector<std::uint8_t> assignment(g.k);
        for (std::size_t d = 0; d < districts.size(); ++d) {
            Mask mm = districts[d];
            while (mm) {
                int b = std::countr_zero(mm);
                mm &= mm - 1;
                assignment[b] = static_cast<std::uint8_t>(d);
            }
        }
        Plan p;
        p.assignment = std::move(assignment);
        p.n_districts = static_cast<int>(districts.size());
        p.district_size = m;
        p.masks = districts;
        out.push_back(std::move(p));
    }

    // Enumerates each connected m-subset of `free` containing its lowest cell
    // exactly once (candidate-list growth with a forbidden set), then recurses
    // on the remaining cells.
    void fill(Mask free, std::vector<Mask>& districts) {
        if (free == 0) {
            emit(districts);
            return;
        }
        int anchor = std::countr_zero(free);
        Mask cur = Mask{1} << anchor;
        std::vector<int> ext;
        Mask queued = cur;
        for (Mask cand = adj_mask[anchor] & free; cand; cand &= cand - 1) {
            ext.push_back(std::countr_zero(cand));
            queued |= cand & -cand;
        }
        grow(cur, ext, 0, queued, free, districts);
    }

    void grow(Mask cur, std::vector<int>& ext, std::size_t pos, Mask queued, Mask free,
              std::vector<Mask>& districts) {
        if (std::popcount(cur) == m) {
            districts.push_back(cur);
            Mask rest = free & ~cur;
            if (components_ok(rest)) fill(rest, districts);
            districts.pop_back();
            return;
        }
        for (std::size_t i = pos; i < ext.size(); ++i) {
            int v = ext[i];
            Mask with = cur | Mask{1} << v;
            std::size_t old_size = ext.size();
            Mask new_queued = queued;
            for (Mask cand = adj_mask[v] & free & ~queued; cand; cand &= cand - 1) {
                ext.push_back(std::countr_zero(cand));
                new_queued |= cand & -cand;
            }
            grow(with, ext, i + 1, new_queued, free, districts);
            ext.resize(old_size);
        }
    }
};

}  // namespace

PlanSet enumerate_plans(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("enumerate_plans: n must be in [1, 6]");
    DualGraph g = grid_graph(n, n);
    PlanSet ps;
    ps.n = n;
    Enumerator e(g, n, ps.plans);
    Mask all = (g.k == 64) ? ~Mask{0} : (Mask{1} << g.k) - 1;
    std::vector<Mask> districts;
    e.fill(all, districts);
    std::sort(ps.plans.begin(), ps.plans.end(), [](const Plan& a, const Plan& b) {
        return a.assignment < b.assignment;
    });
    return ps;
}

DistStream::DistStream(int k, std::optional<int> num) : k_(k), num_(num) {
    if (k < 1 || k > 63) throw std::invalid_argument("DistStream: k out of range");
    if (num && (*num < 0 || *num > k)) throw std::invalid_argument("DistStream: num out of range");
    cur_ = num ? (std::uint64_t{1} << *num) - 1 : 0;
}

DistStream::DistStream(int k, std::optional<int> num, std::uint64_t last) : DistStream(k, num) {
    cur_ = last;
    started_ = true;
    if (num && std::popcount(last) != *num)
        throw std::invalid_argument("DistStream: resume point has wrong popcount");
}

std::optional<std::uint64_t> DistStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        return cur_;
    }
    const std::uint64_t limit = (std::uint64_t{1} << k_) - 1;
    if (!num_) {
        if (cur_ == limit) {
            done_ = true;
            return std::nullopt;
        }
        return ++cur_;
    }
    if (*num_ == 0 || cur_ >= (limit & ~((std::uint64_t{1} << (k_ - *num_)) - 1))) {
        done_ = true;  // highest value with this popcount already emitted
        return std::nullopt;
    }
    // Gosper's hack: next value with the same popcount
    std::uint64_t c = cur_ & -cur_;
    std::uint64_t r = cur_ + c;
    cur_ = (((cur_ ^ r) >> 2) / c) | r;
    return cur_;
}

std::uint64_t DistStream::count(int k, std::optional<int> num) {
    if (!num) return std::uint64_t{1} << k;
    std::uint64_t c = 1;
    for (int i = 0; i < *num; ++i) c = c * (k - i) / (i + 1);
    return c;
}

std::uint64_t canonicalize(std::uint64_t bits, int n) {
    static thread_local std::optional<D4Table> table;
    if (!table || table->n() != n) table.emplace(n);
    return table->canonical(bits);
}

}  // namespace gerry
