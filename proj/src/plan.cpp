#include "gerry/plan.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "gerry/graph.hpp"

namespace gerry {

std::string Plan::key() const {
    std::string s;
    s.reserve(assignment.size());
    for (std::uint8_t d : assignment) s.push_back(static_cast<char>('0' + d));
    return s;
}

Plan make_plan(const DualGraph& g, std::vector<std::uint8_t> assignment) {
    if (assignment.size() != g.k) throw std::invalid_argument("make_plan: assignment length mismatch");
    // normalize labels to first-appearance order
    std::vector<int> relabel(assignment.size(), -1);
    int next = 0;
    for (auto& d : assignment) {
        if (relabel[d] < 0) relabel[d] = next++;
        d = static_cast<std::uint8_t>(relabel[d]);
    }
    Plan p;
    p.n_districts = next;
    p.masks.assign(next, 0);
    for (std::size_t i = 0; i < assignment.size(); ++i)
        p.masks[assignment[i]] |= BlockMask{1} << i;
    if (g.k % next != 0) throw std::invalid_argument("make_plan: unequal district sizes");
    p.district_size = static_cast<int>(g.k) / next;
    for (BlockMask m : p.masks)
        if (std::popcount(m) != p.district_size)
            throw std::invalid_argument("make_plan: unequal district sizes");
    p.assignment = std::move(assignment);
    return p;
}

bool is_contiguous(const DualGraph& g, BlockMask blocks) {
    if (blocks == 0) throw std::invalid_argument("is_contiguous: empty block set");
    if (g.k < 64 && (blocks >> g.k) != 0)
        throw std::invalid_argument("is_contiguous: block out of range");
    BlockId start = static_cast<BlockId>(std::countr_zero(blocks));
    BlockMask seen = BlockMask{1} << start;
    BlockMask frontier = seen;
    while (frontier) {
        BlockMask next = 0;
        BlockMask f = frontier;
        while (f) {
            BlockId b = static_cast<BlockId>(std::countr_zero(f));
            f &= f - 1;
            for (BlockId nb : g.adj[b]) next |= BlockMask{1} << nb;
        }
        frontier = next & blocks & ~seen;
        seen |= frontier;
    }
    return seen == blocks;
}

bool is_contiguous(const DualGraph& g, const std::vector<BlockId>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("is_contiguous: empty block set");
    BlockMask m = 0;
    for (BlockId b : blocks) {
        if (b >= g.k) throw std::invalid_argument("is_contiguous: block out of range");
        m |= BlockMask{1} << b;
    }
    return is_contiguous(g, m);
}

bool is_legal(const DualGraph& g, const Plan& plan) {
    if (plan.assignment.size() != g.k) return false;
    if (plan.n_districts <= 0) return false;
    if (static_cast<int>(g.k) != plan.n_districts * plan.district_size) return false;
    for (BlockMask m : plan.masks) {
        if (std::popcount(m) != plan.district_size) return false;
        if (!is_contiguous(g, m)) return false;
    }
    // Removing any district must leave every remaining component able to
    // reach a border block.
    BlockMask all = (g.k == 64) ? ~BlockMask{0} : (BlockMask{1} << g.k) - 1;
    BlockMask border = 0;
    for (BlockId b = 0; b < g.k; ++b)
        if (g.border[b]) border |= BlockMask{1} << b;
    for (BlockMask d : plan.masks) {
        BlockMask rest = all & ~d;
        while (rest) {
            BlockId start = static_cast<BlockId>(std::countr_zero(rest));
            // flood the component of `start` within rest
            BlockMask comp = BlockMask{1} << start;
            BlockMask frontier = comp;
            while (frontier) {
                BlockMask next = 0;
                BlockMask f = frontier;
                while (f) {
                    BlockId b = static_cast<BlockId>(std::countr_zero(f));
                    f &= f - 1;
                    for (BlockId nb : g.adj[b]) next |= BlockMask{1} << nb;
                }
                frontier = next & rest & ~comp;
                comp |= frontier;
            }
            if ((comp & border) == 0) return false;
            rest &= ~comp;
        }
    }
    return true;
}

void write_plans(const PlanSet& ps, std::ostream& out) {
    out << "gerrygrid-plans v1 n=" << ps.n << '\n';
    for (const Plan& p : ps.plans) out << p.key() << '\n';
}

PlanSet read_plans(std::istream& in) {
    std::string line;
    while (std::getline(in, line) && (line.empty() || line[0] == '#')) {}
    const std::string prefix = "gerrygrid-plans v1 n=";
    if (line.rfind(prefix, 0) != 0) throw std::runtime_error("read_plans: bad header");
    PlanSet ps;
    ps.n = std::stoi(line.substr(prefix.size()));
    DualGraph g = grid_graph(ps.n, ps.n);
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.size() != g.k) throw std::runtime_error("read_plans: bad plan line length");
        std::vector<std::uint8_t> a(g.k);
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] < '0' || line[i] > '9') throw std::runtime_error("read_plans: bad digit");
            a[i] = static_cast<std::uint8_t>(line[i] - '0');
        }
        ps.plans.push_back(make_plan(g, std::move(a)));
    }
    return ps;
}

}  // namespace gerry
