#include "gerry/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gerry {

const std::vector<BlockId>& DualGraph::neighbors(BlockId b) const {
    if (b >= k) throw std::invalid_argument("neighbors: block id out of range");
    return adj[b];
}

namespace {

void build_adjacency(DualGraph& g) {
    g.adj.assign(g.k, {});
    for (auto [a, b] : g.edges) {
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
}

bool connected(const DualGraph& g) {
    if (g.k == 0) return false;
    std::vector<bool> seen(g.k, false);
    std::vector<BlockId> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        BlockId b = stack.back();
        stack.pop_back();
        for (BlockId nb : g.adj[b])
            if (!seen[nb]) {
                seen[nb] = true;
                ++count;
                stack.push_back(nb);
            }
    }
    return count == g.k;
}

}  // namespace

DualGraph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid_graph: dimensions must be >= 1");
    DualGraph g;
    g.rows = rows;
    g.cols = cols;
    g.k = static_cast<std::uint32_t>(rows) * static_cast<std::uint32_t>(cols);
    g.border.assign(g.k, false);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            BlockId id = static_cast<BlockId>(r * cols + c);
            if (r == 0 || r == rows - 1 || c == 0 || c == cols - 1) g.border[id] = true;
            if (c + 1 < cols) g.edges.emplace_back(id, id + 1);
            if (r + 1 < rows) g.edges.emplace_back(id, id + static_cast<BlockId>(cols));
        }
    std::sort(g.edges.begin(), g.edges.end());
    build_adjacency(g);
    return g;
}

DualGraph make_graph(std::uint32_t k,
                     std::vector<std::pair<BlockId, BlockId>> edges,
                     const std::vector<BlockId>& border_blocks) {
    if (k == 0) throw std::invalid_argument("make_graph: k must be >= 1");
    DualGraph g;
    g.k = k;
    for (auto& [a, b] : edges) {
        if (a == b) throw std::invalid_argument("make_graph: self-loop");
        if (a >= k || b >= k) throw std::invalid_argument("make_graph: edge endpoint out of range");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("make_graph: duplicate edge");
    g.edges = std::move(edges);
    g.border.assign(k, false);
    for (BlockId b : border_blocks) {
        if (b >= k) throw std::invalid_argument("make_graph: border id out of range");
        g.border[b] = true;
    }
    build_adjacency(g);
    if (!connected(g)) throw std::invalid_argument("make_graph: graph is not connected");
    return g;
}

DualGraph read_edge_list(std::istream& in) {
    std::string line;
    // leading '#' lines are metadata comments
    while (std::getline(in, line) && (line.empty() || line[0] == '#')) {}
    std::uint32_t k = 0;
    {
        std::istringstream ss(line);
        if (!(ss >> k)) throw std::runtime_error("read_edge_list: missing block count");
    }
    std::vector<std::pair<BlockId, BlockId>> edges;
    std::vector<BlockId> border_blocks;
    std::vector<std::string> lines;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') lines.push_back(line);
    if (lines.empty()) throw std::runtime_error("read_edge_list: missing border line");
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        std::istringstream ss(lines[i]);
        BlockId a, b;
        if (!(ss >> a >> b)) throw std::runtime_error("read_edge_list: malformed edge line");
        edges.emplace_back(a, b);
    }
    {
        std::istringstream ss(lines.back());
        BlockId b;
        while (ss >> b) border_blocks.push_back(b);
    }
    return make_graph(k, std::move(edges), border_blocks);
}

void write_edge_list(const DualGraph& g, std::ostream& out) {
    out << g.k << '\n';
    for (auto [a, b] : g.edges) out << a << ' ' << b << '\n';
    bool first = true;
    for (BlockId b = 0; b < g.k; ++b)
        if (g.border[b]) {
            if (!first) out << ' ';
            out << b;
            first = false;
        }
    out << '\n';
}

}  // namespace gerry
