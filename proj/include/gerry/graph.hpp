#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace gerry {

using BlockId = std::uint32_t;

// Planar adjacency structure over equal-population blocks. Immutable after
// construction; all queries are safe to share across threads.
struct DualGraph {
    std::uint32_t k = 0;                            // block count
    std::vector<std::pair<BlockId, BlockId>> edges; // unordered pairs, stored a < b, sorted
    std::vector<std::vector<BlockId>> adj;          // adjacency lists, each sorted
    std::vector<bool> border;                       // on the outer face
    int rows = 0, cols = 0;                         // both 0 unless built by grid_graph

    const std::vector<BlockId>& neighbors(BlockId b) const;
    bool is_grid() const { return rows > 0; }
};

// Rook adjacency: corner-touching blocks share no edge. Border blocks are
// those in the first/last row or column. Block index = row * cols + col.
DualGraph grid_graph(int rows, int cols);

// Builds a general graph from an explicit edge list + border list; validates
// connectivity and rejects self-loops/duplicates.
DualGraph make_graph(std::uint32_t k,
                     std::vector<std::pair<BlockId, BlockId>> edges,
                     const std::vector<BlockId>& border_blocks);

// Text format: first line `k`, then one `a b` pair per line (0-based),
// then one line of space-separated border indices.
DualGraph read_edge_list(std::istream& in);
void write_edge_list(const DualGraph& g, std::ostream& out);

}  // namespace gerry
