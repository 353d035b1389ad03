#pragma once

#include <vector>

#include "berge/bigraph.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

enum class NodeSide { Edge, Vertex };

struct BigraphNode {
    NodeSide side;
    int index;

    bool operator==(const BigraphNode&) const = default;
};

struct CutNodeReport {
    bool connected = false;
    std::vector<BigraphNode> cut_nodes;  // articulation nodes of I(H), tagged by side
};

// Articulation nodes via depth-first lowpoints. Disconnected input is
// reported, not an error.
CutNodeReport cut_nodes(const LayeredBigraph& b);

// Definition: I(H) is 2-connected — connected, >= 4 nodes, no cut node.
bool is_2connected(const Hypergraph& h);
bool is_connected_hypergraph(const Hypergraph& h);

struct HyperBlock {
    Hypergraph sub;                  // relabeled to 0..|vertices|-1
    std::vector<int> vertices;       // original labels, ascending
    std::vector<int> edge_indices;   // indices into the parent edge list
};

struct BlockDecomposition {
    bool connected = false;
    std::vector<std::vector<int>> bigraph_blocks;  // node sets of I(H), unified ids
    std::vector<BigraphNode> cut_nodes;
    std::vector<HyperBlock> blocks;  // hypergraph blocks; edge set partitioned
};

BlockDecomposition blocks(const Hypergraph& h);

// A 2-block: 2-connected sub-hypergraph where exactly two member vertices
// (the outer pair) lie in edges not fully inside the member set. Special
// when additionally the block is happy, exactly one outside edge contains
// outer_y, and that edge avoids outer_x.
struct TwoBlock {
    std::vector<int> members;        // original labels, ascending
    std::vector<int> edge_indices;   // parent edge indices fully inside the block
    int outer_x = -1;
    int outer_y = -1;
    bool special = false;
    int outside_edge = -1;           // the unique outside edge at outer_y when special
};

std::vector<TwoBlock> two_blocks(const Hypergraph& h);
std::vector<TwoBlock> special_two_blocks(const Hypergraph& h);

// Articulation nodes of a plain adjacency-list graph (shared machinery).
std::vector<int> articulation_nodes(const std::vector<std::vector<int>>& adj);
bool adjacency_connected(const std::vector<std::vector<int>>& adj);

}  // namespace berge
