#pragma once

#include <vector>

namespace berge {

// Incidence bigraph I(H) = (A, Y; E): part A indexes edges, part Y indexes
// vertices, a~y iff y lies in edge a. Both parts are ordered.
struct LayeredBigraph {
    std::vector<std::vector<int>> a_adj;  // per edge-node: incident vertex ids, ascending
    std::vector<std::vector<int>> y_adj;  // per vertex-node: incident edge ids, ascending

    int a_count() const { return static_cast<int>(a_adj.size()); }
    int y_count() const { return static_cast<int>(y_adj.size()); }
    int node_count() const { return a_count() + y_count(); }

    // Unified node ids: A-nodes first, then Y-nodes.
    int a_node(int edge_index) const { return edge_index; }
    int y_node(int vertex) const { return a_count() + vertex; }
    bool is_a_node(int node) const { return node < a_count(); }

    int incidence_count() const;
    bool symmetric() const;

    // Unified adjacency lists over node_count() nodes.
    std::vector<std::vector<int>> unified_adjacency() const;
};

}  // namespace berge
