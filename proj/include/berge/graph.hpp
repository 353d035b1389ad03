#pragma once

#include <string>
#include <utility>
#include <vector>

#include "berge/bits.hpp"

namespace berge {

class Hypergraph;

// Simple undirected graph on 0..n-1 with bitset adjacency rows.
// No loops, no parallel edges.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const { return contains(adj_[static_cast<size_t>(u)], v); }
    VertexSet neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return set_size(neighbors(v)); }
    int min_degree() const;

    // Edges as ascending pairs, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    Graph with_edge(int u, int v) const;
    Graph without_vertex(int v) const;  // keeps labels, clears row/column
    // Subgraph induced on the set, relabeled to 0..|s|-1 in ascending order.
    Graph induced(VertexSet s) const;

    bool operator==(const Graph&) const = default;

  private:
    void add_edge(int u, int v);

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

bool is_connected(const Graph& g);
bool is_2connected_graph(const Graph& g);
bool is_3connected_graph(const Graph& g);

// View as a 2-uniform hypergraph (r = 2) and back.
Hypergraph graph_to_hypergraph(const Graph& g);
Graph graph_from_hypergraph(const Hypergraph& h);

// Length of a longest cycle, 0 if acyclic. Exact search, desk scale.
int graph_circumference(const Graph& g);

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

}  // namespace berge
