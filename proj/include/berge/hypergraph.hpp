#pragma once

#include <span>
#include <string>
#include <vector>

#include "berge/bits.hpp"

namespace berge {

class Graph;
struct LayeredBigraph;

// A hypergraph as it sits in a file or mid-edit: no invariants enforced.
struct RawHypergraph {
    int n = 0;
    int r = 0;
    std::vector<std::vector<int>> edges;
};

struct ValidationReport {
    bool valid = true;
    std::vector<std::string> issues;

    void fail(std::string msg) {
        valid = false;
        issues.push_back(std::move(msg));
    }
};

// Checks every invariant: vertex range, per-edge ascending order, sizes in
// [2, r], pairwise-distinct edge sets, lexicographically sorted edge list.
ValidationReport validate(const RawHypergraph& raw);

// Canonical immutable hypergraph: vertices 0..n-1, edges as bitsets sorted
// lexicographically, every edge size in [2, r].
class Hypergraph {
  public:
    Hypergraph() = default;

    // Throws std::invalid_argument when the raw form fails validate().
    static Hypergraph from_raw(const RawHypergraph& raw);

    // Canonicalizes (sorts) the given edge sets; throws on duplicate edges,
    // sizes outside [2, r], or vertices outside [0, n).
    static Hypergraph from_sets(int n, int r, std::vector<VertexSet> edges);

    int vertex_count() const { return n_; }
    int upper_rank() const { return r_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::span<const VertexSet> edges() const { return edges_; }
    VertexSet edge(int i) const { return edges_[static_cast<size_t>(i)]; }
    int edge_size(int i) const { return set_size(edge(i)); }
    std::vector<int> edge_vertices(int i) const { return set_to_vector(edge(i)); }

    int sum_edge_sizes() const;
    int vertex_degree(int v) const;
    // Index of the given edge set, or -1.
    int find_edge(VertexSet e) const;

    RawHypergraph to_raw() const;

    bool operator==(const Hypergraph&) const = default;

  private:
    int n_ = 0;
    int r_ = 0;
    std::vector<VertexSet> edges_;
};

bool is_sperner(const Hypergraph& h);

// Exact set of p-subsets lying inside some edge, lexicographically sorted.
std::vector<VertexSet> shadow(const Hypergraph& h, int p);

// The 2-shadow as a Graph: each edge induces a clique on its vertices.
Graph shadow_graph(const Hypergraph& h);

// Number of edges containing both u and v. Pairs of codegree 1 are thin,
// of codegree >= 2 thick.
int codegree(const Hypergraph& h, int u, int v);

// An edge is happy iff every vertex pair inside it has codegree >= |e|-1.
// Edges of size <= 2 are always happy.
bool is_happy_edge(const Hypergraph& h, int e);
std::vector<int> unhappy_edges(const Hypergraph& h);
bool is_happy(const Hypergraph& h);

LayeredBigraph incidence_bigraph(const Hypergraph& h);
Hypergraph hypergraph_from_bigraph(const LayeredBigraph& b, int r);

// JSON wire format: {"edges":[[v0,v1,...],...],"n":<int>,"r":<int>},
// 0-based vertices, each edge ascending, edge list lexicographically sorted.
std::string to_json(const Hypergraph& h);
RawHypergraph raw_from_json(const std::string& text);
Hypergraph hypergraph_from_json(const std::string& text);

}  // namespace berge
