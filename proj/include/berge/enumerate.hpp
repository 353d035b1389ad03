#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

// Exhaustive labeled enumeration over all edge subsets of the n-vertex,
// rank-r candidate pool. Monotone filters (Sperner-ness, forbidden long
// cycles/paths) prune whole subtrees; the rest are checked per subset.
struct SearchSpace {
    int n = 0;
    int r = 2;
    bool sperner = false;
    bool two_connected = false;
    bool connected = false;
    std::optional<int> no_cycle_geq;  // forbid Berge cycles of length >= k
    std::optional<int> no_path_geq;   // forbid Berge paths of length >= k (edges)
    bool isomorph_reject = false;     // emit one representative per iso class
    int cap = 7;                      // hard vertex-count guard
};

struct EnumerationStats {
    long long leaves = 0;                 // monotone-feasible subsets visited
    long long emitted = 0;                // subsets passing all filters
    unsigned long long pruned_subsets = 0;  // subsets skipped by monotone pruning
    unsigned long long total_subsets = 0;   // 2^(candidate count)
};

// Visits every hypergraph in the space exactly once, lexicographic order.
EnumerationStats enumerate_space(const SearchSpace& space,
                                 const std::function<void(const Hypergraph&)>& visit);

struct ExtremalResult {
    int max_edges = -1;  // -1 when the space is empty
    std::optional<Hypergraph> argmax;
    EnumerationStats stats;
};

// Maximum edge count over the space; deterministic argmax (first in lex
// order). Work splits by first included edge across workers, results merge
// in index order.
ExtremalResult extremal_number(const SearchSpace& space, int workers = 1);

// The library-wide enumeration guard; the CLI maps BERGE_CAP onto it.
int default_enumeration_cap();

// All graphs on exactly n vertices up to isomorphism, by vertex augmentation
// with canonical-form rejection. Deterministic order.
std::vector<Graph> all_graphs_isofree(int n);

// Canonical form: lexicographically least adjacency encoding over the
// orderings that survive iterated degree refinement.
std::vector<VertexSet> canonical_graph_key(const Graph& g);

// Least edge-list encoding over all vertex relabelings; usable as an
// isomorphism key at desk scale.
std::vector<VertexSet> canonical_hypergraph_key(const Hypergraph& h);

}  // namespace berge
