#pragma once

#include <map>
#include <string>
#include <vector>

#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

// Vertex partition labels emitted alongside a construction, for readability;
// the Hypergraph/Graph itself stays label-free.
using Partition = std::map<std::string, std::vector<int>>;

// Three-part graph: |A| = a, |B| = n-k+a, |C| = k-2a; all A-B edges plus a
// clique on A u C. Domain: k >= 4, n >= k, 1 <= a < k/2.
Graph build_hnka(int n, int k, int a, Partition* partition = nullptr);

// Sperner family: the min{r, floor((k-a)/2)}-subsets of A u B plus {c} u e'
// for c in C and e' a min{r-1, floor(a/2)}-subset of B, with |A| = k-2a,
// |B| = a, |C| = n-(k-a). Domain: n >= k >= r >= 3, 1 <= a <= floor((k-1)/2),
// plus the non-degeneracy the invariants force (edge sizes >= 2, Sperner);
// degenerate parameter points are rejected with a domain error.
Hypergraph build_hcal(int n, int k, int r, int a, Partition* partition = nullptr);

// The raw edge family of the construction with no invariant filtering,
// for documenting exactly where the literal family degenerates.
std::vector<std::vector<int>> hcal_raw_family(int n, int k, int r, int a);

// r-uniform: all r-subsets of C (|C| = k-2) plus A_i u {c_j} for i in [s],
// j in [2], |A_i| = r-1, on n = k-2+s(r-1) vertices. Domain: k >= 4r >= 12,
// s >= 1.
Hypergraph build_fnkrs(int k, int r, int s, Partition* partition = nullptr);

}  // namespace berge
