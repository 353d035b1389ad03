#pragma once

#include <optional>
#include <string>
#include <vector>

#include "berge/bounds.hpp"
#include "berge/graph.hpp"

namespace berge {

// LYM-type cap: a Sperner family of <=r-subsets of an h-set has at most
// C(h, min{r, floor(h/2)}) members.
Count lym_bound(int h, int r);

// All cliques of size 1..r (vertex sets), lexicographic order. The empty set
// is not a clique; singletons are included.
std::vector<VertexSet> enumerate_cliques(const Graph& g, int r);

struct SpernerCliqueResult {
    int size = 0;
    std::vector<VertexSet> family;  // a maximum antichain, canonical order
};

// Exact maximum Sperner family of cliques of size <= r, via the minimum
// chain cover / maximum matching duality on the containment poset.
SpernerCliqueResult max_sperner_cliques(const Graph& g, int r, bool include_singletons = true);

// Independent oracle: exhaustive branch-and-bound over antichains.
int max_antichain_bruteforce(const std::vector<VertexSet>& poset);

struct NspBoundReport {
    bool in_domain = false;        // 2-connected, n >= k, circumference < k
    std::string skip_reason;
    int nsp = 0;
    Count bound = 0;               // max{f(n,k,r,2), f(n,k,r,floor((k-1)/2))}
    bool holds = false;
    Count slack = 0;
    // Path-connectivity side: when nsp*(k-3) > (n-2)*C(k-1, min{r, t}),
    // the graph must be k-path connected.
    bool kpath_condition_violated = false;
    bool kpath_connected_checked = false;
    bool kpath_connected = false;
};

NspBoundReport nsp_bound_check(const Graph& g, int k, int r);

}  // namespace berge
