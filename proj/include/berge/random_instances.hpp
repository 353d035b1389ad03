#pragma once

#include <optional>
#include <random>

#include "berge/hypergraph.hpp"

namespace berge {

using Rng = std::mt19937_64;

// Union of complete r-uniform families on random vertex subsets of size
// >= r+1 plus stray graph edges outside them: happy and Sperner by
// construction, rich shadow structure. Emitted instances are re-audited
// against both predicates.
Hypergraph random_happy_sperner(Rng& rng, int n, int r);

// Random Sperner mixed {2,3}-edge hypergraph repaired to 2-connectivity by
// ear additions, rejected until it is unhappy with no Berge cycle of length
// >= k. Throws after too many attempts.
Hypergraph random_unhappy_2connected(Rng& rng, int n, int k, int max_attempts = 2000);

// Random bipartite graph satisfying the degree condition d(p) >= d(b) for
// every p and neighbor b, as adjacency lists over parts of the given sizes.
std::vector<std::vector<int>> random_degree_dominant_bipartite(Rng& rng, int p_count, int a_count);

}  // namespace berge
