#pragma once

#include <optional>
#include <string>
#include <vector>

#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

// Alternating certificate: base vertices v1..vl (paths carry l+1) and
// distinct edges e1..el with {vi, vi+1} inside ei (cyclically for cycles).
struct BergeWitness {
    bool cycle = false;
    std::vector<int> base;
    std::vector<int> edge_indices;
};

bool validate_witness(const Hypergraph& h, const BergeWitness& w);

struct SearchOutcome {
    int length = 0;  // 0 when no cycle / no edge
    std::optional<BergeWitness> witness;
    bool reached_cutoff = false;
};

// Longest Berge cycle, exact. With a cutoff the search stops once a cycle of
// at least that length is found (outcome carries the witness found so far).
// Ties resolve to the lexicographically least base sequence.
SearchOutcome circumference(const Hypergraph& h, std::optional<int> cutoff = {});

// Longest Berge path, exact; length is the edge count.
SearchOutcome longest_berge_path(const Hypergraph& h, std::optional<int> cutoff = {});

// Maximum base-vertex count over Berge paths from x to y; 0 when none.
int longest_berge_xy_path(const Hypergraph& h, int x, int y);

// True iff a Berge cycle exists with base set exactly s.
bool has_berge_cycle_on(const Hypergraph& h, VertexSet s);

// Maximum vertex count over x,y-paths in a graph; 0 when disconnected.
int longest_xy_path(const Graph& g, int x, int y);
bool is_k_path_connected(const Graph& g, int k);

// Every linear forest with l edges on V(g) extends to a hamiltonian cycle of
// g plus the forest that contains the forest. l = 0 is plain hamiltonicity.
bool is_l_hamiltonian(const Graph& g, int l);

// Lifts per the happy-bigraph matching argument. Throws on precondition
// violations; returns nullopt only when the matching fails, which would
// contradict the lifting lemma.
std::optional<BergeWitness> try_lift_shadow_cycle(const Hypergraph& h,
                                                  const std::vector<int>& cycle);
std::optional<BergeWitness> try_lift_shadow_path(const Hypergraph& h,
                                                 const std::vector<int>& path);
BergeWitness lift_shadow_cycle(const Hypergraph& h, const std::vector<int>& cycle);
BergeWitness lift_shadow_path(const Hypergraph& h, const std::vector<int>& path);

std::string witness_to_json(const Hypergraph& h, const BergeWitness& w);

}  // namespace berge
