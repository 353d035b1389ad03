#pragma once

#include <string>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

struct DisintegrationTrace {
    int alpha = 0;
    std::vector<std::pair<int, int>> removal_order;  // (vertex, degree at removal)
    VertexSet core = 0;                              // empty or min degree >= alpha+1
};

// Iteratively removes vertices of degree <= alpha, lowest index first.
// The core is order-independent; the trace is the deterministic run.
DisintegrationTrace disintegrate(const Graph& g, int alpha);

// Core as a set only (any removal order).
VertexSet core_vertices(const Graph& g, int alpha);

enum class KopylovCase { Disintegrable, Core, OutOfScope, TheoremViolation };

struct KopylovReport {
    KopylovCase kind = KopylovCase::OutOfScope;
    std::string note;
    int k = 0;
    int t = 0;                 // floor((k-1)/2)
    int circumference = 0;
    int s = 0;                 // core size in the core case
    bool range_ok = false;     // t+2 <= s <= k-2
    bool cores_equal = false;  // H(G,t) == H(G,k-s)
};

// Classifies a 2-connected graph with c(G) < k into the structure dichotomy;
// a violated guarantee is reported as TheoremViolation (the test suite treats
// it as a failure, since it would contradict the theorem).
KopylovReport kopylov_case(const Graph& g, int k);

}  // namespace berge
