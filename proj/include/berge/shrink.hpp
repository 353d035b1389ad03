#pragma once

#include <optional>
#include <string>
#include <vector>

#include "berge/connectivity.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

// A vertex v of an edge e is an e-menace witness when e-v lies inside some
// other edge; removing v from e then breaks Sperner-ness.
std::optional<int> find_menace(const Hypergraph& h, int e, int v);

// Degree-2 vertex whose two incident edges are each unhappy or of size 2.
std::vector<int> special_vertices(const Hypergraph& h);
bool is_special_vertex(const Hypergraph& h, int v);

// Size-2 edge whose endpoints are special and whose two flanking edges are
// both unhappy. Returned as edge indices.
std::vector<int> special_edges(const Hypergraph& h);
bool is_special_edge(const Hypergraph& h, int e);

enum class ShrinkKind { T1, T2, T3, T4, T5 };

std::string kind_name(ShrinkKind k);

// Parameters in the labels of the hypergraph the step applies to.
struct ShrinkParams {
    ShrinkKind kind = ShrinkKind::T1;
    std::vector<int> edge;  // T1/T4: the edge; T3: the special pair; T5: block members
    int v1 = -1;            // T1: dropped vertex; T2: special vertex; T4: kept vertex; T5: x
    int v2 = -1;            // T5: y
};

// Literal rewrite in the relaxed builder: edges may be undersized or
// duplicated; validation is separate.
struct EditResult {
    std::vector<VertexSet> edges;  // pre-step labels
    VertexSet removed = 0;         // vertices deleted or glued away
};

EditResult apply_T1(const Hypergraph& h, int e, int v);
EditResult apply_T2(const Hypergraph& h, int v);
EditResult apply_T3(const Hypergraph& h, int special_edge_index);
EditResult apply_T4(const Hypergraph& h, int e, int keep);
EditResult apply_T5(const Hypergraph& h, const TwoBlock& block);

// Dispatch on recorded parameters (the replay path uses exactly this).
EditResult apply_params(const Hypergraph& h, const ShrinkParams& p);

// Compacts surviving vertices to 0..n'-1 in ascending label order.
struct CompactResult {
    Hypergraph h;
    std::vector<int> old_label;  // new label -> old label
};
std::optional<CompactResult> compact_edit(const Hypergraph& h, const EditResult& edit,
                                          std::string* why_not = nullptr);

struct StepValidation {
    bool sizes_ok = false;        // every edge size in [2, r]
    bool sperner_ok = false;      // distinct edge sets, antichain (S3)
    bool two_connected_ok = false;  // (S1)
    bool counts_ok = false;       // (S2): sums and strict potential decrease
    bool edge_drop_ok = false;    // (S4), or the weaker T5 cap, by kind
    bool circumference_ok = false;  // (S5): c(h') < k
    std::optional<Hypergraph> result;

    bool valid() const {
        return sizes_ok && sperner_ok && two_connected_ok && counts_ok && edge_drop_ok &&
               circumference_ok;
    }
    std::string summary() const;
};

StepValidation validate_step(const Hypergraph& h, const EditResult& edit, int k, bool is_t5);

struct Metrics {
    int vertices = 0;
    int edges = 0;
    int size_sum = 0;
};
Metrics metrics_of(const Hypergraph& h);

struct ShrinkStep {
    ShrinkParams params;
    Metrics before, after;
};

struct BlockTriple {
    int y = -1;
    int x = -1;
    std::vector<int> members;       // vertices of B_i (includes x), parent labels
    std::vector<int> edge_indices;  // edges of B_i in the parent
};

// The three-block alternative: when no transformation validates, every
// unhappy edge is separated from the rest by vertex pairs into blocks.
struct BlockReport {
    int unhappy_edge = -1;
    std::vector<BlockTriple> triples;
    bool complete = false;            // all three found with (B1)-(B5)
    int long_path_blocks = 0;         // blocks with an (x,y)-Berge-path of >= k base vertices
    std::vector<std::string> notes;
};

struct StepOutcome {
    enum class Status { Applied, AlreadyHappy, StuckWithBlocks, StuckNoBlocks };
    Status status = Status::AlreadyHappy;
    std::optional<ShrinkStep> step;
    std::optional<Hypergraph> next;
    std::optional<BlockReport> blocks;
};

// Rule: exhaust T1 candidates, then T2, T3, T4, T5, in canonical order,
// accepting the first that validates; otherwise extract a BlockReport.
StepOutcome shrink_step(const Hypergraph& h, int k);

// The three-block search on its own: scans separating pairs
// {unhappy edge, vertex} and assembles three blocks satisfying the decidable
// clauses. Usable as a diagnostic on any Sperner input; an incomplete report
// carries notes. Single-edge blocks count as degenerate 2-connected.
BlockReport block_report_search(const Hypergraph& h, int k);

struct TraceAudit {
    bool cumulative_ok = true;      // summed edge-drop cap over the whole trace
    bool ordering_ok = true;        // no T1 immediately after a T2/T3/T4
    bool thick_matching_ok = true;  // accepted kind > T1: thick pairs form a matching
    bool all_thin_ok = true;        // accepted kind > T2: all pairs in unhappy edges thin
    bool final_cap_ok = true;       // |E| cap when stopping at k-1 vertices without T5
    bool t5_block_cap_ok = true;    // per-T5 block density cap
    std::vector<std::string> notes;

    bool all_ok() const {
        return cumulative_ok && ordering_ok && thick_matching_ok && all_thin_ok &&
               final_cap_ok && t5_block_cap_ok;
    }
};

struct ShrinkTrace {
    Hypergraph initial;
    std::vector<ShrinkStep> steps;
    Hypergraph final;
    StepOutcome::Status terminal = StepOutcome::Status::AlreadyHappy;
    std::optional<BlockReport> blocks;
    TraceAudit audit;
};

// Iterates shrink_step until happy or stuck. Preconditions (Sperner,
// 2-connected, c < k) are hard errors.
ShrinkTrace reduce_to_happy(const Hypergraph& h, int k);

// Applies the recorded steps with no search; bit-exact on valid traces.
Hypergraph replay_trace(const Hypergraph& initial, const std::vector<ShrinkStep>& steps);

std::string trace_to_json(const ShrinkTrace& t);
ShrinkTrace trace_from_json(const std::string& text);

}  // namespace berge
