#pragma once

#include <vector>

namespace berge {

// Matching in a bipartite graph with parts P (to be covered) and A.
// adj[p] lists the A-side candidates of p.
struct MatchingResult {
    bool covered = false;
    std::vector<int> match;     // per P-node: matched A-node, -1 when uncovered
    std::vector<int> violator;  // Hall violator S subseteq P with |S| > |N(S)| when not covered
};

MatchingResult matching_cover(int p_count, int a_count,
                              const std::vector<std::vector<int>>& adj);

int max_bipartite_matching(int p_count, int a_count, const std::vector<std::vector<int>>& adj,
                           std::vector<int>* match_p = nullptr,
                           std::vector<int>* match_a = nullptr);

// Incremental matcher with rollback, used by the Berge witness searches:
// slots are added one at a time; each addition either extends the matching
// by one augmenting path or fails, leaving the matcher unchanged.
class IncrementalMatcher {
  public:
    explicit IncrementalMatcher(int a_count);

    // Adds a slot with the given A-side candidates; returns false (and does
    // not add) when no augmenting path exists.
    bool push_slot(const std::vector<int>& candidates);
    void pop_slot();

    int slot_count() const { return static_cast<int>(slot_cands_.size()); }
    // Matched A-node per slot (every pushed slot is matched).
    std::vector<int> assignment() const;

  private:
    bool try_augment(int slot, std::vector<char>& visited);

    struct Change {
        bool a_side;
        int index;
        int prev;
    };

    std::vector<std::vector<int>> slot_cands_;
    std::vector<int> slot_match_;               // slot -> A-node
    std::vector<int> a_match_;                  // A-node -> slot or -1
    std::vector<std::vector<Change>> undo_log_;  // per successful push
};

}  // namespace berge
