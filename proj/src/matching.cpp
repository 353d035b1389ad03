#include "berge/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace berge {

namespace {

bool kuhn_augment(int p, const std::vector<std::vector<int>>& adj, std::vector<int>& match_p,
                  std::vector<int>& match_a, std::vector<char>& visited) {
    for (int a : adj[static_cast<size_t>(p)]) {
        if (visited[static_cast<size_t>(a)]) continue;
        visited[static_cast<size_t>(a)] = 1;
        if (match_a[static_cast<size_t>(a)] == -1 ||
            kuhn_augment(match_a[static_cast<size_t>(a)], adj, match_p, match_a, visited)) {
            match_p[static_cast<size_t>(p)] = a;
            match_a[static_cast<size_t>(a)] = p;
            return true;
        }
    }
    return false;
}

}  // namespace

int max_bipartite_matching(int p_count, int a_count, const std::vector<std::vector<int>>& adj,
                           std::vector<int>* match_p_out, std::vector<int>* match_a_out) {
    std::vector<int> match_p(static_cast<size_t>(p_count), -1);
    std::vector<int> match_a(static_cast<size_t>(a_count), -1);
    int size = 0;
    for (int p = 0; p < p_count; ++p) {
        std::vector<char> visited(static_cast<size_t>(a_count), 0);
        if (kuhn_augment(p, adj, match_p, match_a, visited)) ++size;
    }
    if (match_p_out) *match_p_out = std::move(match_p);
    if (match_a_out) *match_a_out = std::move(match_a);
    return size;
}

MatchingResult matching_cover(int p_count, int a_count,
                              const std::vector<std::vector<int>>& adj) {
    MatchingResult res;
    std::vector<int> match_a;
    max_bipartite_matching(p_count, a_count, adj, &res.match, &match_a);
    int uncovered = -1;
    for (int p = 0; p < p_count; ++p)
        if (res.match[static_cast<size_t>(p)] == -1) uncovered = p;
    if (uncovered == -1) {
        res.covered = true;
        return res;
    }
    // Hall violator: P-nodes reachable from an uncovered one by alternating
    // paths; their neighborhood is fully matched into the set.
    std::vector<char> in_s(static_cast<size_t>(p_count), 0);
    std::vector<char> seen_a(static_cast<size_t>(a_count), 0);
    std::vector<int> stack{uncovered};
    in_s[static_cast<size_t>(uncovered)] = 1;
    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        for (int a : adj[static_cast<size_t>(p)]) {
            if (seen_a[static_cast<size_t>(a)]) continue;
            seen_a[static_cast<size_t>(a)] = 1;
            int q = match_a[static_cast<size_t>(a)];
            if (q != -1 && !in_s[static_cast<size_t>(q)]) {
                in_s[static_cast<size_t>(q)] = 1;
                stack.push_back(q);
            }
        }
    }
    for (int p = 0; p < p_count; ++p)
        if (in_s[static_cast<size_t>(p)]) res.violator.push_back(p);
    return res;
}

IncrementalMatcher::IncrementalMatcher(int a_count)
    : a_match_(static_cast<size_t>(a_count), -1) {}

bool IncrementalMatcher::try_augment(int slot, std::vector<char>& visited) {
    for (int a : slot_cands_[static_cast<size_t>(slot)]) {
        if (visited[static_cast<size_t>(a)]) continue;
        visited[static_cast<size_t>(a)] = 1;
        int holder = a_match_[static_cast<size_t>(a)];
        if (holder == -1 || try_augment(holder, visited)) {
            undo_log_.back().push_back({true, a, a_match_[static_cast<size_t>(a)]});
            undo_log_.back().push_back({false, slot, slot_match_[static_cast<size_t>(slot)]});
            a_match_[static_cast<size_t>(a)] = slot;
            slot_match_[static_cast<size_t>(slot)] = a;
            return true;
        }
    }
    return false;
}

bool IncrementalMatcher::push_slot(const std::vector<int>& candidates) {
    slot_cands_.push_back(candidates);
    slot_match_.push_back(-1);
    undo_log_.emplace_back();
    std::vector<char> visited(a_match_.size(), 0);
    if (try_augment(slot_count() - 1, visited)) return true;
    // A failed augmentation changes nothing.
    slot_cands_.pop_back();
    slot_match_.pop_back();
    undo_log_.pop_back();
    return false;
}

void IncrementalMatcher::pop_slot() {
    if (slot_cands_.empty()) throw std::logic_error("pop on empty matcher");
    auto& log = undo_log_.back();
    for (auto it = log.rbegin(); it != log.rend(); ++it) {
        if (it->a_side)
            a_match_[static_cast<size_t>(it->index)] = it->prev;
        else
            slot_match_[static_cast<size_t>(it->index)] = it->prev;
    }
    undo_log_.pop_back();
    slot_cands_.pop_back();
    slot_match_.pop_back();
}

std::vector<int> IncrementalMatcher::assignment() const { return slot_match_; }

}  // namespace berge
