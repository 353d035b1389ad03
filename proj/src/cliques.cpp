#include "berge/cliques.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "berge/berge_search.hpp"
#include "berge/bounds.hpp"
#include "berge/matching.hpp"

namespace berge {

Count lym_bound(int h, int r) {
    if (h < 0 || r < 1) throw std::invalid_argument("lym_bound needs h >= 0, r >= 1");
    return binomial(h, std::min(r, h / 2));
}

std::vector<VertexSet> enumerate_cliques(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("clique size cap must be >= 1");
    int n = g.vertex_count();
    std::vector<VertexSet> out;
    std::function<void(VertexSet, VertexSet, int)> extend = [&](VertexSet clique, VertexSet cands,
                                                                int size) {
        for_each_bit(cands, [&](int v) {
            VertexSet c = with(clique, v);
            out.push_back(c);
            if (size + 1 < r)
                extend(c, cands & g.neighbors(v) & ~full_set(v + 1), size + 1);
        });
    };
    extend(0, full_set(n), 0);
    std::sort(out.begin(), out.end(), edge_lex_less);
    return out;
}

namespace {

// Maximum antichain of the containment poset via Dilworth: poset size minus
// maximum matching in the chain-cover bigraph; the antichain itself comes
// from the Koenig vertex cover.
SpernerCliqueResult max_antichain(const std::vector<VertexSet>& poset) {
    int m = static_cast<int>(poset.size());
    std::vector<std::vector<int>> adj(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && poset[static_cast<size_t>(i)] != poset[static_cast<size_t>(j)] &&
                subset_of(poset[static_cast<size_t>(i)], poset[static_cast<size_t>(j)]))
                adj[static_cast<size_t>(i)].push_back(j);

    std::vector<int> match_p, match_a;
    int msize = max_bipartite_matching(m, m, adj, &match_p, &match_a);

    // Koenig: alternating reachability from unmatched left nodes.
    std::vector<char> seen_l(static_cast<size_t>(m), 0), seen_r(static_cast<size_t>(m), 0);
    std::vector<int> stack;
    for (int i = 0; i < m; ++i)
        if (match_p[static_cast<size_t>(i)] == -1) {
            seen_l[static_cast<size_t>(i)] = 1;
            stack.push_back(i);
        }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[static_cast<size_t>(u)]) {
            if (seen_r[static_cast<size_t>(v)]) continue;
            seen_r[static_cast<size_t>(v)] = 1;
            int w = match_a[static_cast<size_t>(v)];
            if (w != -1 && !seen_l[static_cast<size_t>(w)]) {
                seen_l[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    // Cover = (left not seen) + (right seen); antichain = elements outside
    // the cover on both sides.
    SpernerCliqueResult res;
    for (int i = 0; i < m; ++i) {
        bool left_covered = !seen_l[static_cast<size_t>(i)];
        bool right_covered = seen_r[static_cast<size_t>(i)];
        if (!left_covered && !right_covered) res.family.push_back(poset[static_cast<size_t>(i)]);
    }
    res.size = static_cast<int>(res.family.size());
    if (res.size != m - msize)
        throw std::logic_error("Dilworth/Koenig mismatch in antichain extraction");
    return res;
}

}  // namespace

SpernerCliqueResult max_sperner_cliques(const Graph& g, int r, bool include_singletons) {
    std::vector<VertexSet> poset = enumerate_cliques(g, r);
    if (!include_singletons) {
        poset.erase(std::remove_if(poset.begin(), poset.end(),
                                   [](VertexSet s) { return set_size(s) == 1; }),
                    poset.end());
    }
    SpernerCliqueResult res = max_antichain(poset);
    // validate: members induce cliques, pairwise incomparable
    for (size_t i = 0; i < res.family.size(); ++i)
        for (size_t j = 0; j < res.family.size(); ++j)
            if (i != j && subset_of(res.family[i], res.family[j]))
                throw std::logic_error("antichain extraction produced comparable members");
    return res;
}

int max_antichain_bruteforce(const std::vector<VertexSet>& poset) {
    int m = static_cast<int>(poset.size());
    std::vector<std::vector<char>> comparable(static_cast<size_t>(m),
                                              std::vector<char>(static_cast<size_t>(m), 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && (subset_of(poset[static_cast<size_t>(i)], poset[static_cast<size_t>(j)]) ||
                           subset_of(poset[static_cast<size_t>(j)], poset[static_cast<size_t>(i)])))
                comparable[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
    int best = 0;
    std::vector<int> chosen;
    std::function<void(int)> go = [&](int idx) {
        best = std::max(best, static_cast<int>(chosen.size()));
        if (idx == m) return;
        if (static_cast<int>(chosen.size()) + (m - idx) <= best) return;
        bool ok = true;
        for (int c : chosen)
            if (comparable[static_cast<size_t>(c)][static_cast<size_t>(idx)]) {
                ok = false;
                break;
            }
        if (ok) {
            chosen.push_back(idx);
            go(idx + 1);
            chosen.pop_back();
        }
        go(idx + 1);
    };
    go(0);
    return best;
}

NspBoundReport nsp_bound_check(const Graph& g, int k, int r) {
    NspBoundReport rep;
    int n = g.vertex_count();
    if (!is_2connected_graph(g)) {
        rep.skip_reason = "not 2-connected";
        return rep;
    }
    if (n < k) {
        rep.skip_reason = "n < k";
        return rep;
    }
    if (graph_circumference(g) >= k) {
        rep.skip_reason = "has a cycle of length >= k";
        return rep;
    }
    rep.in_domain = true;
    rep.nsp = max_sperner_cliques(g, r).size;
    int t = (k - 1) / 2;
    rep.bound = std::max(bound_f(n, k, r, 2), bound_f(n, k, r, t));
    rep.holds = Count(rep.nsp) <= rep.bound;
    rep.slack = rep.bound - rep.nsp;

    if (k >= 4) {
        Count lhs = Count(rep.nsp) * (k - 3);
        Count rhs = Count(n - 2) * binomial(k - 1, std::min(r, (k - 1) / 2));
        rep.kpath_condition_violated = lhs > rhs;
        if (rep.kpath_condition_violated) {
            rep.kpath_connected_checked = true;
            rep.kpath_connected = is_k_path_connected(g, k);
        }
    }
    return rep;
}

}  // namespace berge
