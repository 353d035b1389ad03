#include "berge/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "berge/berge_search.hpp"
#include "berge/connectivity.hpp"

namespace berge {

int default_enumeration_cap() {
    if (const char* env = std::getenv("BERGE_CAP")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 7;
}

namespace {

std::vector<VertexSet> candidate_pool(int n, int r) {
    std::vector<VertexSet> pool;
    for (int size = 2; size <= r; ++size)
        for_each_subset_of_size(full_set(n), size, [&](VertexSet e) { pool.push_back(e); });
    std::sort(pool.begin(), pool.end(), edge_lex_less);
    return pool;
}

struct Enumerator {
    const SearchSpace& space;
    std::vector<VertexSet> pool;
    std::vector<VertexSet> chosen;
    EnumerationStats stats;
    const std::function<void(const Hypergraph&)>* visit = nullptr;
    // extremal tracking (used instead of visit when set)
    bool track_extremal = false;
    int best = -1;
    std::optional<Hypergraph> argmax;

    explicit Enumerator(const SearchSpace& s) : space(s), pool(candidate_pool(s.n, s.r)) {}

    bool include_allowed(VertexSet e) {
        if (space.sperner) {
            for (VertexSet f : chosen)
                if (subset_of(e, f) || subset_of(f, e)) return false;
        }
        chosen.push_back(e);
        bool ok = true;
        if (ok && space.no_cycle_geq) {
            Hypergraph h = Hypergraph::from_sets(space.n, space.r, chosen);
            if (circumference(h, *space.no_cycle_geq).length >= *space.no_cycle_geq) ok = false;
        }
        if (ok && space.no_path_geq) {
            Hypergraph h = Hypergraph::from_sets(space.n, space.r, chosen);
            if (longest_berge_path(h, *space.no_path_geq).length >= *space.no_path_geq) ok = false;
        }
        chosen.pop_back();
        return ok;
    }

    void at_leaf() {
        ++stats.leaves;
        Hypergraph h = Hypergraph::from_sets(space.n, space.r, chosen);
        if (space.two_connected && !is_2connected(h)) return;
        if (space.connected && !is_connected_hypergraph(h)) return;
        ++stats.emitted;
        if (track_extremal) {
            if (h.edge_count() > best) {
                best = h.edge_count();
                argmax = h;
            }
        } else if (visit) {
            (*visit)(h);
        }
    }

    void dfs(size_t idx) {
        if (idx == pool.size()) {
            at_leaf();
            return;
        }
        if (include_allowed(pool[idx])) {
            chosen.push_back(pool[idx]);
            dfs(idx + 1);
            chosen.pop_back();
        } else {
            stats.pruned_subsets += 1ull << (pool.size() - idx - 1);
        }
        dfs(idx + 1);
    }
};

void check_cap(const SearchSpace& space) {
    if (space.n > space.cap)
        throw std::invalid_argument("enumeration refused: n exceeds the cap (" +
                                    std::to_string(space.cap) + ")");
    if (space.n > 6 && space.r > 3)
        throw std::invalid_argument("enumeration refused: pool too large for exhaustion");
}

}  // namespace

EnumerationStats enumerate_space(const SearchSpace& space,
                                 const std::function<void(const Hypergraph&)>& visit) {
    check_cap(space);
    Enumerator e(space);
    e.stats.total_subsets = 1ull << e.pool.size();
    if (space.isomorph_reject) {
        std::set<std::vector<VertexSet>> seen;
        std::function<void(const Hypergraph&)> dedup = [&](const Hypergraph& h) {
            if (seen.insert(canonical_hypergraph_key(h)).second) visit(h);
        };
        e.visit = &dedup;
        e.dfs(0);
        return e.stats;
    }
    e.visit = &visit;
    e.dfs(0);
    return e.stats;
}

std::vector<VertexSet> canonical_hypergraph_key(const Hypergraph& h) {
    int n = h.vertex_count();
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::vector<VertexSet> best;
    bool have = false;
    do {
        std::vector<VertexSet> key;
        key.reserve(static_cast<size_t>(h.edge_count()));
        for (VertexSet e : h.edges()) {
            VertexSet s = 0;
            for_each_bit(e, [&](int v) { s = with(s, perm[static_cast<size_t>(v)]); });
            key.push_back(s);
        }
        std::sort(key.begin(), key.end(), edge_lex_less);
        if (!have || std::lexicographical_compare(key.begin(), key.end(), best.begin(),
                                                  best.end(), edge_lex_less)) {
            best = std::move(key);
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

ExtremalResult extremal_number(const SearchSpace& space, int workers) {
    check_cap(space);
    std::vector<VertexSet> pool = candidate_pool(space.n, space.r);
    size_t m = pool.size();
    // Subtree s: edges 0..s-1 excluded, edge s included. The all-excluded
    // subset is handled once at the end.
    struct SubResult {
        int best = -1;
        std::optional<Hypergraph> argmax;
        EnumerationStats stats;
        bool skipped_whole = false;
        size_t root = 0;
    };
    std::vector<SubResult> results(m);
    std::atomic<size_t> next{0};

    auto run_subtree = [&](size_t s) {
        Enumerator e(space);
        e.track_extremal = true;
        if (!e.include_allowed(pool[s])) {
            results[s].skipped_whole = true;
            results[s].root = s;
            results[s].stats.pruned_subsets = 1ull << (m - s - 1);
            return;
        }
        e.chosen.push_back(pool[s]);
        e.dfs(s + 1);
        results[s].best = e.best;
        results[s].argmax = std::move(e.argmax);
        results[s].stats = e.stats;
        results[s].root = s;
    };

    int nworkers = std::max(1, workers);
    if (nworkers == 1) {
        for (size_t s = 0; s < m; ++s) run_subtree(s);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < nworkers; ++t)
            threads.emplace_back([&] {
                while (true) {
                    size_t s = next.fetch_add(1);
                    if (s >= m) break;
                    run_subtree(s);
                }
            });
        for (auto& th : threads) th.join();
    }

    ExtremalResult out;
    out.stats.total_subsets = m >= 64 ? 0 : (1ull << m);
    // The empty hypergraph is in every space that allows it.
    {
        Enumerator e(space);
        e.track_extremal = true;
        e.dfs(m == 0 ? 0 : m);  // evaluates only the empty subset
        out.stats.leaves += e.stats.leaves;
        out.stats.emitted += e.stats.emitted;
        if (e.best > out.max_edges) {
            out.max_edges = e.best;
            out.argmax = std::move(e.argmax);
        }
    }
    for (size_t s = 0; s < m; ++s) {
        out.stats.leaves += results[s].stats.leaves;
        out.stats.emitted += results[s].stats.emitted;
        out.stats.pruned_subsets += results[s].stats.pruned_subsets;
        if (results[s].best > out.max_edges) {
            out.max_edges = results[s].best;
            out.argmax = std::move(results[s].argmax);
        }
    }
    return out;
}

namespace {

// Iterated refinement by (color, multiset of neighbor colors).
std::vector<int> refine_colors(const Graph& g, std::vector<int> color) {
    int n = g.vertex_count();
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{color[static_cast<size_t>(v)]};
            std::vector<int> nb;
            for_each_bit(g.neighbors(v), [&](int u) { nb.push_back(color[static_cast<size_t>(u)]); });
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[static_cast<size_t>(v)] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& [s, v] : sig) rank.emplace(s, 0);
        int next_color = 0;
        for (auto& [s, c] : rank) c = next_color++;
        std::vector<int> fresh(static_cast<size_t>(n));
        for (const auto& [s, v] : sig) fresh[static_cast<size_t>(v)] = rank[s];
        if (fresh == color) return color;
        color = std::move(fresh);
    }
}

std::vector<VertexSet> key_from_order(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    std::vector<int> pos(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    std::vector<VertexSet> rows(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for_each_bit(g.neighbors(order[static_cast<size_t>(i)]), [&](int u) {
            rows[static_cast<size_t>(i)] = with(rows[static_cast<size_t>(i)],
                                                pos[static_cast<size_t>(u)]);
        });
    return rows;
}

void canonical_search(const Graph& g, const std::vector<int>& color,
                      std::vector<VertexSet>& best, bool& have_best) {
    int n = g.vertex_count();
    // first non-singleton color class
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[color[static_cast<size_t>(v)]].push_back(v);
    int branch_color = -1;
    for (const auto& [c, vs] : classes)
        if (vs.size() > 1) {
            branch_color = c;
            break;
        }
    if (branch_color == -1) {
        // discrete: order by color
        std::vector<int> order(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) order[static_cast<size_t>(color[static_cast<size_t>(v)])] = v;
        std::vector<VertexSet> key = key_from_order(g, order);
        if (!have_best || key < best) {
            best = std::move(key);
            have_best = true;
        }
        return;
    }
    for (int v : classes[branch_color]) {
        std::vector<int> ind = color;
        for (int u = 0; u < n; ++u)
            if (ind[static_cast<size_t>(u)] >= branch_color && u != v)
                ++ind[static_cast<size_t>(u)];  // make v the unique holder of branch_color
        canonical_search(g, refine_colors(g, std::move(ind)), best, have_best);
    }
}

}  // namespace

std::vector<VertexSet> canonical_graph_key(const Graph& g) {
    std::vector<int> color(static_cast<size_t>(g.vertex_count()), 0);
    color = refine_colors(g, std::move(color));
    std::vector<VertexSet> best;
    bool have_best = false;
    canonical_search(g, color, best, have_best);
    return best;
}

std::vector<Graph> all_graphs_isofree(int n) {
    if (n < 1) return {};
    std::vector<Graph> level{Graph(1)};
    for (int m = 2; m <= n; ++m) {
        std::map<std::vector<VertexSet>, Graph> fresh;
        for (const Graph& g : level) {
            for (VertexSet mask = 0; mask < (VertexSet{1} << (m - 1)); ++mask) {
                Graph bigger(m);
                std::vector<std::pair<int, int>> edges = g.edges();
                for_each_bit(mask, [&](int u) { edges.emplace_back(u, m - 1); });
                Graph candidate = Graph::from_edges(m, edges);
                std::vector<VertexSet> key = canonical_graph_key(candidate);
                fresh.emplace(std::move(key), std::move(candidate));
            }
        }
        level.clear();
        for (auto& [key, g] : fresh) level.push_back(std::move(g));
    }
    return level;
}

}  // namespace berge
