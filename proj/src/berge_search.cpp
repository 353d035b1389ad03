#include "berge/berge_search.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "berge/matching.hpp"
#include "json.hpp"

namespace berge {

bool validate_witness(const Hypergraph& h, const BergeWitness& w) {
    size_t l = w.edge_indices.size();
    if (w.cycle) {
        if (l < 2 || w.base.size() != l) return false;
    } else {
        if (l < 1 || w.base.size() != l + 1) return false;
    }
    VertexSet seen_v = 0;
    for (int v : w.base) {
        if (v < 0 || v >= h.vertex_count() || contains(seen_v, v)) return false;
        seen_v = with(seen_v, v);
    }
    std::vector<int> es = w.edge_indices;
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
    for (int e : es)
        if (e < 0 || e >= h.edge_count()) return false;
    for (size_t i = 0; i < l; ++i) {
        int u = w.base[i];
        int v = w.base[w.cycle ? (i + 1) % l : i + 1];
        VertexSet pair = with(single(u), v);
        if (!subset_of(pair, h.edge(w.edge_indices[i]))) return false;
    }
    return true;
}

namespace {

VertexSet graph_reach(const Graph& g, int start, VertexSet allowed) {
    VertexSet seen = single(start) & allowed;
    if (!seen) return 0;
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

// Depth-first search over base-vertex sequences. Edge feasibility is kept as
// an incremental matching from consecutive pairs into edges, so the search
// never branches over edge choices.
struct WitnessSearch {
    const Hypergraph& h;
    Graph sh;
    int n;
    std::vector<std::vector<int>> pair_edges;  // keyed min*n+max
    IncrementalMatcher matcher;
    std::vector<int> seq;
    int best = 0;
    std::vector<int> best_base, best_edges;
    int cutoff = std::numeric_limits<int>::max();
    int hard_max;  // no cycle/path can beat min(n, m)
    bool stop = false;

    explicit WitnessSearch(const Hypergraph& hg)
        : h(hg), sh(shadow_graph(hg)), n(hg.vertex_count()), matcher(hg.edge_count()) {
        pair_edges.assign(static_cast<size_t>(n) * static_cast<size_t>(n == 0 ? 1 : n), {});
        for (int e = 0; e < h.edge_count(); ++e) {
            std::vector<int> vs = h.edge_vertices(e);
            for (size_t i = 0; i < vs.size(); ++i)
                for (size_t j = i + 1; j < vs.size(); ++j)
                    pair_edges[static_cast<size_t>(vs[i]) * static_cast<size_t>(n) +
                               static_cast<size_t>(vs[j])]
                        .push_back(e);
        }
        hard_max = std::min(n, h.edge_count());
    }

    const std::vector<int>& cands(int u, int v) const {
        if (u > v) std::swap(u, v);
        return pair_edges[static_cast<size_t>(u) * static_cast<size_t>(n) +
                          static_cast<size_t>(v)];
    }

    void record() {
        best = static_cast<int>(seq.size());
        best_base = seq;
        best_edges = matcher.assignment();
        if (best >= cutoff || best >= hard_max) stop = true;
    }

    void dfs_cycle(int start, int u, VertexSet used, VertexSet scope) {
        if (stop) return;
        int len = static_cast<int>(seq.size());
        if (len >= 2 && len > best && sh.has_edge(u, start)) {
            if (matcher.push_slot(cands(u, start))) {
                record();
                matcher.pop_slot();
                if (stop) return;
            }
        }
        VertexSet avail = ~used & scope;
        VertexSet cand = sh.neighbors(u) & avail;
        for_each_bit(cand, [&](int w) {
            if (stop) return;
            if (len + set_size(graph_reach(sh, w, avail)) <= best) return;
            if (!matcher.push_slot(cands(u, w))) return;
            seq.push_back(w);
            dfs_cycle(start, w, with(used, w), scope);
            seq.pop_back();
            matcher.pop_slot();
        });
    }

    // Paths: target < 0 searches all endpoints; otherwise the sequence must
    // end at target, and best counts base vertices only when it does.
    void dfs_path(int u, VertexSet used, int target) {
        if (stop) return;
        int len = static_cast<int>(seq.size());
        if (target < 0 || u == target) {
            if (len > best && (target >= 0 || len >= 2)) {
                record();
                if (stop) return;
            }
        }
        VertexSet avail = ~used & full_set(n);
        VertexSet cand = sh.neighbors(u) & avail;
        for_each_bit(cand, [&](int w) {
            if (stop) return;
            VertexSet r = graph_reach(sh, w, avail);
            if (target >= 0 && target != w && !contains(r, target)) return;
            if (len + set_size(r) <= best) return;
            if (!matcher.push_slot(cands(u, w))) return;
            seq.push_back(w);
            dfs_path(w, with(used, w), target);
            seq.pop_back();
            matcher.pop_slot();
        });
    }
};

}  // namespace

SearchOutcome circumference(const Hypergraph& h, std::optional<int> cutoff) {
    WitnessSearch s(h);
    if (cutoff) s.cutoff = *cutoff;
    for (int v = 0; v < h.vertex_count() && !s.stop; ++v) {
        s.seq = {v};
        s.dfs_cycle(v, v, single(v), full_set(h.vertex_count()) & ~full_set(v));
    }
    SearchOutcome out;
    out.length = s.best;
    out.reached_cutoff = cutoff && s.best >= *cutoff;
    if (s.best >= 2) out.witness = BergeWitness{true, s.best_base, s.best_edges};
    return out;
}

SearchOutcome longest_berge_path(const Hypergraph& h, std::optional<int> cutoff) {
    WitnessSearch s(h);
    // Paths carry one more base vertex than edges.
    s.hard_max = std::min(h.vertex_count(), h.edge_count() + 1);
    // Path length is edge count: cut off at base-vertex count cutoff+1.
    if (cutoff) s.cutoff = *cutoff + 1;
    for (int v = 0; v < h.vertex_count() && !s.stop; ++v) {
        s.seq = {v};
        s.dfs_path(v, single(v), -1);
    }
    SearchOutcome out;
    out.length = s.best >= 2 ? s.best - 1 : 0;
    out.reached_cutoff = cutoff && out.length >= *cutoff;
    if (s.best >= 2) out.witness = BergeWitness{false, s.best_base, s.best_edges};
    return out;
}

int longest_berge_xy_path(const Hypergraph& h, int x, int y) {
    if (x == y) throw std::invalid_argument("endpoints must differ");
    WitnessSearch s(h);
    s.hard_max = std::min(h.vertex_count(), h.edge_count() + 1);
    s.seq = {x};
    s.dfs_path(x, single(x), y);
    return s.best;
}

bool has_berge_cycle_on(const Hypergraph& h, VertexSet target) {
    int want = set_size(target);
    if (want < 2) return false;
    WitnessSearch s(h);
    s.cutoff = want;
    int start = lowest(target);
    s.seq = {start};
    s.dfs_cycle(start, start, single(start), target);
    return s.best == want;
}

namespace {

struct XyPathSearch {
    const Graph& g;
    int target;
    int best = 0;

    void dfs(int u, VertexSet used, int len) {
        if (u == target) {
            best = std::max(best, len);
            if (best == g.vertex_count()) return;
        }
        VertexSet avail = ~used & full_set(g.vertex_count());
        VertexSet cand = g.neighbors(u) & avail;
        for_each_bit(cand, [&](int w) {
            VertexSet r = graph_reach(g, w, avail);
            if (w != target && !contains(r, target)) return;
            if (len + set_size(r) <= best) return;
            dfs(w, with(used, w), len + 1);
        });
    }
};

}  // namespace

int longest_xy_path(const Graph& g, int x, int y) {
    if (x == y) throw std::invalid_argument("endpoints must differ");
    XyPathSearch s{g, y};
    s.dfs(x, single(x), 1);
    return s.best;
}

bool is_k_path_connected(const Graph& g, int k) {
    int n = g.vertex_count();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (longest_xy_path(g, x, y) < k) return false;
    return true;
}

namespace {

// Hamilton cycle of work = g which must traverse every forced edge.
// forced[v] holds the forced neighbors of v (degree <= 2 by construction).
struct ForcedHamilton {
    const Graph& work;
    const std::vector<VertexSet>& forced;
    int n;
    bool found = false;

    int forced_left(int v, VertexSet used_forced_at_v) const {
        return set_size(forced[static_cast<size_t>(v)] & ~used_forced_at_v);
    }

    // track per-vertex which forced neighbors already lie on the path
    std::vector<VertexSet> used_forced;

    void dfs(int u, VertexSet used, int len) {
        if (found) return;
        if (len == n) {
            if (!work.has_edge(u, 0)) return;
            VertexSet rem_u = forced[static_cast<size_t>(u)] & ~used_forced[static_cast<size_t>(u)];
            VertexSet rem_0 = forced[0] & ~used_forced[0];
            bool closing_forced = contains(forced[static_cast<size_t>(u)], 0);
            if (closing_forced) {
                rem_u = without(rem_u, 0);
                rem_0 = without(rem_0, u);
            }
            if (rem_u == 0 && rem_0 == 0) found = true;
            return;
        }
        VertexSet rem = forced[static_cast<size_t>(u)] & ~used_forced[static_cast<size_t>(u)];
        VertexSet cand;
        if (u == 0 && len == 1) {
            // both endpoints of the start vertex are still open
            if (set_size(rem) == 2)
                cand = rem;
            else
                cand = work.neighbors(u);
        } else if (rem) {
            if (set_size(rem) >= 2) return;  // entered on a non-forced edge, dead
            cand = rem;
        } else {
            cand = work.neighbors(u);
        }
        cand &= ~used & full_set(n);
        for_each_bit(cand, [&](int w) {
            if (found) return;
            bool f = contains(forced[static_cast<size_t>(u)], w);
            if (f) {
                used_forced[static_cast<size_t>(u)] = with(used_forced[static_cast<size_t>(u)], w);
                used_forced[static_cast<size_t>(w)] = with(used_forced[static_cast<size_t>(w)], u);
            }
            dfs(w, with(used, w), len + 1);
            if (f) {
                used_forced[static_cast<size_t>(u)] =
                    without(used_forced[static_cast<size_t>(u)], w);
                used_forced[static_cast<size_t>(w)] =
                    without(used_forced[static_cast<size_t>(w)], u);
            }
        });
    }
};

bool hamilton_cycle_through(const Graph& g, const std::vector<std::pair<int, int>>& forced_edges) {
    int n = g.vertex_count();
    if (n < 3) return false;
    Graph work = g;
    for (auto [u, v] : forced_edges) work = work.with_edge(u, v);
    std::vector<VertexSet> forced(static_cast<size_t>(n), 0);
    for (auto [u, v] : forced_edges) {
        forced[static_cast<size_t>(u)] = with(forced[static_cast<size_t>(u)], v);
        forced[static_cast<size_t>(v)] = with(forced[static_cast<size_t>(v)], u);
    }
    ForcedHamilton fh{work, forced, n, false, {}};
    fh.used_forced.assign(static_cast<size_t>(n), 0);
    fh.dfs(0, single(0), 1);
    return fh.found;
}

// All linear forests with exactly l edges over vertex pairs of [n]:
// max degree 2, acyclic.
void for_each_linear_forest(int n, int l, std::vector<std::pair<int, int>>& cur,
                            std::vector<int>& deg, std::vector<int>& dsu, int next_pair,
                            const std::function<bool(const std::vector<std::pair<int, int>>&)>& f,
                            bool& stop) {
    if (stop) return;
    if (static_cast<int>(cur.size()) == l) {
        if (!f(cur)) stop = true;
        return;
    }
    int total = n * (n - 1) / 2;
    std::function<int(int)> find = [&](int x) {
        while (dsu[static_cast<size_t>(x)] != x) x = dsu[static_cast<size_t>(x)] =
                                                      dsu[static_cast<size_t>(dsu[static_cast<size_t>(x)])];
        return x;
    };
    for (int p = next_pair; p < total; ++p) {
        // decode pair index
        int u = 0, rest = p;
        while (rest >= n - 1 - u) {
            rest -= n - 1 - u;
            ++u;
        }
        int v = u + 1 + rest;
        if (deg[static_cast<size_t>(u)] >= 2 || deg[static_cast<size_t>(v)] >= 2) continue;
        int ru = find(u), rv = find(v);
        if (ru == rv) continue;  // would close a cycle
        std::vector<int> dsu_save = dsu;
        dsu[static_cast<size_t>(ru)] = rv;
        ++deg[static_cast<size_t>(u)];
        ++deg[static_cast<size_t>(v)];
        cur.emplace_back(u, v);
        for_each_linear_forest(n, l, cur, deg, dsu, p + 1, f, stop);
        cur.pop_back();
        --deg[static_cast<size_t>(u)];
        --deg[static_cast<size_t>(v)];
        dsu = dsu_save;
        if (stop) return;
    }
}

}  // namespace

bool is_l_hamiltonian(const Graph& g, int l) {
    int n = g.vertex_count();
    if (l < 0 || l >= n) throw std::invalid_argument("forest size must be in [0, n)");
    bool all_ok = true;
    std::vector<std::pair<int, int>> cur;
    std::vector<int> deg(static_cast<size_t>(n), 0), dsu(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) dsu[static_cast<size_t>(i)] = i;
    bool stop = false;
    std::function<bool(const std::vector<std::pair<int, int>>&)> check =
        [&](const std::vector<std::pair<int, int>>& forest) {
            if (!hamilton_cycle_through(g, forest)) {
                all_ok = false;
                return false;
            }
            return true;
        };
    for_each_linear_forest(n, l, cur, deg, dsu, 0, check, stop);
    return all_ok;
}

namespace {

std::optional<BergeWitness> lift_common(const Hypergraph& h, const std::vector<int>& base,
                                        bool cycle) {
    int n = h.vertex_count();
    VertexSet seen = 0;
    for (int v : base) {
        if (v < 0 || v >= n || contains(seen, v)) throw std::invalid_argument("base not distinct");
        seen = with(seen, v);
    }
    size_t slots = cycle ? base.size() : base.size() - 1;
    std::vector<std::vector<int>> adj(slots);
    int excluded = -1;
    if (cycle) {
        int r_eff = 0;
        for (int e = 0; e < h.edge_count(); ++e) r_eff = std::max(r_eff, h.edge_size(e));
        if (static_cast<int>(base.size()) < r_eff)
            throw std::invalid_argument("cycle shorter than the rank");
        if (static_cast<int>(base.size()) == r_eff) excluded = h.find_edge(seen);
    }
    for (size_t i = 0; i < slots; ++i) {
        int u = base[i];
        int v = base[cycle ? (i + 1) % base.size() : i + 1];
        VertexSet pair = with(single(u), v);
        for (int e = 0; e < h.edge_count(); ++e)
            if (e != excluded && subset_of(pair, h.edge(e))) adj[i].push_back(e);
        if (adj[i].empty() && (excluded == -1 || !subset_of(pair, h.edge(excluded))))
            throw std::invalid_argument("given sequence is not in the 2-shadow");
    }
    MatchingResult m = matching_cover(static_cast<int>(slots), h.edge_count(), adj);
    if (!m.covered) return std::nullopt;
    BergeWitness w;
    w.cycle = cycle;
    w.base = base;
    w.edge_indices = m.match;
    return w;
}

}  // namespace

std::optional<BergeWitness> try_lift_shadow_cycle(const Hypergraph& h,
                                                  const std::vector<int>& cycle) {
    if (!is_happy(h)) throw std::invalid_argument("lift needs a happy hypergraph");
    if (!is_sperner(h)) throw std::invalid_argument("lift needs a Sperner hypergraph");
    if (cycle.size() < 3) throw std::invalid_argument("shadow cycles have at least 3 vertices");
    return lift_common(h, cycle, true);
}

std::optional<BergeWitness> try_lift_shadow_path(const Hypergraph& h,
                                                 const std::vector<int>& path) {
    if (!is_happy(h)) throw std::invalid_argument("lift needs a happy hypergraph");
    if (path.size() < 2) throw std::invalid_argument("path too short");
    return lift_common(h, path, false);
}

BergeWitness lift_shadow_cycle(const Hypergraph& h, const std::vector<int>& cycle) {
    auto w = try_lift_shadow_cycle(h, cycle);
    if (!w) throw std::runtime_error("shadow cycle does not lift: lifting lemma violated");
    return *w;
}

BergeWitness lift_shadow_path(const Hypergraph& h, const std::vector<int>& path) {
    auto w = try_lift_shadow_path(h, path);
    if (!w) throw std::runtime_error("shadow path does not lift: lifting lemma violated");
    return *w;
}

std::string witness_to_json(const Hypergraph& h, const BergeWitness& w) {
    nlohmann::json j;
    j["kind"] = w.cycle ? "cycle" : "path";
    j["base"] = w.base;
    j["edge_indices"] = w.edge_indices;
    j["edges"] = nlohmann::json::array();
    for (int e : w.edge_indices) j["edges"].push_back(h.edge_vertices(e));
    return j.dump() + "\n";
}

}  // namespace berge
