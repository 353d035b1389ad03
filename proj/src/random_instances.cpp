#include "berge/random_instances.hpp"

#include <algorithm>
#include <stdexcept>

#include "berge/berge_search.hpp"
#include "berge/connectivity.hpp"

namespace berge {

namespace {

VertexSet random_subset_of_size(Rng& rng, VertexSet from, int size) {
    std::vector<int> elems = set_to_vector(from);
    std::shuffle(elems.begin(), elems.end(), rng);
    VertexSet s = 0;
    for (int i = 0; i < size; ++i) s = with(s, elems[static_cast<size_t>(i)]);
    return s;
}

}  // namespace

Hypergraph random_happy_sperner(Rng& rng, int n, int r) {
    if (n < r + 1 || r < 3) throw std::invalid_argument("needs n >= r+1, r >= 3");
    for (int attempt = 0; attempt < 200; ++attempt) {
        int cliques = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<VertexSet> grounds;
        VertexSet covered = 0;
        for (int i = 0; i < cliques; ++i) {
            int hi = std::min(n, r + 3);
            int size = std::uniform_int_distribution<int>(r + 1, hi)(rng);
            grounds.push_back(random_subset_of_size(rng, full_set(n), size));
            covered |= grounds.back();
        }
        std::vector<VertexSet> edges;
        for (VertexSet s : grounds)
            for_each_subset_of_size(s, r, [&](VertexSet e) { edges.push_back(e); });
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        // stray pairs not inside any clique ground
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                VertexSet pair = with(single(u), v);
                bool inside = false;
                for (VertexSet s : grounds)
                    if (subset_of(pair, s)) inside = true;
                if (inside) continue;
                if (std::uniform_real_distribution<double>(0, 1)(rng) < 0.25)
                    edges.push_back(pair);
            }
        if (edges.empty()) continue;
        Hypergraph h = Hypergraph::from_sets(n, r, std::move(edges));
        if (!is_happy(h) || !is_sperner(h))
            throw std::logic_error("happy generator audit failed");
        return h;
    }
    throw std::runtime_error("happy generator gave up");
}

Hypergraph random_unhappy_2connected(Rng& rng, int n, int k, int max_attempts) {
    if (n < 4) throw std::invalid_argument("needs n >= 4");
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        int m = std::uniform_int_distribution<int>(n - 1, n + n / 2)(rng);
        std::vector<VertexSet> edges;
        auto comparable_with_existing = [&](VertexSet e) {
            for (VertexSet f : edges)
                if (subset_of(e, f) || subset_of(f, e)) return true;
            return false;
        };
        for (int i = 0; i < m; ++i) {
            int size = std::uniform_real_distribution<double>(0, 1)(rng) < 0.45 ? 3 : 2;
            VertexSet e = random_subset_of_size(rng, full_set(n), size);
            if (!comparable_with_existing(e)) edges.push_back(e);
        }
        if (edges.empty()) continue;
        // ear repair: keep joining distinct leaf-blocks / components
        for (int rounds = 0; rounds < 4 * n; ++rounds) {
            Hypergraph h = Hypergraph::from_sets(n, 3, edges);
            if (is_2connected(h)) break;
            int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
            int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
            if (u == v) continue;
            VertexSet pair = with(single(u), v);
            if (!comparable_with_existing(pair)) edges.push_back(pair);
        }
        Hypergraph h = Hypergraph::from_sets(n, 3, edges);
        if (!is_2connected(h) || !is_sperner(h)) continue;
        if (is_happy(h)) continue;
        if (circumference(h, k).length >= k) continue;
        return h;
    }
    throw std::runtime_error("unhappy generator gave up");
}

std::vector<std::vector<int>> random_degree_dominant_bipartite(Rng& rng, int p_count,
                                                               int a_count) {
    // Sample, then remove incidences at overloaded A-nodes (taking from their
    // highest-degree P-neighbor) until d(p) >= d(a) holds across every edge;
    // each removal shrinks the graph, so this terminates. Samples leaving an
    // isolated P-node are rejected whole.
    if (a_count < p_count)
        throw std::invalid_argument("degree domination with no isolated P-node needs |A| >= |P|");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::vector<int>> adj(static_cast<size_t>(p_count));
        for (int p = 0; p < p_count; ++p)
            for (int a = 0; a < a_count; ++a)
                if (std::uniform_real_distribution<double>(0, 1)(rng) < 0.5)
                    adj[static_cast<size_t>(p)].push_back(a);
        while (true) {
            std::vector<int> deg_a(static_cast<size_t>(a_count), 0);
            for (const auto& row : adj)
                for (int a : row) ++deg_a[static_cast<size_t>(a)];
            int bad_a = -1;
            for (int p = 0; p < p_count && bad_a == -1; ++p)
                for (int a : adj[static_cast<size_t>(p)])
                    if (static_cast<int>(adj[static_cast<size_t>(p)].size()) <
                        deg_a[static_cast<size_t>(a)]) {
                        bad_a = a;
                        break;
                    }
            if (bad_a == -1) break;
            int victim = -1;
            for (int q = 0; q < p_count; ++q) {
                auto& row = adj[static_cast<size_t>(q)];
                if (std::find(row.begin(), row.end(), bad_a) != row.end() &&
                    (victim == -1 || row.size() > adj[static_cast<size_t>(victim)].size()))
                    victim = q;
            }
            auto& row = adj[static_cast<size_t>(victim)];
            row.erase(std::find(row.begin(), row.end(), bad_a));
        }
        bool isolated = false;
        for (int p = 0; p < p_count; ++p)
            if (adj[static_cast<size_t>(p)].empty()) isolated = true;
        if (!isolated) return adj;
    }
    throw std::runtime_error("bipartite generator gave up");
}

}  // namespace berge
