#include "berge/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "berge/hypergraph.hpp"

namespace berge {

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
    adj_[static_cast<size_t>(u)] = with(adj_[static_cast<size_t>(u)], v);
    adj_[static_cast<size_t>(v)] = with(adj_[static_cast<size_t>(v)], u);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

int Graph::edge_count() const {
    int deg_sum = 0;
    for (VertexSet row : adj_) deg_sum += set_size(row);
    return deg_sum / 2;
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : kMaxVertices + 1;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return n_ == 0 ? 0 : d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for_each_bit(neighbors(u) & ~full_set(u + 1), [&](int v) { out.emplace_back(u, v); });
    std::sort(out.begin(), out.end());
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    Graph g = *this;
    if (!g.has_edge(u, v)) g.add_edge(u, v);
    return g;
}

Graph Graph::without_vertex(int v) const {
    Graph g = *this;
    VertexSet row = g.adj_[static_cast<size_t>(v)];
    for_each_bit(row, [&](int u) {
        g.adj_[static_cast<size_t>(u)] = without(g.adj_[static_cast<size_t>(u)], v);
    });
    g.adj_[static_cast<size_t>(v)] = 0;
    return g;
}

Graph Graph::induced(VertexSet s) const {
    std::vector<int> keep = set_to_vector(s);
    std::vector<int> pos(static_cast<size_t>(n_), -1);
    for (size_t i = 0; i < keep.size(); ++i) pos[static_cast<size_t>(keep[i])] = static_cast<int>(i);
    Graph g(static_cast<int>(keep.size()));
    for (int u : keep)
        for_each_bit(neighbors(u) & s, [&](int v) {
            if (u < v) g.add_edge(pos[static_cast<size_t>(u)], pos[static_cast<size_t>(v)]);
        });
    return g;
}

namespace {

VertexSet reach(const Graph& g, int start, VertexSet allowed) {
    VertexSet seen = single(start);
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

}  // namespace

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    return reach(g, 0, full_set(n)) == full_set(n);
}

bool is_2connected_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) return false;
    if (!is_connected(g)) return false;
    VertexSet all = full_set(n);
    for (int v = 0; v < n; ++v) {
        VertexSet rest = without(all, v);
        int start = lowest(rest);
        if (reach(g, start, rest) != rest) return false;
    }
    return true;
}

bool is_3connected_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n < 4) return false;
    if (!is_2connected_graph(g)) return false;
    VertexSet all = full_set(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            VertexSet rest = all & ~single(u) & ~single(v);
            int start = lowest(rest);
            if (reach(g, start, rest) != rest) return false;
        }
    return true;
}

Hypergraph graph_to_hypergraph(const Graph& g) {
    std::vector<VertexSet> edges;
    for (auto [u, v] : g.edges()) edges.push_back(with(single(u), v));
    return Hypergraph::from_sets(g.vertex_count(), 2, std::move(edges));
}

Graph graph_from_hypergraph(const Hypergraph& h) {
    std::vector<std::pair<int, int>> edges;
    for (VertexSet e : h.edges()) {
        if (set_size(e) != 2) throw std::invalid_argument("hypergraph is not 2-uniform");
        int u = lowest(e);
        edges.emplace_back(u, lowest(without(e, u)));
    }
    return Graph::from_edges(h.vertex_count(), edges);
}

namespace {

struct CycleSearch {
    const Graph& g;
    int best = 0;

    void dfs(int start, int u, VertexSet used, int len) {
        if (len >= 3 && g.has_edge(u, start)) best = std::max(best, len);
        if (best == g.vertex_count()) return;
        // Only vertices above the start: every cycle is found at its minimum.
        VertexSet avail = ~used & full_set(g.vertex_count()) & ~full_set(start + 1);
        VertexSet cand = g.neighbors(u) & avail;
        for_each_bit(cand, [&](int w) {
            if (len + set_size(reach(g, w, avail)) <= best) return;
            dfs(start, w, with(used, w), len + 1);
        });
    }
};

}  // namespace

int graph_circumference(const Graph& g) {
    CycleSearch s{g};
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 2) continue;
        if (s.best == g.vertex_count()) break;
        s.dfs(v, v, single(v), 1);
    }
    return s.best;
}

std::string graph_to_json(const Graph& g) { return to_json(graph_to_hypergraph(g)); }

Graph graph_from_json(const std::string& text) {
    return graph_from_hypergraph(hypergraph_from_json(text));
}

}  // namespace berge
