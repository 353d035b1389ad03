#include "berge/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "berge/bigraph.hpp"
#include "berge/graph.hpp"
#include "json.hpp"

namespace berge {

ValidationReport validate(const RawHypergraph& raw) {
    ValidationReport rep;
    if (raw.n < 0 || raw.n > kMaxVertices)
        rep.fail("vertex count must be in [0, 64], got " + std::to_string(raw.n));
    if (raw.r < 0) rep.fail("upper rank must be nonnegative");

    std::set<std::vector<int>> seen;
    for (size_t i = 0; i < raw.edges.size(); ++i) {
        const auto& e = raw.edges[i];
        const std::string tag = "edge " + std::to_string(i);
        bool range_ok = true;
        for (int v : e)
            if (v < 0 || v >= raw.n) {
                rep.fail(tag + ": vertex " + std::to_string(v) + " out of range");
                range_ok = false;
            }
        if (!std::is_sorted(e.begin(), e.end()) ||
            std::adjacent_find(e.begin(), e.end()) != e.end())
            rep.fail(tag + ": vertices not strictly ascending (canonical form)");
        if (e.size() < 2) rep.fail(tag + ": size " + std::to_string(e.size()) + " < 2");
        if (static_cast<int>(e.size()) > raw.r)
            rep.fail(tag + ": size " + std::to_string(e.size()) + " exceeds rank " +
                     std::to_string(raw.r));
        if (range_ok) {
            std::vector<int> key = e;
            std::sort(key.begin(), key.end());
            key.erase(std::unique(key.begin(), key.end()), key.end());
            if (!seen.insert(key).second) rep.fail(tag + ": duplicate edge");
        }
        // plain int comparison: equals the bitset order on ascending edges
        // and stays defined on malformed ones
        if (i > 0 && !(raw.edges[i - 1] < e))
            rep.fail(tag + ": edge list not lexicographically sorted (canonical form)");
    }
    return rep;
}

Hypergraph Hypergraph::from_raw(const RawHypergraph& raw) {
    ValidationReport rep = validate(raw);
    if (!rep.valid) throw std::invalid_argument("invalid hypergraph: " + rep.issues.front());
    Hypergraph h;
    h.n_ = raw.n;
    h.r_ = raw.r;
    h.edges_.reserve(raw.edges.size());
    for (const auto& e : raw.edges) h.edges_.push_back(vector_to_set(e));
    return h;
}

Hypergraph Hypergraph::from_sets(int n, int r, std::vector<VertexSet> edges) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
    std::sort(edges.begin(), edges.end(), edge_lex_less);
    VertexSet all = full_set(n);
    for (size_t i = 0; i < edges.size(); ++i) {
        if (!subset_of(edges[i], all))
            throw std::invalid_argument("edge has vertex outside [0, n)");
        int sz = set_size(edges[i]);
        if (sz < 2) throw std::invalid_argument("edge of size < 2");
        if (sz > r) throw std::invalid_argument("edge exceeds upper rank");
        if (i > 0 && edges[i] == edges[i - 1]) throw std::invalid_argument("duplicate edge");
    }
    Hypergraph h;
    h.n_ = n;
    h.r_ = r;
    h.edges_ = std::move(edges);
    return h;
}

int Hypergraph::sum_edge_sizes() const {
    int s = 0;
    for (VertexSet e : edges_) s += set_size(e);
    return s;
}

int Hypergraph::vertex_degree(int v) const {
    int d = 0;
    for (VertexSet e : edges_)
        if (contains(e, v)) ++d;
    return d;
}

int Hypergraph::find_edge(VertexSet e) const {
    for (size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i] == e) return static_cast<int>(i);
    return -1;
}

RawHypergraph Hypergraph::to_raw() const {
    RawHypergraph raw;
    raw.n = n_;
    raw.r = r_;
    raw.edges.reserve(edges_.size());
    for (VertexSet e : edges_) raw.edges.push_back(set_to_vector(e));
    return raw;
}

bool is_sperner(const Hypergraph& h) {
    int m = h.edge_count();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && subset_of(h.edge(i), h.edge(j))) return false;
    return true;
}

std::vector<VertexSet> shadow(const Hypergraph& h, int p) {
    if (p < 1) throw std::invalid_argument("shadow order must be >= 1");
    std::vector<VertexSet> out;
    for (VertexSet e : h.edges())
        for_each_subset_of_size(e, p, [&](VertexSet s) { out.push_back(s); });
    std::sort(out.begin(), out.end(), edge_lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Graph shadow_graph(const Hypergraph& h) {
    Graph g(h.vertex_count());
    std::vector<std::pair<int, int>> edges;
    for (VertexSet pair : shadow(h, 2)) {
        int u = lowest(pair);
        int v = lowest(without(pair, u));
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(h.vertex_count(), edges);
}

int codegree(const Hypergraph& h, int u, int v) {
    if (u == v) throw std::invalid_argument("codegree needs distinct vertices");
    VertexSet pair = with(single(u), v);
    int c = 0;
    for (VertexSet e : h.edges())
        if (subset_of(pair, e)) ++c;
    return c;
}

bool is_happy_edge(const Hypergraph& h, int e) {
    VertexSet s = h.edge(e);
    int sz = set_size(s);
    if (sz <= 2) return true;
    std::vector<int> vs = set_to_vector(s);
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (codegree(h, vs[i], vs[j]) < sz - 1) return false;
    return true;
}

std::vector<int> unhappy_edges(const Hypergraph& h) {
    std::vector<int> out;
    for (int e = 0; e < h.edge_count(); ++e)
        if (!is_happy_edge(h, e)) out.push_back(e);
    return out;
}

bool is_happy(const Hypergraph& h) { return unhappy_edges(h).empty(); }

LayeredBigraph incidence_bigraph(const Hypergraph& h) {
    LayeredBigraph b;
    b.a_adj.reserve(static_cast<size_t>(h.edge_count()));
    b.y_adj.assign(static_cast<size_t>(h.vertex_count()), {});
    for (int a = 0; a < h.edge_count(); ++a) {
        b.a_adj.push_back(h.edge_vertices(a));
        for (int y : b.a_adj.back()) b.y_adj[static_cast<size_t>(y)].push_back(a);
    }
    return b;
}

Hypergraph hypergraph_from_bigraph(const LayeredBigraph& b, int r) {
    std::vector<VertexSet> edges;
    edges.reserve(static_cast<size_t>(b.a_count()));
    for (const auto& nbrs : b.a_adj) edges.push_back(vector_to_set(nbrs));
    return Hypergraph::from_sets(b.y_count(), r, std::move(edges));
}

std::string to_json(const Hypergraph& h) {
    nlohmann::json j;
    j["n"] = h.vertex_count();
    j["r"] = h.upper_rank();
    j["edges"] = nlohmann::json::array();
    for (int i = 0; i < h.edge_count(); ++i) j["edges"].push_back(h.edge_vertices(i));
    return j.dump() + "\n";
}

RawHypergraph raw_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    RawHypergraph raw;
    raw.n = j.at("n").get<int>();
    raw.r = j.at("r").get<int>();
    raw.edges = j.at("edges").get<std::vector<std::vector<int>>>();
    return raw;
}

Hypergraph hypergraph_from_json(const std::string& text) {
    return Hypergraph::from_raw(raw_from_json(text));
}

}  // namespace berge
