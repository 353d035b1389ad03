#include "berge/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace berge {

bool adjacency_connected(const std::vector<std::vector<int>>& adj) {
    size_t n = adj.size();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    size_t count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[static_cast<size_t>(u)])
            if (!seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == n;
}

std::vector<int> articulation_nodes(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    std::vector<char> is_cut(static_cast<size_t>(n), 0);
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[static_cast<size_t>(u)] = low[static_cast<size_t>(u)] = timer++;
        int children = 0;
        bool skipped_parent = false;
        for (int v : adj[static_cast<size_t>(u)]) {
            if (v == parent && !skipped_parent) {
                skipped_parent = true;
                continue;
            }
            if (disc[static_cast<size_t>(v)] == -1) {
                ++children;
                dfs(v, u);
                low[static_cast<size_t>(u)] =
                    std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(v)]);
                if (parent != -1 && low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(u)])
                    is_cut[static_cast<size_t>(u)] = 1;
            } else {
                low[static_cast<size_t>(u)] =
                    std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(v)]);
            }
        }
        if (parent == -1 && children >= 2) is_cut[static_cast<size_t>(u)] = 1;
    };

    for (int u = 0; u < n; ++u)
        if (disc[static_cast<size_t>(u)] == -1) dfs(u, -1);

    std::vector<int> out;
    for (int u = 0; u < n; ++u)
        if (is_cut[static_cast<size_t>(u)]) out.push_back(u);
    return out;
}

namespace {

BigraphNode tag_node(const LayeredBigraph& b, int unified) {
    if (b.is_a_node(unified)) return {NodeSide::Edge, unified};
    return {NodeSide::Vertex, unified - b.a_count()};
}

}  // namespace

CutNodeReport cut_nodes(const LayeredBigraph& b) {
    CutNodeReport rep;
    auto adj = b.unified_adjacency();
    rep.connected = adjacency_connected(adj);
    if (!rep.connected) return rep;
    for (int u : articulation_nodes(adj)) rep.cut_nodes.push_back(tag_node(b, u));
    return rep;
}

bool is_connected_hypergraph(const Hypergraph& h) {
    return adjacency_connected(incidence_bigraph(h).unified_adjacency());
}

bool is_2connected(const Hypergraph& h) {
    LayeredBigraph b = incidence_bigraph(h);
    if (b.node_count() < 4) return false;
    CutNodeReport rep = cut_nodes(b);
    return rep.connected && rep.cut_nodes.empty();
}

namespace {

// Biconnected components of an adjacency-list graph as node sets (bridges
// included as 2-node components), in DFS discovery order.
std::vector<std::vector<int>> biconnected_components(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> comps;
    int timer = 0;

    auto pop_component = [&](std::pair<int, int> until) {
        std::vector<int> nodes;
        auto push = [&](int x) {
            if (std::find(nodes.begin(), nodes.end(), x) == nodes.end()) nodes.push_back(x);
        };
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            push(e.first);
            push(e.second);
            if (e == until) break;
        }
        std::sort(nodes.begin(), nodes.end());
        comps.push_back(std::move(nodes));
    };

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[static_cast<size_t>(u)] = low[static_cast<size_t>(u)] = timer++;
        bool skipped_parent = false;
        for (int v : adj[static_cast<size_t>(u)]) {
            if (v == parent && !skipped_parent) {
                skipped_parent = true;
                continue;
            }
            if (disc[static_cast<size_t>(v)] == -1) {
                edge_stack.emplace_back(u, v);
                dfs(v, u);
                low[static_cast<size_t>(u)] =
                    std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(v)]);
                if (low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(u)])
                    pop_component({u, v});
            } else if (disc[static_cast<size_t>(v)] < disc[static_cast<size_t>(u)]) {
                edge_stack.emplace_back(u, v);
                low[static_cast<size_t>(u)] =
                    std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(v)]);
            }
        }
    };

    for (int u = 0; u < n; ++u)
        if (disc[static_cast<size_t>(u)] == -1 && !adj[static_cast<size_t>(u)].empty()) dfs(u, -1);
    return comps;
}

}  // namespace

BlockDecomposition blocks(const Hypergraph& h) {
    BlockDecomposition dec;
    LayeredBigraph b = incidence_bigraph(h);
    auto adj = b.unified_adjacency();
    dec.connected = adjacency_connected(adj);
    if (!dec.connected) return dec;

    dec.bigraph_blocks = biconnected_components(adj);
    for (int u : articulation_nodes(adj)) dec.cut_nodes.push_back(tag_node(b, u));

    // Assign each edge to exactly one component: cut A-nodes go to the
    // component holding most of their incidences (ties: first found).
    int m = h.edge_count();
    std::vector<int> home(static_cast<size_t>(m), -1);
    std::vector<int> score(static_cast<size_t>(m), -1);
    for (size_t c = 0; c < dec.bigraph_blocks.size(); ++c) {
        for (int node : dec.bigraph_blocks[c]) {
            if (!b.is_a_node(node)) continue;
            int a = node;
            int inside = 0;
            for (int y : b.a_adj[static_cast<size_t>(a)]) {
                int yn = b.y_node(y);
                if (std::binary_search(dec.bigraph_blocks[c].begin(), dec.bigraph_blocks[c].end(),
                                       yn))
                    ++inside;
            }
            if (inside > score[static_cast<size_t>(a)]) {
                score[static_cast<size_t>(a)] = inside;
                home[static_cast<size_t>(a)] = static_cast<int>(c);
            }
        }
    }

    for (size_t c = 0; c < dec.bigraph_blocks.size(); ++c) {
        std::vector<int> edge_idx;
        for (int a = 0; a < m; ++a)
            if (home[static_cast<size_t>(a)] == static_cast<int>(c)) edge_idx.push_back(a);
        if (edge_idx.empty()) continue;
        VertexSet verts = 0;
        for (int a : edge_idx) verts |= h.edge(a);
        std::vector<int> vlist = set_to_vector(verts);
        std::vector<int> pos(static_cast<size_t>(h.vertex_count()), -1);
        for (size_t i = 0; i < vlist.size(); ++i)
            pos[static_cast<size_t>(vlist[i])] = static_cast<int>(i);
        std::vector<VertexSet> sub_edges;
        for (int a : edge_idx) {
            VertexSet e = 0;
            for_each_bit(h.edge(a), [&](int v) { e = with(e, pos[static_cast<size_t>(v)]); });
            sub_edges.push_back(e);
        }
        HyperBlock blk;
        blk.sub = Hypergraph::from_sets(static_cast<int>(vlist.size()), h.upper_rank(),
                                        std::move(sub_edges));
        blk.vertices = std::move(vlist);
        blk.edge_indices = std::move(edge_idx);
        dec.blocks.push_back(std::move(blk));
    }
    return dec;
}

namespace {

// Connected components of I(H) with two Y-nodes removed, as unified-node sets.
std::vector<std::vector<int>> components_minus_pair(const LayeredBigraph& b, int x, int y) {
    auto adj = b.unified_adjacency();
    int n = b.node_count();
    std::vector<char> blocked(static_cast<size_t>(n), 0);
    blocked[static_cast<size_t>(b.y_node(x))] = 1;
    blocked[static_cast<size_t>(b.y_node(y))] = 1;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)] || blocked[static_cast<size_t>(s)]) continue;
        std::vector<int> comp, stack{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : adj[static_cast<size_t>(u)])
                if (!seen[static_cast<size_t>(v)] && !blocked[static_cast<size_t>(v)]) {
                    seen[static_cast<size_t>(v)] = 1;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool sub_is_2connected(const Hypergraph& h, const std::vector<int>& edge_idx,
                       const std::vector<int>& members) {
    std::vector<int> pos(static_cast<size_t>(h.vertex_count()), -1);
    for (size_t i = 0; i < members.size(); ++i)
        pos[static_cast<size_t>(members[i])] = static_cast<int>(i);
    std::vector<VertexSet> sub_edges;
    for (int a : edge_idx) {
        VertexSet e = 0;
        for_each_bit(h.edge(a), [&](int v) { e = with(e, pos[static_cast<size_t>(v)]); });
        sub_edges.push_back(e);
    }
    Hypergraph sub =
        Hypergraph::from_sets(static_cast<int>(members.size()), h.upper_rank(), std::move(sub_edges));
    return is_2connected(sub);
}

}  // namespace

std::vector<TwoBlock> two_blocks(const Hypergraph& h) {
    if (!is_2connected(h)) throw std::invalid_argument("two_blocks needs a 2-connected input");
    LayeredBigraph b = incidence_bigraph(h);
    int n = h.vertex_count();
    // The special qualifier is defined only inside an unhappy ambient
    // hypergraph; a happy one has 2-blocks but no special ones.
    bool ambient_unhappy = !is_happy(h);
    std::vector<TwoBlock> out;

    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            auto comps = components_minus_pair(b, x, y);
            int c = static_cast<int>(comps.size());
            if (c < 2) continue;
            if (c > 16) throw std::runtime_error("two_blocks: component blowup beyond desk scale");
            // Every nonempty proper union of components is a candidate interior.
            for (unsigned mask = 1; mask + 1 < (1u << c); ++mask) {
                std::vector<int> edge_idx;
                VertexSet member_set = with(single(x), y);
                for (int i = 0; i < c; ++i) {
                    if (!(mask >> i & 1)) continue;
                    for (int node : comps[static_cast<size_t>(i)]) {
                        if (b.is_a_node(node))
                            edge_idx.push_back(node);
                        else
                            member_set = with(member_set, node - b.a_count());
                    }
                }
                if (edge_idx.empty()) continue;
                std::sort(edge_idx.begin(), edge_idx.end());
                // Exactly x and y may touch edges not fully inside.
                bool ok = true;
                bool x_out = false, y_out = false;
                for (int a = 0; a < h.edge_count() && ok; ++a) {
                    if (std::binary_search(edge_idx.begin(), edge_idx.end(), a)) continue;
                    VertexSet e = h.edge(a);
                    if (subset_of(e, member_set)) continue;
                    VertexSet touch = e & member_set;
                    if (touch & ~with(single(x), y)) ok = false;
                    if (contains(touch, x)) x_out = true;
                    if (contains(touch, y)) y_out = true;
                }
                if (!ok || !x_out || !y_out) continue;
                std::vector<int> members = set_to_vector(member_set);
                if (!sub_is_2connected(h, edge_idx, members)) continue;

                TwoBlock tb;
                tb.members = members;
                tb.edge_indices = edge_idx;
                tb.outer_x = x;
                tb.outer_y = y;
                // Special orientation: unique outside edge at one outer vertex,
                // avoiding the other. Try y as the carrier first, then x.
                auto classify = [&](int ox, int oy) -> int {
                    int found = -1;
                    for (int a = 0; a < h.edge_count(); ++a) {
                        if (std::binary_search(edge_idx.begin(), edge_idx.end(), a)) continue;
                        if (!contains(h.edge(a), oy)) continue;
                        if (found != -1) return -1;
                        found = a;
                    }
                    if (found == -1) return -1;
                    if (contains(h.edge(found), ox)) return -1;
                    return found;
                };
                bool happy_block = true;
                {
                    std::vector<int> pos(static_cast<size_t>(h.vertex_count()), -1);
                    for (size_t i = 0; i < members.size(); ++i)
                        pos[static_cast<size_t>(members[i])] = static_cast<int>(i);
                    std::vector<VertexSet> sub_edges;
                    for (int a : edge_idx) {
                        VertexSet e = 0;
                        for_each_bit(h.edge(a),
                                     [&](int v) { e = with(e, pos[static_cast<size_t>(v)]); });
                        sub_edges.push_back(e);
                    }
                    Hypergraph sub = Hypergraph::from_sets(static_cast<int>(members.size()),
                                                           h.upper_rank(), std::move(sub_edges));
                    happy_block = is_happy(sub);
                }
                if (happy_block && ambient_unhappy) {
                    if (int a = classify(x, y); a != -1) {
                        tb.special = true;
                        tb.outside_edge = a;
                    } else if (int a2 = classify(y, x); a2 != -1) {
                        tb.special = true;
                        tb.outside_edge = a2;
                        std::swap(tb.outer_x, tb.outer_y);
                    }
                }
                out.push_back(std::move(tb));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const TwoBlock& a, const TwoBlock& b2) {
        if (a.members != b2.members) return a.members < b2.members;
        if (a.outer_x != b2.outer_x) return a.outer_x < b2.outer_x;
        return a.outer_y < b2.outer_y;
    });
    return out;
}

std::vector<TwoBlock> special_two_blocks(const Hypergraph& h) {
    std::vector<TwoBlock> all = two_blocks(h);
    std::vector<TwoBlock> out;
    for (auto& tb : all)
        if (tb.special) out.push_back(std::move(tb));
    return out;
}

}  // namespace berge
