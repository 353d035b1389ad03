#include "berge/cores.hpp"

#include <stdexcept>

namespace berge {

DisintegrationTrace disintegrate(const Graph& g, int alpha) {
    if (alpha < 0) throw std::invalid_argument("alpha must be nonnegative");
    DisintegrationTrace tr;
    tr.alpha = alpha;
    int n = g.vertex_count();
    VertexSet alive = full_set(n);
    std::vector<int> deg(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
    while (true) {
        int pick = -1;
        for_each_bit(alive, [&](int v) {
            if (pick == -1 && deg[static_cast<size_t>(v)] <= alpha) pick = v;
        });
        if (pick == -1) break;
        tr.removal_order.emplace_back(pick, deg[static_cast<size_t>(pick)]);
        alive = without(alive, pick);
        for_each_bit(g.neighbors(pick) & alive,
                     [&](int u) { --deg[static_cast<size_t>(u)]; });
    }
    tr.core = alive;
    return tr;
}

VertexSet core_vertices(const Graph& g, int alpha) { return disintegrate(g, alpha).core; }

KopylovReport kopylov_case(const Graph& g, int k) {
    KopylovReport rep;
    rep.k = k;
    rep.t = (k - 1) / 2;
    int n = g.vertex_count();
    if (k < 5 || n < k) {
        rep.note = "needs n >= k >= 5";
        return rep;
    }
    if (!is_2connected_graph(g)) {
        rep.note = "not 2-connected";
        return rep;
    }
    rep.circumference = graph_circumference(g);
    if (rep.circumference >= k) {
        rep.note = "has a cycle of length >= k";
        return rep;
    }
    VertexSet t_core = core_vertices(g, rep.t);
    if (t_core == 0) {
        rep.kind = KopylovCase::Disintegrable;
        return rep;
    }
    rep.s = set_size(t_core);
    rep.range_ok = rep.t + 2 <= rep.s && rep.s <= k - 2;
    rep.cores_equal = rep.range_ok && core_vertices(g, k - rep.s) == t_core;
    if (rep.range_ok && rep.cores_equal) {
        rep.kind = KopylovCase::Core;
    } else {
        rep.kind = KopylovCase::TheoremViolation;
        rep.note = rep.range_ok ? "H(G,t) != H(G,k-s)" : "core size outside [t+2, k-2]";
    }
    return rep;
}

}  // namespace berge
