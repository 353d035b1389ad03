#include "berge/bigraph.hpp"

#include <algorithm>

namespace berge {

int LayeredBigraph::incidence_count() const {
    int c = 0;
    for (const auto& nbrs : a_adj) c += static_cast<int>(nbrs.size());
    return c;
}

bool LayeredBigraph::symmetric() const {
    for (int a = 0; a < a_count(); ++a)
        for (int y : a_adj[static_cast<size_t>(a)]) {
            if (y < 0 || y >= y_count()) return false;
            const auto& back = y_adj[static_cast<size_t>(y)];
            if (std::find(back.begin(), back.end(), a) == back.end()) return false;
        }
    int y_incidences = 0;
    for (const auto& nbrs : y_adj) y_incidences += static_cast<int>(nbrs.size());
    return y_incidences == incidence_count();
}

std::vector<std::vector<int>> LayeredBigraph::unified_adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<size_t>(node_count()));
    for (int a = 0; a < a_count(); ++a)
        for (int y : a_adj[static_cast<size_t>(a)]) {
            adj[static_cast<size_t>(a)].push_back(y_node(y));
            adj[static_cast<size_t>(y_node(y))].push_back(a);
        }
    return adj;
}

}  // namespace berge
