#include "berge/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace berge {

namespace {

std::vector<int> range_vec(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i < hi; ++i) v.push_back(i);
    return v;
}

}  // namespace

Graph build_hnka(int n, int k, int a, Partition* partition) {
    if (!(k >= 4 && n >= k && a >= 1 && 2 * a < k))
        throw std::invalid_argument("build_hnka needs k >= 4, n >= k, 1 <= a < k/2");
    int b = n - k + a;
    // A = [0, a), B = [a, a+b), C = [a+b, n)
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) edges.emplace_back(u, v);
    std::vector<int> ac = range_vec(0, a);
    for (int v = a + b; v < n; ++v) ac.push_back(v);
    for (size_t i = 0; i < ac.size(); ++i)
        for (size_t j = i + 1; j < ac.size(); ++j) edges.emplace_back(ac[i], ac[j]);
    if (partition) {
        (*partition)["A"] = range_vec(0, a);
        (*partition)["B"] = range_vec(a, a + b);
        (*partition)["C"] = range_vec(a + b, n);
    }
    return Graph::from_edges(n, edges);
}

std::vector<std::vector<int>> hcal_raw_family(int n, int k, int r, int a) {
    // A = [0, k-2a), B = [k-2a, k-a), C = [k-a, n)
    int a_hi = k - 2 * a;
    int b_hi = k - a;
    int m1 = std::min(r, (k - a) / 2);
    int m2 = std::min(r - 1, a / 2);
    std::vector<std::vector<int>> fam;
    VertexSet ab = full_set(b_hi);
    for_each_subset_of_size(ab, m1, [&](VertexSet e) { fam.push_back(set_to_vector(e)); });
    VertexSet b_set = ab & ~full_set(a_hi);
    for (int c = b_hi; c < n; ++c)
        for_each_subset_of_size(b_set, m2, [&](VertexSet e) {
            std::vector<int> edge = set_to_vector(with(e, c));
            fam.push_back(std::move(edge));
        });
    return fam;
}

Hypergraph build_hcal(int n, int k, int r, int a, Partition* partition) {
    if (!(n >= k && k >= r && r >= 3 && a >= 1 && 2 * a <= k - 1))
        throw std::invalid_argument(
            "build_hcal needs n >= k >= r >= 3 and 1 <= a <= floor((k-1)/2)");
    auto fam = hcal_raw_family(n, k, r, a);
    std::vector<VertexSet> edges;
    edges.reserve(fam.size());
    for (const auto& e : fam) {
        if (e.size() < 2)
            throw std::invalid_argument(
                "build_hcal: degenerate parameters (edge of size < 2 in the literal family)");
        edges.push_back(vector_to_set(e));
    }
    Hypergraph h = Hypergraph::from_sets(n, r, std::move(edges));
    if (!is_sperner(h))
        throw std::invalid_argument(
            "build_hcal: degenerate parameters (literal family is not Sperner)");
    if (partition) {
        (*partition)["A"] = range_vec(0, k - 2 * a);
        (*partition)["B"] = range_vec(k - 2 * a, k - a);
        (*partition)["C"] = range_vec(k - a, n);
    }
    return h;
}

Hypergraph build_fnkrs(int k, int r, int s, Partition* partition) {
    if (!(k >= 4 * r && r >= 3 && s >= 1))
        throw std::invalid_argument("build_fnkrs needs k >= 4r >= 12 and s >= 1");
    int n = k - 2 + s * (r - 1);
    // C = [0, k-2) with c1 = 0, c2 = 1; A_i = [k-2 + i(r-1), k-2 + (i+1)(r-1))
    std::vector<VertexSet> edges;
    for_each_subset_of_size(full_set(k - 2), r, [&](VertexSet e) { edges.push_back(e); });
    for (int i = 0; i < s; ++i) {
        VertexSet block = 0;
        for (int v = k - 2 + i * (r - 1); v < k - 2 + (i + 1) * (r - 1); ++v)
            block = with(block, v);
        edges.push_back(with(block, 0));
        edges.push_back(with(block, 1));
    }
    if (partition) {
        (*partition)["C"] = range_vec(0, k - 2);
        (*partition)["c1"] = {0};
        (*partition)["c2"] = {1};
        for (int i = 0; i < s; ++i)
            (*partition)["A" + std::to_string(i + 1)] =
                range_vec(k - 2 + i * (r - 1), k - 2 + (i + 1) * (r - 1));
    }
    return Hypergraph::from_sets(n, r, std::move(edges));
}

}  // namespace berge
