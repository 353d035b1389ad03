#include "berge/cliques.hpp"
#include "berge/constructions.hpp"
#include "berge/enumerate.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace berge;

TEST_CASE("lym_bound") {
    CHECK(lym_bound(4, 2) == 6);
    CHECK(lym_bound(5, 3) == 10);
    CHECK(lym_bound(10, 3) == 120);
    CHECK(lym_bound(0, 1) == 1);
}

TEST_CASE("enumerate_cliques counts") {
    CHECK(enumerate_cliques(Graph::complete(3), 2).size() == 6);
    CHECK(enumerate_cliques(Graph::complete(4), 3).size() == 14);
    CHECK(enumerate_cliques(Graph::cycle(5), 3).size() == 10);
    // members induce cliques and are canonically ordered
    auto cliques = enumerate_cliques(Graph::complete(4), 3);
    for (size_t i = 1; i < cliques.size(); ++i)
        CHECK(edge_lex_less(cliques[i - 1], cliques[i]));
}

TEST_CASE("max_sperner_cliques worked values") {
    CHECK(max_sperner_cliques(Graph::complete(4), 3).size == 6);
    CHECK(max_sperner_cliques(Graph::cycle(5), 2).size == 5);
    // P3: the inclusive default counts the three singletons; 2 is the
    // singleton-excluding convention
    CHECK(max_sperner_cliques(Graph::path(3), 2).size == 3);
    CHECK(max_sperner_cliques(Graph::path(3), 2, false).size == 2);
}

TEST_CASE("antichain members are pairwise incomparable cliques") {
    Graph g = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
    SpernerCliqueResult res = max_sperner_cliques(g, 3);
    for (size_t i = 0; i < res.family.size(); ++i) {
        // induces a clique
        std::vector<int> vs = set_to_vector(res.family[i]);
        for (size_t a = 0; a < vs.size(); ++a)
            for (size_t b = a + 1; b < vs.size(); ++b) CHECK(g.has_edge(vs[a], vs[b]));
        for (size_t j = 0; j < res.family.size(); ++j)
            if (i != j) CHECK_FALSE(subset_of(res.family[i], res.family[j]));
    }
}

TEST_CASE("Dilworth result equals brute-force antichain search on small graphs") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : all_graphs_isofree(n))
            for (int r : {2, 3}) {
                auto poset = enumerate_cliques(g, r);
                if (poset.size() > 20) continue;
                CHECK(max_sperner_cliques(g, r).size == max_antichain_bruteforce(poset));
            }
}

TEST_CASE("lym bound caps the antichain, with equality on complete graphs") {
    for (int n = 2; n <= 6; ++n)
        for (int r : {2, 3}) {
            CHECK(Count(max_sperner_cliques(Graph::complete(n), r).size) == lym_bound(n, r));
            for (const Graph& g : all_graphs_isofree(std::min(n, 5)))
                CHECK(Count(max_sperner_cliques(g, r).size) <=
                      lym_bound(g.vertex_count(), r));
        }
}

TEST_CASE("uniform slices bound the antichain from below") {
    Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    for (int r : {2, 3}) {
        auto cliques = enumerate_cliques(g, r);
        int best_slice = 0;
        for (int s = 1; s <= r; ++s) {
            int count = 0;
            for (VertexSet c : cliques)
                if (set_size(c) == s) ++count;
            best_slice = std::max(best_slice, count);
        }
        CHECK(max_sperner_cliques(g, r).size >= best_slice);
    }
}

TEST_CASE("nsp_bound_check on worked instances") {
    SUBCASE("H_{14,11,3} with r = 2") {
        NspBoundReport rep = nsp_bound_check(build_hnka(14, 11, 3), 11, 2);
        REQUIRE(rep.in_domain);
        CHECK(rep.holds);
        CHECK(rep.bound == std::max(bound_f(14, 11, 2, 2), bound_f(14, 11, 2, 5)));
    }
    SUBCASE("K4 with k=5 is out of domain (n < k)") {
        NspBoundReport rep = nsp_bound_check(Graph::complete(4), 5, 2);
        CHECK_FALSE(rep.in_domain);
        CHECK(rep.skip_reason == "n < k");
    }
    SUBCASE("K4 with k=4 has a 4-cycle, so out of domain") {
        NspBoundReport rep = nsp_bound_check(Graph::complete(4), 4, 2);
        CHECK_FALSE(rep.in_domain);
    }
    SUBCASE("C5 with k=4: theorem needs n >= k but c(C5)=5, skipped") {
        NspBoundReport rep = nsp_bound_check(Graph::cycle(5), 4, 2);
        CHECK_FALSE(rep.in_domain);
    }
}
