#include <algorithm>

#include "berge/connectivity.hpp"
#include "berge/random_instances.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace berge;
using berge::test::hg;

TEST_CASE("cut nodes of path and cycle bigraphs") {
    // I([[0,1],[1,2]]) is the 5-path 0-e0-1-e1-2: every interior node is an
    // articulation point, so both edge-nodes cut as well as vertex-node 1
    // (both edges are cut edges of the hypergraph).
    Hypergraph path = hg(3, 2, {{0, 1}, {1, 2}});
    CutNodeReport rep = cut_nodes(incidence_bigraph(path));
    REQUIRE(rep.connected);
    REQUIRE(rep.cut_nodes.size() == 3);
    CHECK(std::count(rep.cut_nodes.begin(), rep.cut_nodes.end(),
                     BigraphNode{NodeSide::Vertex, 1}) == 1);
    CHECK(std::count(rep.cut_nodes.begin(), rep.cut_nodes.end(),
                     BigraphNode{NodeSide::Edge, 0}) == 1);
    CHECK(std::count(rep.cut_nodes.begin(), rep.cut_nodes.end(),
                     BigraphNode{NodeSide::Edge, 1}) == 1);

    Hypergraph tri = hg(3, 2, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(cut_nodes(incidence_bigraph(tri)).cut_nodes.empty());
}

TEST_CASE("cut nodes of the lowpoint worked instance") {
    Hypergraph h = hg(5, 3, {{0, 1, 2}, {2, 3}, {2, 4}, {3, 4}});
    CutNodeReport rep = cut_nodes(incidence_bigraph(h));
    REQUIRE(rep.connected);
    REQUIRE(rep.cut_nodes.size() == 2);
    int tri_edge = h.find_edge(vector_to_set({0, 1, 2}));
    CHECK(std::count(rep.cut_nodes.begin(), rep.cut_nodes.end(),
                     BigraphNode{NodeSide::Edge, tri_edge}) == 1);
    CHECK(std::count(rep.cut_nodes.begin(), rep.cut_nodes.end(),
                     BigraphNode{NodeSide::Vertex, 2}) == 1);
}

TEST_CASE("disconnected input is reported, not thrown") {
    Hypergraph h = hg(4, 2, {{0, 1}, {2, 3}});
    CHECK_FALSE(cut_nodes(incidence_bigraph(h)).connected);
    CHECK_FALSE(is_connected_hypergraph(h));
}

TEST_CASE("is_2connected") {
    CHECK(is_2connected(hg(3, 2, {{0, 1}, {0, 2}, {1, 2}})));
    CHECK_FALSE(is_2connected(hg(3, 2, {{0, 1}, {1, 2}})));
    CHECK_FALSE(is_2connected(hg(2, 2, {{0, 1}})));        // 3 bigraph nodes
    CHECK_FALSE(is_2connected(hg(3, 3, {{0, 1, 2}})));     // edge node cuts
    CHECK(is_2connected(hg(4, 3, {{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}})));
}

TEST_CASE("2-connectivity forces degrees and shared pairs") {
    Rng rng(11);
    int found = 0;
    while (found < 30) {
        Hypergraph h;
        try {
            h = random_unhappy_2connected(rng, 7, 7);
        } catch (const std::runtime_error&) {
            continue;
        }
        ++found;
        REQUIRE(is_2connected(h));
        for (int v = 0; v < h.vertex_count(); ++v) CHECK(h.vertex_degree(v) >= 2);
        for (int e = 0; e < h.edge_count(); ++e) {
            // every edge shares >= 2 vertices with the union of the rest
            VertexSet rest = 0;
            for (int f = 0; f < h.edge_count(); ++f)
                if (f != e) rest |= h.edge(f);
            CHECK(set_size(h.edge(e) & rest) >= 2);
        }
    }
}

TEST_CASE("blocks: two triangles share a vertex") {
    Hypergraph h = hg(5, 2, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    BlockDecomposition dec = blocks(h);
    REQUIRE(dec.connected);
    REQUIRE(dec.blocks.size() == 2);
    std::vector<std::vector<int>> vsets{dec.blocks[0].vertices, dec.blocks[1].vertices};
    std::sort(vsets.begin(), vsets.end());
    CHECK(vsets[0] == std::vector<int>{0, 1, 2});
    CHECK(vsets[1] == std::vector<int>{2, 3, 4});
}

TEST_CASE("blocks: single edge and cut-edge instance") {
    CHECK(blocks(hg(3, 3, {{0, 1, 2}})).blocks.size() == 1);

    Hypergraph h = hg(5, 3, {{0, 1}, {0, 1, 2}, {2, 3}, {2, 4}, {3, 4}});
    BlockDecomposition dec = blocks(h);
    REQUIRE(dec.blocks.size() == 2);
    // the size-3 cut edge joins the {0,1} block
    std::vector<std::vector<int>> esets;
    for (const HyperBlock& b : dec.blocks) esets.push_back(b.edge_indices);
    std::sort(esets.begin(), esets.end());
    CHECK(esets[0] == std::vector<int>{0, 1});
    CHECK(esets[1] == std::vector<int>{2, 3, 4});
}

TEST_CASE("blocks partition the edge set; vertex identity on cut-edge-free inputs") {
    Rng rng(5);
    int found = 0;
    while (found < 25) {
        Hypergraph h;
        try {
            h = random_unhappy_2connected(rng, 6, 6);  // 2-connected => no cut edges
        } catch (const std::runtime_error&) {
            continue;
        }
        ++found;
        BlockDecomposition dec = blocks(h);
        std::vector<int> all;
        int vsum = 0;
        for (const HyperBlock& b : dec.blocks) {
            all.insert(all.end(), b.edge_indices.begin(), b.edge_indices.end());
            vsum += static_cast<int>(b.vertices.size()) - 1;
            CHECK((is_2connected(b.sub) || b.sub.edge_count() == 1));
            CHECK(is_sperner(b.sub));
        }
        std::sort(all.begin(), all.end());
        std::vector<int> want(static_cast<size_t>(h.edge_count()));
        for (int i = 0; i < h.edge_count(); ++i) want[static_cast<size_t>(i)] = i;
        CHECK(all == want);
        CHECK(vsum == h.vertex_count() - 1);
    }
}

namespace {

Hypergraph k4_block_instance() {
    // K4 on {0,1,2,3} plus {3,4,5}, {0,5}, {0,4}: the K4 part is a special
    // 2-block with outers (0,3).
    return berge::test::hg(6, 3,
                           {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {2, 3},
                            {3, 4, 5}});
}

}  // namespace

TEST_CASE("two_blocks on the worked K4 instance") {
    Hypergraph h = k4_block_instance();
    REQUIRE(is_2connected(h));
    std::vector<TwoBlock> specials = special_two_blocks(h);
    REQUIRE(specials.size() == 1);
    const TwoBlock& tb = specials[0];
    CHECK(tb.members == std::vector<int>{0, 1, 2, 3});
    CHECK(tb.outer_x == 0);
    CHECK(tb.outer_y == 3);
    CHECK(tb.outside_edge == h.find_edge(vector_to_set({3, 4, 5})));
}

TEST_CASE("no special 2-block in a happy ambient hypergraph") {
    Hypergraph h = hg(4, 2, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(special_two_blocks(h).empty());
}

TEST_CASE("triangle has no proper two-block") {
    CHECK(two_blocks(hg(3, 2, {{0, 1}, {0, 2}, {1, 2}})).empty());
}

TEST_CASE("every two-block has exactly two outer vertices and removal keeps the rest connected") {
    Hypergraph h = k4_block_instance();
    REQUIRE_FALSE(two_blocks(h).empty());
    for (const TwoBlock& tb : two_blocks(h)) {
        VertexSet members = vector_to_set(tb.members);
        VertexSet outers = with(single(tb.outer_x), tb.outer_y);
        int with_outside = 0;
        for (int v : tb.members) {
            bool outside = false;
            for (int e = 0; e < h.edge_count(); ++e)
                if (contains(h.edge(e), v) && !subset_of(h.edge(e), members)) outside = true;
            if (outside) {
                ++with_outside;
                CHECK(contains(outers, v));
            }
        }
        CHECK(with_outside == 2);

        // drop the interior and its edges, add {x,y}: remainder stays connected
        VertexSet interior = members & ~outers;
        std::vector<VertexSet> rest;
        for (int e = 0; e < h.edge_count(); ++e)
            if (!(h.edge(e) & interior)) rest.push_back(h.edge(e));
        VertexSet xy = outers;
        if (std::find(rest.begin(), rest.end(), xy) == rest.end()) rest.push_back(xy);
        std::vector<int> live = set_to_vector(full_set(h.vertex_count()) & ~interior);
        std::vector<int> pos(static_cast<size_t>(h.vertex_count()), -1);
        for (size_t i = 0; i < live.size(); ++i)
            pos[static_cast<size_t>(live[i])] = static_cast<int>(i);
        std::vector<VertexSet> relabeled;
        for (VertexSet e : rest) {
            VertexSet s = 0;
            for_each_bit(e, [&](int v) { s = with(s, pos[static_cast<size_t>(v)]); });
            relabeled.push_back(s);
        }
        Hypergraph shrunk = Hypergraph::from_sets(static_cast<int>(live.size()), h.upper_rank(),
                                                  relabeled);
        CHECK(is_connected_hypergraph(shrunk));
    }
}
