#include <set>

#include "doctest.h"
#include "lcmst/generator.hpp"
#include "lcmst/separator.hpp"

using namespace lcmst;

namespace {

Graph triangle() {
    Graph g;
    g.n = 3;
    g.add_edge(0, 1, 1, 1);
    g.add_edge(1, 2, 1, 1);
    g.add_edge(0, 2, 1, 1);
    return g;
}

void check_separator_invariants(const Graph& g, const Separator& sep,
                                const std::vector<Weight>& weights, Length h, Weight dh) {
    Weight total = 0;
    for (Weight w : weights) total += w;
    CHECK(3 * sep.weight_inside <= 2 * total);
    CHECK(3 * sep.weight_outside <= 2 * total);
    CHECK(sep.path_length <= 4 * h);
    CHECK(sep.path_weight <= 4 * dh);
    for (int pe : sep.path_edges) CHECK(pe < g.m());  // real edges only
    // E(A, B) = ∅ over real edges
    for (const Edge& e : g.edges) {
        bool in_u = sep.cycle.vertex_side[e.u] == Side::Inside;
        bool in_v = sep.cycle.vertex_side[e.v] == Side::Inside;
        bool out_u = sep.cycle.vertex_side[e.u] == Side::Outside;
        bool out_v = sep.cycle.vertex_side[e.v] == Side::Outside;
        CHECK_FALSE((in_u && out_v));
        CHECK_FALSE((out_u && in_v));
    }
}

}  // namespace

TEST_CASE("triangle separator: both sides under the 2/3 ceiling") {
    Graph g = triangle();
    std::vector<Weight> weights{1, 1, 1};
    PlanarEmbedding emb = embed_planar(g);
    Separator sep = lc_separator(g, emb, weights, 10);
    CHECK(sep.weight_inside <= 2);
    CHECK(sep.weight_outside <= 2);
    check_separator_invariants(g, sep, weights, 10, lc_diameter(g, 10));
}

TEST_CASE("star with concentrated weight stays balanced") {
    Graph g;
    g.n = 5;
    for (int i = 1; i < 5; ++i) g.add_edge(0, i, 1, 1);
    std::vector<Weight> weights{0, 9, 0, 0, 0};  // all weight on one leaf
    PlanarEmbedding emb = embed_planar(g);
    Separator sep = lc_separator(g, emb, weights, 10);
    // the heavy leaf is on the cycle or alone on one side
    check_separator_invariants(g, sep, weights, 10, lc_diameter(g, 10));
}

TEST_CASE("6x6 grid with unit weights: each side at most 24 vertices") {
    Graph g;
    int rows = 6, cols = 6;
    g.n = rows * cols;
    auto id = [&](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1), 1, 1);
            if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c), 1, 1);
        }
    std::vector<Weight> weights(g.n, 1);
    PlanarEmbedding emb = embed_planar(g);
    Length h = 24;
    Separator sep = lc_separator(g, emb, weights, h);
    CHECK(sep.cycle.inside_vertices.size() <= 24);
    CHECK(sep.cycle.outside_vertices.size() <= 24);
    check_separator_invariants(g, sep, weights, h, lc_diameter(g, h));
}

TEST_CASE("contracted weight on two adjacent vertices") {
    Graph g = triangle();
    std::vector<Weight> weights{3, 3, 0};
    PlanarEmbedding emb = embed_planar(g);
    Separator sep = lc_separator(g, emb, weights, 5);
    CHECK(3 * sep.weight_inside <= 2 * 6);
    CHECK(3 * sep.weight_outside <= 2 * 6);
}

TEST_CASE("property sweep: every separator invariant on seeded instances") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        GeneratorConfig cfg;
        cfg.kind = seed % 2 ? GeneratorKind::TriangulatedRandom : GeneratorKind::Grid;
        cfg.n = 6 + static_cast<int>(seed % 20);
        cfg.seed = seed;
        cfg.max_length = 5;
        cfg.max_weight = 7;
        Instance inst = generate_instance(cfg);
        Graph g = graph_of(inst);
        std::vector<Weight> weights(g.n, 1);
        PlanarEmbedding emb = embed_planar(g);
        Length h = 2 * inst.h;
        Weight dh = lc_diameter(g, h);
        if (is_inf(dh)) continue;
        Separator sep = lc_separator(g, emb, weights, h);
        check_separator_invariants(g, sep, weights, h, dh);
        // determinism
        Separator sep2 = lc_separator(g, emb, weights, h);
        CHECK(sep.path_edges == sep2.path_edges);
        CHECK(sep.closing_edge == sep2.closing_edge);
    }
}

TEST_CASE("zero total weight is rejected") {
    Graph g = triangle();
    std::vector<Weight> weights{0, 0, 0};
    PlanarEmbedding emb = embed_planar(g);
    CHECK_THROWS_AS(lc_separator(g, emb, weights, 5), InternalError);
}
