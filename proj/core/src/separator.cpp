#include "lcmst/separator.hpp"

#include <algorithm>
#include <numeric>

namespace lcmst {

Separator cycle_separator(const PlanarEmbedding& emb, const std::vector<Weight>& vertex_weights,
                          const std::vector<int>& tree_edges, int tree_root) {
    Weight total = 0;
    for (int v = 0; v < emb.n; ++v) {
        LCMST_CHECK(vertex_weights[v] >= 0, "negative vertex weight");
        total += vertex_weights[v];
    }
    LCMST_CHECK(total > 0, "cycle_separator needs a nonzero total weight");

    Graph tg;
    tg.n = emb.n;
    tg.edges = emb.edges;

    std::vector<char> in_tree(emb.edges.size(), 0);
    for (int te : tree_edges) in_tree[te] = 1;

    for (int ei = 0; ei < static_cast<int>(emb.edges.size()); ++ei) {
        if (in_tree[ei]) continue;
        FundamentalCycle fc = fundamental_cycle(tg, tree_edges, ei, tree_root);
        std::vector<int> cyc_edges = fc.path_edges();
        cyc_edges.push_back(ei);
        CyclePartition part = classify_inside_outside(emb, cyc_edges);

        Weight wa = 0, wb = 0;
        for (int v : part.inside_vertices) wa += vertex_weights[v];
        for (int v : part.outside_vertices) wb += vertex_weights[v];
        if (3 * wa <= 2 * total && 3 * wb <= 2 * total) {
            Separator sep;
            sep.path_edges = fc.path_edges();
            sep.closing_edge = ei;
            sep.closing_synthetic = emb.is_synthetic(ei);
            sep.cycle = std::move(part);
            for (int pe : sep.path_edges) {
                sep.path_length += emb.edges[pe].length;
                sep.path_weight += emb.edges[pe].weight;
            }
            sep.weight_inside = wa;
            sep.weight_outside = wb;
            sep.weight_total = total;
            return sep;
        }
    }
    // Cannot occur on a valid triangulation with a spanning tree.
    throw InternalError("no balanced fundamental cycle found");
}

Separator lc_separator(const Graph& g, const PlanarEmbedding& emb,
                       const std::vector<Weight>& vertex_weights, Length h) {
    LCMST_CHECK(emb.n == g.n && emb.real_edge_count == g.m(),
                "embedding does not match the graph");
    // root choice is free for the guarantees; smallest id keeps runs stable
    int root = 0;
    MixtureTree tree = mixture_sp_tree(g, h, root);  // throws InfiniteDiameterError
    std::vector<int> tree_edges = tree.edge_ids();

    PlanarEmbedding tri = triangulate(emb);
    Separator sep = cycle_separator(tri, vertex_weights, tree_edges, root);

    // Tree edges are real by construction; synthetic edges can appear only
    // as the closing edge.
    for (int pe : sep.path_edges)
        LCMST_CHECK(!tri.is_synthetic(pe), "separator path contains a synthetic edge");
    return sep;
}

}  // namespace lcmst
