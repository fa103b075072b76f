#pragma once

#include <vector>

#include "lcmst/embedding.hpp"
#include "lcmst/lc_metrics.hpp"

namespace lcmst {

// A balanced cycle separator. path_edges are real edges of the input graph
// (two tree paths, concatenated); the closing edge may be synthetic and is
// never part of any output solution.
struct Separator {
    std::vector<int> path_edges;     // P = P1 ∪ P2, real edge ids
    int closing_edge = -1;           // edge id in the triangulated embedding
    bool closing_synthetic = false;
    CyclePartition cycle;            // A inside, B outside (triangulated ids)
    Length path_length = 0;          // l(P)
    Weight path_weight = 0;          // w(P)
    Weight weight_inside = 0;        // W(A)
    Weight weight_outside = 0;       // W(B)
    Weight weight_total = 0;         // W(G)
};

// Balanced fundamental-cycle separator on a triangulated embedding: scans
// non-tree edges in id order and returns the first whose cycle has both
// strict sides at weight <= 2/3 of the total. Vertex weights nonnegative,
// not all zero; the tree must span the graph's vertices.
Separator cycle_separator(const PlanarEmbedding& triangulated,
                          const std::vector<Weight>& vertex_weights,
                          const std::vector<int>& tree_edges, int tree_root);

// Length-constrained separator: mixture SP tree on `g` (tree fixed first),
// triangulate the embedding, then cycle_separator. Guarantees, with budget h:
// l(P) <= 4h, w(P) <= 4*D^(h)(g), and balance on both sides.
Separator lc_separator(const Graph& g, const PlanarEmbedding& emb,
                       const std::vector<Weight>& vertex_weights, Length h);

}  // namespace lcmst
