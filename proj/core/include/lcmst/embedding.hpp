#pragma once

#include <vector>

#include "lcmst/instance.hpp"

namespace lcmst {

// Combinatorial planar embedding as a rotation system. Darts are directed
// edge halves: dart 2e runs edges[e].u -> edges[e].v, dart 2e+1 the reverse.
// Faces are the orbits of face_next(d) = rotation-successor of twin(d).
struct PlanarEmbedding {
    int n = 0;
    std::vector<Edge> edges;   // ids < real_edge_count are the input graph's
    int real_edge_count = 0;
    std::vector<std::vector<int>> rotation;  // per vertex: darts leaving it, cyclic
    int outer_face_dart = -1;                // face containing this dart is "outer"

    int tail(int d) const { return (d & 1) ? edges[d >> 1].v : edges[d >> 1].u; }
    int head(int d) const { return (d & 1) ? edges[d >> 1].u : edges[d >> 1].v; }
    static int twin(int d) { return d ^ 1; }
    static int edge_of(int d) { return d >> 1; }
    bool is_synthetic(int edge_id) const { return edge_id >= real_edge_count; }

    int dart_count() const { return 2 * static_cast<int>(edges.size()); }
    int face_next(int d) const;
    std::vector<std::vector<int>> faces() const;  // dart walks
    int face_count() const;

    // Every edge-end in exactly one rotation slot, Euler's formula, and (when
    // requested) all-triangle faces. Throws InternalError on violation.
    void check_consistency(bool expect_triangulated = false) const;

    // construction plumbing
    void rebuild_positions();
    void insert_dart_before(int new_dart, int before_dart);
    void append_dart(int v, int new_dart);

private:
    std::vector<int> rot_pos_;  // dart -> index in rotation[tail]
};

// Planarity test and embedding via incremental face placement on biconnected
// blocks. Throws DisconnectedError, or NonPlanarError carrying an edge-minimal
// non-planar subgraph (a Kuratowski subdivision) as witness.
PlanarEmbedding embed_planar(const Graph& g);

bool is_planar(const Graph& g);

// Adds synthetic chords until every face has exactly 3 sides. Never creates
// parallel edges; original rotation order is preserved. Idempotent.
PlanarEmbedding triangulate(const PlanarEmbedding& emb);

// Tree paths P1 (from e.u) and P2 (from e.v) to their lowest common ancestor
// in the tree rooted at `root`; P1 ∪ P2 ∪ {e} is a simple cycle. With the
// default root = e.u the first path is empty.
struct FundamentalCycle {
    std::vector<int> p1_edges;
    std::vector<int> p2_edges;
    std::vector<int> cycle_vertices;        // in cycle order, starting at e.u
    std::vector<int> path_edges() const {   // P1 ∪ P2
        std::vector<int> all = p1_edges;
        all.insert(all.end(), p2_edges.begin(), p2_edges.end());
        return all;
    }
};
FundamentalCycle fundamental_cycle(const Graph& g, const std::vector<int>& tree_edges,
                                   int non_tree_edge, int root = -1);

enum class Side : unsigned char { OnCycle, Inside, Outside };

// Partition of the embedding relative to a simple cycle and the designated
// outer face: A strictly inside, B strictly outside, no A-B edge.
struct CyclePartition {
    std::vector<Side> vertex_side;
    std::vector<Side> edge_side;
    std::vector<int> inside_vertices;   // A
    std::vector<int> outside_vertices;  // B
    std::vector<int> cycle_vertices;
};

CyclePartition classify_inside_outside(const PlanarEmbedding& emb,
                                       const std::vector<int>& cycle_edges);

}  // namespace lcmst
