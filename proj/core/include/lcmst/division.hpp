#pragma once

#include <string>
#include <vector>

#include "lcmst/separator.hpp"

namespace lcmst {

// A length-constrained region (H, L_H) of a base graph: an edge-induced
// subgraph plus its boundary subgraph. Edge ids refer to the base graph;
// boundary_edge_ids ⊆ edge_ids. Boundary vertices are the endpoints of
// boundary edges; within the region's context those edges are treated as
// flattened (length and weight zero).
struct Region {
    std::vector<int> edge_ids;           // sorted
    std::vector<int> boundary_edge_ids;  // sorted

    std::vector<int> vertices(const Graph& base) const;
    std::vector<int> boundary_vertices(const Graph& base) const;
    std::vector<char> boundary_vertex_mask(const Graph& base) const;
    Length boundary_length(const Graph& base) const;  // original lengths
    int boundary_component_count(const Graph& base) const;
    Weight nonboundary_weight(const Graph& base, const std::vector<Weight>& w) const;
};

// Compact context graph of a region with its boundary flattened: H^0.
struct RegionContext {
    Graph graph;                     // vertices relabeled 0..k-1
    std::vector<int> to_base_vertex;
    std::vector<int> to_base_edge;
    std::vector<int> from_base_vertex;  // base id -> context id or -1
};

RegionContext flatten(const Graph& base, const Region& region);

struct DivisionParams {
    Rational alpha{2, 1};
    Length budget = 1;          // separator length budget (2h for hierarchies)
    Length len_ceiling = 0;     // l(L) target; 0 means 18 * budget
    int comp_ceiling = 6;
    int extra_levels = 8;       // repair rounds past the scheduled depth
    bool audit = false;         // re-check separator invariants on every call

    Length effective_len_ceiling() const { return len_ceiling > 0 ? len_ceiling : 18 * budget; }
};

struct Division {
    std::vector<Region> children;
    int separators_used = 0;
    Weight separator_weight = 0;  // total w(P) bought by this division
};

// The three-regime recursive division: cycles non-boundary-weight balancing,
// boundary-component balancing (via contraction), and boundary-length
// balancing, using length-constrained separators on the flattened region.
Division lc_division(const Graph& base, const Region& region,
                     const std::vector<Weight>& vertex_weights, const DivisionParams& params);

// Edge set and weight of tree ∩ (E(H) \ E(L_H)).
std::pair<std::vector<int>, Weight> restriction(const Graph& base,
                                                const std::vector<int>& tree_edges,
                                                const Region& region);

struct Hierarchy {
    struct Node {
        Region region;
        int parent = -1;
        std::vector<int> children;
        int depth = 0;
        std::vector<std::vector<int>> pieces;  // boundary piece partition (filled later)
    };
    Graph base;
    std::vector<Node> nodes;  // nodes[0] is the root (G, ∅)
    int depth = 0;
    Length budget = 0;  // separator budget used (2h)

    std::vector<int> all_boundary_edges() const;  // union over nodes, sorted unique
};

struct HierarchyParams {
    Rational alpha{2, 1};
    Length h = 1;  // instance length bound; divisions run at budget 2h
    DivisionParams division;  // budget/len_ceiling filled from h
    bool check_feasible = true;
};

// Recursive 2h-length divisions until no non-boundary vertex carries positive
// weight. Default weights are all-ones; the Steiner variant passes terminal
// indicator weights.
Hierarchy build_hierarchy(const Graph& base, const HierarchyParams& params,
                          std::vector<Weight> vertex_weights = {});

// Debug/acceptance dump: JSON tree with per-node edge ids, boundary ids and
// measured stats.
std::string hierarchy_to_json(const Hierarchy& hier);

// smallest d with alpha^d >= value (exact rational arithmetic)
int ceil_log(const Rational& alpha, std::int64_t value);

}  // namespace lcmst
