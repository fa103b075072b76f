#pragma once

#include <cstdlib>
#include <optional>
#include <vector>

#include "lcmst/instance.hpp"

namespace lcmst {

// A length-constrained Steiner tree subinstance: connect every terminal to
// the root within length h, minimizing weight.
struct LcstInstance {
    Graph graph;
    int root = 0;
    std::vector<int> terminals;
    Length h = 0;
};

// Layered directed expansion: node (v, b) = copy of v in layer b; an edge of
// length l becomes arcs spanning l layers; zero-weight stay arcs advance one
// layer. Arc weights equal the original edge weights, so layered path weight
// equals projected walk weight.
struct LayeredDst {
    int layers = 0;  // h+1
    int base_n = 0;
    struct Arc {
        int from = 0;  // node id = layer * base_n + v
        int to = 0;
        Weight weight = 0;
        int base_edge = -1;  // -1 for stay arcs
    };
    std::vector<Arc> arcs;
    int root_node = 0;
    std::vector<int> terminal_nodes;

    int node_count() const { return layers * base_n; }
    int node_of(int v, Length layer) const { return static_cast<int>(layer) * base_n + v; }
    int layer_of(int node) const { return node / base_n; }
    int base_of(int node) const { return node % base_n; }
};

std::int64_t layer_cap();  // default 10^4, LCMST_LAYER_CAP overrides

LayeredDst layer(const LcstInstance& inst);

// Recursive-greedy directed Steiner approximation on the layered graph with
// `levels` recursion depth; returns arc ids of a feasible solution covering
// all terminals, or nullopt if some terminal is unreachable.
std::optional<std::vector<int>> recursive_greedy(const LayeredDst& layered, int levels);

// fail is represented as nullopt and consumed as weight ∞ by the DP
struct LcstResult {
    std::vector<int> edge_ids;  // in the original graph
    Weight weight = 0;
};

std::optional<LcstResult> lcst_approx(const LcstInstance& inst, double delta);
std::optional<LcstResult> lcst_approx_levels(const LcstInstance& inst, int levels);

// Exact oracle: minimum-weight edge set from which every terminal is
// reachable within length h (branch and bound over positive-weight edges;
// zero-weight edges are free and always available).
std::optional<LcstResult> lcst_exact(const LcstInstance& inst, std::int64_t work_cap = 20000000);

// budget-indexed reachability audit: every terminal within h using only
// `edge_ids`
bool lcst_feasible(const LcstInstance& inst, const std::vector<int>& edge_ids);

}  // namespace lcmst
