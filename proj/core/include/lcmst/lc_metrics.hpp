#pragma once

#include <vector>

#include "lcmst/instance.hpp"

namespace lcmst {

// dist[b][v]: minimum weight of a path from `source` to v of length at most b.
// Non-increasing in b; dist[h][v] is d^(h)(source, v).
struct LcDistanceTable {
    int source = 0;
    Length h = 0;
    std::vector<std::vector<Weight>> dist;  // (h+1) x n

    Weight at(int v, Length budget) const { return dist[static_cast<size_t>(budget)][v]; }
    Weight final(int v) const { return dist.back()[v]; }
};

LcDistanceTable lc_distance_table(const Graph& g, int source, Length h);
Weight lc_distance(const Graph& g, int u, int v, Length h);
Weight lc_diameter(const Graph& g, Length h);

// Exact mixture weights: w_mix(e) = D^(h)·l(e)/h + w(e), kept as the integer
// numerator D^(h)·l(e) + h·w(e) over the common denominator h.
struct MixtureWeighting {
    Length h = 1;
    Weight diam_h = 0;
    std::vector<Weight> numerator;  // per edge: diam_h*l(e) + h*w(e)
};

MixtureWeighting mixture_weights(const Graph& g, Length h);
MixtureWeighting mixture_weights(const Graph& g, Length h, Weight diam_h);

// Shortest-path tree under the h-mixture metric. Tie-break: mixture weight,
// then hop count, then smallest parent id. Returns tree edge ids (parent
// edges, n-1 of them for connected graphs).
struct MixtureTree {
    int root = 0;
    std::vector<int> parent;       // -1 at root
    std::vector<int> parent_edge;  // -1 at root
    std::vector<int> edge_ids() const {
        std::vector<int> out;
        for (int e : parent_edge)
            if (e >= 0) out.push_back(e);
        return out;
    }
};

MixtureTree mixture_sp_tree(const Graph& g, Length h, int root);

// ── General shortest-path helpers ───────────────────────────────────

// Dijkstra by edge length; dist[v] = d(root, v), parent edges form a
// length-SPT. INF entries for unreachable vertices.
struct SpTree {
    std::vector<Length> dist;
    std::vector<int> parent;
    std::vector<int> parent_edge;
};
SpTree length_sp_tree(const Graph& g, int root);

// Same, restricted to a subset of edge ids.
SpTree length_sp_tree(const Graph& g, int root, const std::vector<int>& edge_ids);

constexpr Length kInfLength = kInfWeight;

}  // namespace lcmst
