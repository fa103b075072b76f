#include "lcmst/lc_metrics.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace lcmst {

LcDistanceTable lc_distance_table(const Graph& g, int source, Length h) {
    LCMST_CHECK(h >= 0, "negative length budget");
    LcDistanceTable tab;
    tab.source = source;
    tab.h = h;
    const int n = g.n;
    tab.dist.assign(static_cast<size_t>(h) + 1, std::vector<Weight>(n, kInfWeight));
    tab.dist[0][source] = 0;

    auto adj = g.adjacency();
    bool has_zero_length = false;
    for (const Edge& e : g.edges)
        if (e.length == 0) has_zero_length = true;

    // Budget-indexed relaxation. Within one budget layer only zero-length
    // edges can relax, handled by a per-layer Dijkstra so zero-length cycles
    // terminate (weights are nonnegative).
    for (Length b = 0; b <= h; ++b) {
        auto& layer = tab.dist[static_cast<size_t>(b)];
        if (b > 0) {
            const auto& prev = tab.dist[static_cast<size_t>(b) - 1];
            for (int v = 0; v < n; ++v) layer[v] = prev[v];
            for (int ei = 0; ei < g.m(); ++ei) {
                const Edge& e = g.edges[ei];
                if (e.length == 0 || e.length > b) continue;
                const auto& from = tab.dist[static_cast<size_t>(b - e.length)];
                if (!is_inf(from[e.u])) layer[e.v] = std::min(layer[e.v], from[e.u] + e.weight);
                if (!is_inf(from[e.v])) layer[e.u] = std::min(layer[e.u], from[e.v] + e.weight);
            }
        }
        if (has_zero_length) {
            using Item = std::pair<Weight, int>;
            std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
            for (int v = 0; v < n; ++v)
                if (!is_inf(layer[v])) pq.push({layer[v], v});
            while (!pq.empty()) {
                auto [d, v] = pq.top();
                pq.pop();
                if (d > layer[v]) continue;
                for (auto [ei, w] : adj[v]) {
                    if (g.edges[ei].length != 0) continue;
                    Weight nd = d + g.edges[ei].weight;
                    if (nd < layer[w]) {
                        layer[w] = nd;
                        pq.push({nd, w});
                    }
                }
            }
        }
    }
    return tab;
}

Weight lc_distance(const Graph& g, int u, int v, Length h) {
    if (u == v) return 0;
    return lc_distance_table(g, u, h).final(v);
}

Weight lc_diameter(const Graph& g, Length h) {
    Weight best = 0;
    for (int s = 0; s < g.n; ++s) {
        auto tab = lc_distance_table(g, s, h);
        for (int v = 0; v < g.n; ++v) {
            Weight d = tab.final(v);
            if (is_inf(d)) return kInfWeight;
            best = std::max(best, d);
        }
    }
    return best;
}

MixtureWeighting mixture_weights(const Graph& g, Length h, Weight diam_h) {
    LCMST_CHECK(!is_inf(diam_h), "mixture weights need a finite h-length diameter");
    MixtureWeighting mw;
    mw.h = std::max<Length>(h, 1);
    mw.diam_h = diam_h;
    mw.numerator.reserve(g.m());
    for (const Edge& e : g.edges) mw.numerator.push_back(diam_h * e.length + mw.h * e.weight);
    return mw;
}

MixtureWeighting mixture_weights(const Graph& g, Length h) {
    return mixture_weights(g, h, lc_diameter(g, h));
}

MixtureTree mixture_sp_tree(const Graph& g, Length h, int root) {
    Weight diam = lc_diameter(g, h);
    if (is_inf(diam)) throw InfiniteDiameterError();
    MixtureWeighting mw = mixture_weights(g, h, diam);

    const int n = g.n;
    MixtureTree tree;
    tree.root = root;
    tree.parent.assign(n, -1);
    tree.parent_edge.assign(n, -1);

    std::vector<Weight> dist(n, kInfWeight);
    std::vector<int> hops(n, INT32_MAX);
    dist[root] = 0;
    hops[root] = 0;
    auto adj = g.adjacency();

    using Item = std::tuple<Weight, int, int>;  // (mixture dist, hops, vertex)
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    pq.push({0, 0, root});
    while (!pq.empty()) {
        auto [d, hp, v] = pq.top();
        pq.pop();
        if (d > dist[v] || (d == dist[v] && hp > hops[v])) continue;
        for (auto [ei, w] : adj[v]) {
            Weight nd = d + mw.numerator[ei];
            int nh = hp + 1;
            bool better = nd < dist[w] || (nd == dist[w] && nh < hops[w]) ||
                          (nd == dist[w] && nh == hops[w] && tree.parent[w] > v);
            if (better) {
                dist[w] = nd;
                hops[w] = nh;
                tree.parent[w] = v;
                tree.parent_edge[w] = ei;
                pq.push({nd, nh, w});
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (v != root && tree.parent[v] < 0)
            throw ValidationError("mixture_sp_tree requires a connected graph");
    return tree;
}

static SpTree length_sp_tree_impl(const Graph& g, int root,
                                  const std::vector<std::vector<std::pair<int, int>>>& adj) {
    const int n = g.n;
    SpTree t;
    t.dist.assign(n, kInfLength);
    t.parent.assign(n, -1);
    t.parent_edge.assign(n, -1);
    t.dist[root] = 0;
    using Item = std::tuple<Length, int, int>;  // (dist, parent id for ties, vertex)
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    pq.push({0, -1, root});
    std::vector<char> done(n, 0);
    while (!pq.empty()) {
        auto [d, pv, v] = pq.top();
        pq.pop();
        if (done[v]) continue;
        done[v] = 1;
        for (auto [ei, w] : adj[v]) {
            Length nd = d + g.edges[ei].length;
            if (nd < t.dist[w] || (nd == t.dist[w] && !done[w] && t.parent[w] > v)) {
                t.dist[w] = nd;
                t.parent[w] = v;
                t.parent_edge[w] = ei;
                pq.push({nd, v, w});
            }
        }
    }
    return t;
}

SpTree length_sp_tree(const Graph& g, int root) {
    return length_sp_tree_impl(g, root, g.adjacency());
}

SpTree length_sp_tree(const Graph& g, int root, const std::vector<int>& edge_ids) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.n);
    for (int ei : edge_ids) {
        adj[g.edges[ei].u].push_back({ei, g.edges[ei].v});
        adj[g.edges[ei].v].push_back({ei, g.edges[ei].u});
    }
    return length_sp_tree_impl(g, root, adj);
}

}  // namespace lcmst
