#include "lcmst/lcst.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "lcmst/lc_metrics.hpp"

namespace lcmst {

std::int64_t layer_cap() {
    if (const char* env = std::getenv("LCMST_LAYER_CAP")) {
        std::int64_t v = std::atoll(env);
        if (v > 0) return v;
    }
    return 10000;
}

LayeredDst layer(const LcstInstance& inst) {
    LCMST_CHECK(inst.h >= 0, "negative budget");
    std::int64_t layers = static_cast<std::int64_t>(inst.h) + 1;
    if (layers > layer_cap()) throw LayerCapError(layers);

    LayeredDst out;
    out.layers = static_cast<int>(layers);
    out.base_n = inst.graph.n;
    out.root_node = out.node_of(inst.root, 0);

    // stay arcs
    for (Length b = 0; b + 1 < layers; ++b)
        for (int v = 0; v < inst.graph.n; ++v)
            out.arcs.push_back({out.node_of(v, b), out.node_of(v, b + 1), 0, -1});
    // edge copies: an edge of length l spans l layers, in both directions;
    // zero-length edges stay within their layer
    for (int ei = 0; ei < inst.graph.m(); ++ei) {
        const Edge& e = inst.graph.edges[ei];
        if (e.length > inst.h) continue;  // unusable within any budget
        for (Length b = 0; b + e.length < layers; ++b) {
            out.arcs.push_back({out.node_of(e.u, b), out.node_of(e.v, b + e.length), e.weight, ei});
            out.arcs.push_back({out.node_of(e.v, b), out.node_of(e.u, b + e.length), e.weight, ei});
        }
    }
    for (int t : inst.terminals) out.terminal_nodes.push_back(out.node_of(t, inst.h));
    return out;
}

namespace {

struct LayeredAdj {
    std::vector<std::vector<int>> out_arcs;  // node -> arc ids
    std::vector<std::vector<int>> in_arcs;
    explicit LayeredAdj(const LayeredDst& g)
        : out_arcs(g.node_count()), in_arcs(g.node_count()) {
        for (int a = 0; a < static_cast<int>(g.arcs.size()); ++a) {
            out_arcs[g.arcs[a].from].push_back(a);
            in_arcs[g.arcs[a].to].push_back(a);
        }
    }
};

// Dijkstra over the layered graph with a per-arc cost override (bought arcs
// cost zero). dir=false: forward from src; dir=true: reverse (distances TO src).
std::vector<Weight> layered_dijkstra(const LayeredDst& g, const LayeredAdj& adj, int src,
                                     const std::vector<char>& bought, bool reverse,
                                     std::vector<int>* parent_arc = nullptr) {
    std::vector<Weight> dist(g.node_count(), kInfWeight);
    if (parent_arc) parent_arc->assign(g.node_count(), -1);
    using Item = std::pair<Weight, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[src] = 0;
    pq.push({0, src});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d > dist[v]) continue;
        const auto& lst = reverse ? adj.in_arcs[v] : adj.out_arcs[v];
        for (int ai : lst) {
            const auto& arc = g.arcs[ai];
            int w = reverse ? arc.from : arc.to;
            Weight cost = bought[ai] ? 0 : arc.weight;
            if (d + cost < dist[w]) {
                dist[w] = d + cost;
                if (parent_arc) (*parent_arc)[w] = ai;
                pq.push({d + cost, w});
            }
        }
    }
    return dist;
}

struct GreedyState {
    const LayeredDst& g;
    const LayeredAdj& adj;
    std::vector<char> bought;  // arc ids in the growing solution
};

// Collect the arc path from src to dst using parent pointers.
std::vector<int> unwind(const LayeredDst& g, const std::vector<int>& parent_arc, int src, int dst,
                        bool reverse) {
    std::vector<int> arcs;
    int cur = dst;
    while (cur != src) {
        int ai = parent_arc[cur];
        LCMST_CHECK(ai >= 0, "broken parent chain");
        arcs.push_back(ai);
        cur = reverse ? g.arcs[ai].to : g.arcs[ai].from;
    }
    return arcs;
}

// level-1 greedy rooted at `root_node`: cover the requested terminals by
// repeatedly buying the lowest-density shortest path (bought arcs are free)
bool greedy_level1(GreedyState& st, int root_node, std::vector<int>& uncovered) {
    while (!uncovered.empty()) {
        std::vector<int> parent;
        auto dist = layered_dijkstra(st.g, st.adj, root_node, st.bought, false, &parent);
        // cheapest single terminal path; path may incidentally cover others
        int best = -1;
        Weight best_w = kInfWeight;
        for (int t : uncovered)
            if (dist[t] < best_w) {
                best_w = dist[t];
                best = t;
            }
        if (best < 0 || is_inf(best_w)) return false;
        for (int ai : unwind(st.g, parent, root_node, best, false)) st.bought[ai] = 1;
        // re-scan coverage: terminals now at distance 0
        auto dist2 = layered_dijkstra(st.g, st.adj, root_node, st.bought, false);
        std::vector<int> still;
        for (int t : uncovered)
            if (dist2[t] != 0) still.push_back(t);
        uncovered = std::move(still);
    }
    return true;
}

// level-i greedy: repeatedly pick the densest (weight per newly covered
// terminal) bundle formed by a path to an intermediate node v plus v's
// cheapest paths to a prefix of the uncovered terminals.
bool greedy_level(GreedyState& st, int level, int root_node, std::vector<int> uncovered) {
    if (level <= 1) return greedy_level1(st, root_node, uncovered);

    while (!uncovered.empty()) {
        std::vector<int> parent_root;
        auto from_root =
            layered_dijkstra(st.g, st.adj, root_node, st.bought, false, &parent_root);
        // reverse distances from each uncovered terminal
        std::vector<std::vector<Weight>> to_term(uncovered.size());
        for (size_t ti = 0; ti < uncovered.size(); ++ti)
            to_term[ti] = layered_dijkstra(st.g, st.adj, uncovered[ti], st.bought, true);

        // densest (v, k)-bundle
        int best_v = -1;
        Weight best_num = kInfWeight;  // bundle weight
        long long best_den = 1;
        std::vector<int> best_terms;
        for (int v = 0; v < st.g.node_count(); ++v) {
            if (is_inf(from_root[v])) continue;
            std::vector<std::pair<Weight, int>> reach;
            for (size_t ti = 0; ti < uncovered.size(); ++ti)
                if (!is_inf(to_term[ti][v])) reach.push_back({to_term[ti][v], uncovered[ti]});
            if (reach.empty()) continue;
            std::sort(reach.begin(), reach.end());
            Weight acc = from_root[v];
            for (size_t k = 0; k < reach.size(); ++k) {
                acc += reach[k].first;
                // density acc/(k+1) < best_num/best_den ?
                if (static_cast<__int128>(acc) * best_den <
                    static_cast<__int128>(best_num) * (k + 1)) {
                    best_num = acc;
                    best_den = static_cast<long long>(k + 1);
                    best_v = v;
                    best_terms.clear();
                    for (size_t j = 0; j <= k; ++j) best_terms.push_back(reach[j].second);
                }
            }
        }
        if (best_v < 0) return false;

        // buy the root path, then recurse one level down from best_v
        for (int ai : unwind(st.g, parent_root, root_node, best_v, false)) st.bought[ai] = 1;
        if (!greedy_level(st, level - 1, best_v, best_terms)) return false;

        auto dist2 = layered_dijkstra(st.g, st.adj, root_node, st.bought, false);
        std::vector<int> still;
        for (int t : uncovered)
            if (dist2[t] != 0) still.push_back(t);
        if (still.size() == uncovered.size()) return false;  // no progress
        uncovered = std::move(still);
    }
    return true;
}

}  // namespace

std::optional<std::vector<int>> recursive_greedy(const LayeredDst& layered, int levels) {
    LCMST_CHECK(levels >= 1, "recursive_greedy needs levels >= 1");
    LayeredAdj adj(layered);
    GreedyState st{layered, adj, std::vector<char>(layered.arcs.size(), 0)};

    // quick feasibility: all terminals reachable at all?
    auto dist0 = layered_dijkstra(layered, adj, layered.root_node, st.bought, false);
    for (int t : layered.terminal_nodes)
        if (is_inf(dist0[t])) return std::nullopt;

    std::vector<int> uncovered = layered.terminal_nodes;
    std::sort(uncovered.begin(), uncovered.end());
    uncovered.erase(std::unique(uncovered.begin(), uncovered.end()), uncovered.end());
    if (!greedy_level(st, levels, layered.root_node, uncovered)) return std::nullopt;

    std::vector<int> arcs;
    for (int ai = 0; ai < static_cast<int>(layered.arcs.size()); ++ai)
        if (st.bought[ai]) arcs.push_back(ai);
    return arcs;
}

std::optional<LcstResult> lcst_approx_levels(const LcstInstance& inst, int levels) {
    // terminals equal to the root (or none) are trivially covered
    std::vector<int> terms;
    for (int t : inst.terminals)
        if (t != inst.root) terms.push_back(t);
    if (terms.empty()) return LcstResult{{}, 0};

    LcstInstance work = inst;
    work.terminals = terms;
    LayeredDst lay = layer(work);
    auto arcs = recursive_greedy(lay, levels);
    if (!arcs) return std::nullopt;

    // project: drop stay arcs, dedupe base edges
    std::set<int> base_edges;
    for (int ai : *arcs)
        if (lay.arcs[ai].base_edge >= 0) base_edges.insert(lay.arcs[ai].base_edge);
    LcstResult res;
    res.edge_ids.assign(base_edges.begin(), base_edges.end());
    for (int ei : res.edge_ids) res.weight += inst.graph.edges[ei].weight;
    if (!lcst_feasible(inst, res.edge_ids)) return std::nullopt;  // audit, never expected
    return res;
}

std::optional<LcstResult> lcst_approx(const LcstInstance& inst, double delta) {
    int levels = delta >= 1.0 ? 1 : static_cast<int>(std::ceil(1.0 / delta));
    return lcst_approx_levels(inst, levels);
}

bool lcst_feasible(const LcstInstance& inst, const std::vector<int>& edge_ids) {
    Graph sub;
    sub.n = inst.graph.n;
    for (int ei : edge_ids) sub.edges.push_back(inst.graph.edges[ei]);
    auto tab = lc_distance_table(sub, inst.root, inst.h);
    for (int t : inst.terminals)
        if (is_inf(tab.final(t))) return false;
    return true;
}

std::optional<LcstResult> lcst_exact(const LcstInstance& inst, std::int64_t work_cap) {
    // zero-weight edges are always free to include; branch on the rest
    std::vector<int> free_edges, paid_edges;
    for (int ei = 0; ei < inst.graph.m(); ++ei)
        (inst.graph.edges[ei].weight == 0 ? free_edges : paid_edges).push_back(ei);
    if (paid_edges.size() > 24)
        throw TooLargeError("lcst_exact: too many positive-weight edges");

    // infeasible even with everything?
    {
        std::vector<int> all(inst.graph.m());
        for (int i = 0; i < inst.graph.m(); ++i) all[i] = i;
        if (!lcst_feasible(inst, all)) return std::nullopt;
    }

    std::sort(paid_edges.begin(), paid_edges.end(), [&](int a, int b) {
        return inst.graph.edges[a].weight > inst.graph.edges[b].weight;
    });

    Weight best = kInfWeight;
    std::vector<int> best_paid;
    std::vector<int> chosen;
    std::int64_t work = 0;

    std::function<void(size_t, Weight)> rec = [&](size_t idx, Weight acc) {
        if (++work > work_cap) throw TooLargeError("lcst_exact: work cap exceeded");
        if (acc >= best) return;
        if (idx == paid_edges.size()) {
            std::vector<int> edges = free_edges;
            edges.insert(edges.end(), chosen.begin(), chosen.end());
            if (lcst_feasible(inst, edges)) {
                best = acc;
                best_paid = chosen;
            }
            return;
        }
        // feasibility with all remaining edges still allowed?
        // (cheap pruning: only test at the leaves plus a coarse reachability cut)
        chosen.push_back(paid_edges[idx]);
        rec(idx + 1, acc + inst.graph.edges[paid_edges[idx]].weight);
        chosen.pop_back();
        // excluding this edge: only recurse if still feasible with the rest
        std::vector<int> edges = free_edges;
        edges.insert(edges.end(), chosen.begin(), chosen.end());
        for (size_t j = idx + 1; j < paid_edges.size(); ++j) edges.push_back(paid_edges[j]);
        if (lcst_feasible(inst, edges)) rec(idx + 1, acc);
    };
    rec(0, 0);

    if (is_inf(best)) return std::nullopt;
    LcstResult res;
    res.edge_ids = free_edges;
    res.edge_ids.insert(res.edge_ids.end(), best_paid.begin(), best_paid.end());
    // drop free edges the solution does not actually need
    for (size_t i = 0; i < res.edge_ids.size();) {
        if (inst.graph.edges[res.edge_ids[i]].weight != 0) {
            ++i;
            continue;
        }
        std::vector<int> trial = res.edge_ids;
        trial.erase(trial.begin() + static_cast<long>(i));
        if (lcst_feasible(inst, trial))
            res.edge_ids = std::move(trial);
        else
            ++i;
    }
    std::sort(res.edge_ids.begin(), res.edge_ids.end());
    res.weight = best;
    return res;
}

}  // namespace lcmst
