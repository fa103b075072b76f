#include "lcmst/pieces.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "lcmst/lc_metrics.hpp"

namespace lcmst {

namespace {

// induced-subgraph diameter of a vertex set (by length), for the stats
Length induced_diameter(const Graph& g, const std::vector<int>& verts) {
    std::set<int> vs(verts.begin(), verts.end());
    Length best = 0;
    for (int s : verts) {
        // Dijkstra restricted to vs
        std::map<int, Length> dist;
        using Item = std::pair<Length, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
        dist[s] = 0;
        pq.push({0, s});
        auto adj = g.adjacency();
        while (!pq.empty()) {
            auto [d, v] = pq.top();
            pq.pop();
            if (d > dist[v]) continue;
            for (auto [ei, w] : adj[v]) {
                if (!vs.count(w)) continue;
                Length nd = d + g.edges[ei].length;
                auto it = dist.find(w);
                if (it == dist.end() || nd < it->second) {
                    dist[w] = nd;
                    pq.push({nd, w});
                }
            }
        }
        for (int v : verts) {
            auto it = dist.find(v);
            LCMST_CHECK(it != dist.end(), "piece not connected inside its component");
            best = std::max(best, it->second);
        }
    }
    return best;
}

}  // namespace

PiecePartition partition_boundary(const Graph& component, const Rational& beta) {
    LCMST_CHECK(component.connected(), "partition_boundary needs a connected component");
    LCMST_CHECK(beta.num > 0, "beta must be positive");

    PiecePartition out;
    out.beta = beta;
    for (const Edge& e : component.edges) out.component_budget += e.length;
    const Length budget = out.component_budget;

    // threshold h/(4*beta): edge length l exceeds it iff 4*beta*l > budget
    auto exceeds_threshold = [&](Length l) {
        return static_cast<__int128>(4) * beta.num * l > static_cast<__int128>(budget) * beta.den;
    };

    // length-SPT from the smallest vertex that actually appears
    int root = -1;
    for (int v = 0; v < component.n && root < 0; ++v)
        for (const Edge& e : component.edges)
            if (e.u == v || e.v == v) {
                root = v;
                break;
            }
    if (root < 0) {
        // no edges: single vertex (or nothing); one piece per vertex present
        for (int v = 0; v < component.n; ++v) {
            out.pieces.push_back({v});
            out.piece_diameters.push_back(0);
        }
        return out;
    }

    SpTree spt = length_sp_tree(component, root);

    // tree children lists
    std::vector<std::vector<int>> children(component.n);
    std::vector<int> order;  // BFS order from root
    {
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (int w = 0; w < component.n; ++w)
                if (spt.parent[w] == v) {
                    children[v].push_back(w);
                    q.push(w);
                }
        }
    }

    // phase 1: cut tree edges longer than the threshold
    std::vector<char> cut_from_parent(component.n, 0);
    for (int v : order) {
        if (v == root) continue;
        Length l = component.edges[spt.parent_edge[v]].length;
        if (exceeds_threshold(l)) cut_from_parent[v] = 1;
    }

    // phase 2: process bottom-up; a vertex whose remaining subtree reaches
    // farther than the threshold splits off (its parent edge is cut)
    std::vector<Length> maxdesc(component.n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        maxdesc[v] = 0;
        for (int w : children[v]) {
            if (cut_from_parent[w]) continue;
            Length reach = component.edges[spt.parent_edge[w]].length + maxdesc[w];
            maxdesc[v] = std::max(maxdesc[v], reach);
        }
        if (v != root && exceeds_threshold(maxdesc[v])) cut_from_parent[v] = 1;
    }

    // collect pieces: connected components of the tree after the cuts
    std::vector<int> piece_of(component.n, -1);
    for (int v : order) {
        if (v == root || cut_from_parent[v]) {
            piece_of[v] = static_cast<int>(out.pieces.size());
            out.pieces.push_back({});
        } else {
            piece_of[v] = piece_of[spt.parent[v]];
        }
        out.pieces[piece_of[v]].push_back(v);
    }
    for (auto& p : out.pieces) std::sort(p.begin(), p.end());
    for (const auto& p : out.pieces) out.piece_diameters.push_back(induced_diameter(component, p));
    return out;
}

std::vector<std::vector<int>> partition_edge_set_pieces(const Graph& base,
                                                        const std::vector<int>& edge_ids,
                                                        const Rational& beta_user,
                                                        Length diameter_target_num,
                                                        Length diameter_target_den) {
    // components of the edge set
    std::map<int, int> local_of;
    std::vector<int> base_of;
    for (int ei : edge_ids)
        for (int v : {base.edges[ei].u, base.edges[ei].v})
            if (!local_of.count(v)) {
                local_of[v] = static_cast<int>(base_of.size());
                base_of.push_back(v);
            }
    Graph sub;
    sub.n = static_cast<int>(base_of.size());
    for (int ei : edge_ids)
        sub.add_edge(local_of[base.edges[ei].u], local_of[base.edges[ei].v],
                     base.edges[ei].length, base.edges[ei].weight);

    int comp_count = 0;
    std::vector<int> comp = sub.component_ids(&comp_count);

    std::vector<std::vector<int>> result;
    for (int c = 0; c < comp_count; ++c) {
        // extract component as its own graph
        std::map<int, int> cl;
        std::vector<int> cb;
        for (int v = 0; v < sub.n; ++v)
            if (comp[v] == c) {
                cl[v] = static_cast<int>(cb.size());
                cb.push_back(v);
            }
        Graph cg;
        cg.n = static_cast<int>(cb.size());
        for (const Edge& e : sub.edges)
            if (comp[e.u] == c) cg.add_edge(cl[e.u], cl[e.v], e.length, e.weight);

        Length total = 0;
        for (const Edge& e : cg.edges) total += e.length;

        // choose the component's beta so the induced diameter target holds:
        // total/beta_c <= target  =>  beta_c >= total/target
        Rational beta_c = beta_user;
        if (diameter_target_den > 0) {
            // beta_c = max(beta_user, total * den / num), exact
            Rational needed(0, 1);
            if (diameter_target_num > 0)
                needed = Rational(total * diameter_target_den, diameter_target_num);
            if (beta_c < needed) beta_c = needed;
        }
        if (beta_c.num <= 0) beta_c = Rational(1, 1);

        PiecePartition pp = partition_boundary(cg, beta_c);
        for (const auto& piece : pp.pieces) {
            std::vector<int> mapped;
            for (int lv : piece) mapped.push_back(base_of[cb[lv]]);
            std::sort(mapped.begin(), mapped.end());
            result.push_back(std::move(mapped));
        }
    }
    return result;
}

}  // namespace lcmst
