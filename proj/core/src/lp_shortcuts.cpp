#include "lcmst/lp_shortcuts.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "lcmst/lc_metrics.hpp"
#include "lcmst/separator.hpp"

namespace lcmst {

std::optional<BudgetedPath> budgeted_shortest_path(const Graph& g,
                                                   const std::vector<int>& sources,
                                                   const std::vector<int>& targets,
                                                   Weight weight_budget) {
    struct Label {
        Length len;
        Weight wt;
        int vertex;
        int parent_label;
        int via_edge;
    };
    std::vector<Label> labels;
    std::vector<std::vector<int>> pareto(g.n);  // label ids per vertex
    std::vector<char> is_target(g.n, 0);
    for (int t : targets) is_target[t] = 1;

    auto dominated = [&](int v, Length l, Weight w) {
        for (int li : pareto[v])
            if (labels[li].len <= l && labels[li].wt <= w) return true;
        return false;
    };
    auto insert_label = [&](int v, Length l, Weight w, int par, int via) {
        if (w > weight_budget || dominated(v, l, w)) return -1;
        auto& lst = pareto[v];
        lst.erase(std::remove_if(lst.begin(), lst.end(),
                                 [&](int li) { return labels[li].len >= l && labels[li].wt >= w; }),
                  lst.end());
        labels.push_back({l, w, v, par, via});
        int id = static_cast<int>(labels.size()) - 1;
        lst.push_back(id);
        return id;
    };

    using Item = std::tuple<Length, Weight, int>;  // (len, wt, label id)
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    for (int s : sources) {
        int id = insert_label(s, 0, 0, -1, -1);
        if (id >= 0) pq.push({0, 0, id});
    }
    auto adj = g.adjacency();
    while (!pq.empty()) {
        auto [l, w, li] = pq.top();
        pq.pop();
        const Label lab = labels[li];
        if (lab.len != l || lab.wt != w) continue;  // superseded
        if (is_target[lab.vertex]) {
            BudgetedPath out;
            out.length = l;
            out.weight = w;
            out.target = lab.vertex;
            int cur = li;
            while (labels[cur].parent_label >= 0) {
                out.edge_ids.push_back(labels[cur].via_edge);
                cur = labels[cur].parent_label;
            }
            out.source = labels[cur].vertex;
            std::reverse(out.edge_ids.begin(), out.edge_ids.end());
            return out;
        }
        for (auto [ei, nxt] : adj[lab.vertex]) {
            Length nl = l + g.edges[ei].length;
            Weight nw = w + g.edges[ei].weight;
            int id = insert_label(nxt, nl, nw, li, ei);
            if (id >= 0) pq.push({nl, nw, id});
        }
    }
    return std::nullopt;
}

// ════════════════════════════════════════════════════════════════════
//  Simple 3/2 hierarchy with contracted separators
// ════════════════════════════════════════════════════════════════════

namespace {

struct ContractedGraph {
    Graph multi;                      // parallel edges preserved
    std::vector<int> base_edge;       // multi edge -> base edge id
    int supernode = 0;                // the contracted root vertex
    std::vector<int> base_of_vertex;  // scratch -> representative base id (-1 for supernode)
};

// subpath greedy: cut the separator's base edge run into pieces whenever the
// accumulated length would exceed h/beta, or at a supernode passage
std::vector<std::vector<int>> subpath_pieces(const Graph& base,
                                             const std::vector<std::vector<int>>& segments,
                                             Length h, const Rational& beta) {
    std::vector<std::vector<int>> pieces;
    auto over = [&](Length acc) {
        // acc > h/beta  <=>  acc * beta.num > h * beta.den
        return static_cast<__int128>(acc) * beta.num > static_cast<__int128>(h) * beta.den;
    };
    for (const auto& seg : segments) {
        // seg: ordered base edge ids forming a path
        if (seg.empty()) continue;
        // rebuild the vertex order along the path
        std::vector<int> vorder;
        {
            if (seg.size() == 1) {
                vorder = {base.edges[seg[0]].u, base.edges[seg[0]].v};
            } else {
                int first_shared = -1;
                const Edge& e0 = base.edges[seg[0]];
                const Edge& e1 = base.edges[seg[1]];
                first_shared = (e0.u == e1.u || e0.u == e1.v) ? e0.u : e0.v;
                vorder.push_back(e0.other(first_shared));
                vorder.push_back(first_shared);
                for (size_t i = 1; i < seg.size(); ++i)
                    vorder.push_back(base.edges[seg[i]].other(vorder.back()));
            }
        }
        std::vector<int> cur{vorder[0]};
        Length acc = 0;
        for (size_t i = 0; i < seg.size(); ++i) {
            Length l = base.edges[seg[i]].length;
            if (over(acc + l)) {
                pieces.push_back(cur);
                cur = {vorder[i + 1]};
                acc = 0;
            } else {
                acc += l;
                cur.push_back(vorder[i + 1]);
            }
        }
        pieces.push_back(cur);
    }
    for (auto& p : pieces) {
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
    }
    return pieces;
}

// split a scratch path (edge ids in the simple scratch graph) into maximal
// runs not touching the supernode, as base edge sequences; edges incident to
// the supernode become single-edge segments (their far base endpoint lies in
// contracted territory, so base-level contiguity breaks there)
std::vector<std::vector<int>> path_segments(const Graph& scratch,
                                            const std::vector<int>& scratch_base_edge,
                                            const std::vector<int>& path, int supernode) {
    if (path.empty()) return {};
    std::vector<std::vector<int>> segs;
    std::map<int, std::vector<int>> at;  // vertex -> path edge ids
    for (int pe : path) {
        at[scratch.edges[pe].u].push_back(pe);
        at[scratch.edges[pe].v].push_back(pe);
    }
    int start = -1;
    for (auto& [v, lst] : at)
        if (lst.size() == 1) {
            start = v;
            break;
        }
    LCMST_CHECK(start >= 0, "separator path is not a simple path");
    std::set<int> used;
    std::vector<int> cur_seg;
    int v = start;
    while (used.size() < path.size()) {
        int nxt_edge = -1;
        for (int pe : at[v])
            if (!used.count(pe)) {
                nxt_edge = pe;
                break;
            }
        LCMST_CHECK(nxt_edge >= 0, "broken separator path walk");
        used.insert(nxt_edge);
        int w = scratch.edges[nxt_edge].other(v);
        if (v == supernode || w == supernode) {
            if (!cur_seg.empty()) segs.push_back(cur_seg);
            cur_seg.clear();
            segs.push_back({scratch_base_edge[nxt_edge]});
        } else {
            cur_seg.push_back(scratch_base_edge[nxt_edge]);
        }
        v = w;
    }
    if (!cur_seg.empty()) segs.push_back(cur_seg);
    return segs;
}

}  // namespace

SimpleHierarchy simple_hierarchy(const Graph& g, int root, Length h, const Rational& beta,
                                 bool audit) {
    SimpleHierarchy out;
    const Length budget = 2 * h;

    ContractedGraph top;
    top.multi = g;
    top.base_edge.resize(g.m());
    for (int i = 0; i < g.m(); ++i) top.base_edge[i] = i;
    top.supernode = root;
    top.base_of_vertex.resize(g.n);
    for (int i = 0; i < g.n; ++i) top.base_of_vertex[i] = i;
    top.base_of_vertex[root] = -1;

    std::queue<std::pair<ContractedGraph, int>> todo;  // (graph, depth)
    todo.push({std::move(top), 0});

    while (!todo.empty()) {
        auto [cg, depth] = todo.front();
        todo.pop();
        out.depth = std::max(out.depth, depth);

        int non_super = 0;
        for (int v = 0; v < cg.multi.n; ++v)
            if (v != cg.supernode) ++non_super;
        if (non_super == 0 || cg.multi.m() == 0) continue;  // leaf

        SimpleHierarchy::Level level;
        level.depth = depth;

        // simple scratch for the embedding: keep per pair the edge minimizing
        // the mixture numerator under the multigraph diameter
        Weight diam = lc_diameter(cg.multi, budget);
        if (is_inf(diam)) throw InfeasibleInstanceError("contracted region has infinite D^(2h)");
        level.diameter_bound = diam;

        Graph scratch;
        scratch.n = cg.multi.n;
        std::vector<int> scratch_base;
        std::map<std::pair<int, int>, int> kept;
        Length hh = std::max<Length>(budget, 1);
        for (int me = 0; me < cg.multi.m(); ++me) {
            const Edge& e = cg.multi.edges[me];
            if (e.u == e.v) continue;
            auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
            Weight mix = diam * e.length + hh * e.weight;
            auto it = kept.find(key);
            if (it == kept.end()) {
                kept[key] = scratch.m();
                scratch.edges.push_back(e);
                scratch_base.push_back(me);
            } else {
                int se = it->second;
                Weight old = diam * scratch.edges[se].length + hh * scratch.edges[se].weight;
                if (mix < old) {
                    scratch.edges[se] = e;
                    scratch_base[se] = me;
                }
            }
        }

        std::vector<int> path_scratch_edges;
        CyclePartition part;
        bool have_partition = false;
        if (scratch.n <= 2 || scratch.m() < 2) {
            // degenerate: buy a mixture-lightest spanning path of what's left
            MixtureTree mt = mixture_sp_tree(scratch, budget, cg.supernode);
            path_scratch_edges = mt.edge_ids();
        } else {
            std::vector<Weight> weights(scratch.n, 0);
            for (int v = 0; v < scratch.n; ++v)
                if (v != cg.supernode) weights[v] = 1;
            PlanarEmbedding emb = embed_planar(scratch);
            Separator sep = lc_separator(scratch, emb, weights, budget);
            if (audit) {
                LCMST_CHECK(sep.path_length <= 4 * budget, "separator length bound violated");
                LCMST_CHECK(sep.path_weight <= 4 * lc_diameter(scratch, budget),
                            "separator weight bound violated");
            }
            path_scratch_edges = sep.path_edges;
            part = sep.cycle;
            have_partition = true;
        }

        // record bought separator edges (base ids) and the pieces
        std::vector<std::vector<int>> segments;
        {
            std::vector<int> base_run;
            segments = path_segments(scratch, scratch_base, path_scratch_edges, cg.supernode);
            for (auto& seg : segments)
                for (int& me : seg) me = cg.base_edge[me];  // multi id -> base id
            for (const auto& seg : segments)
                for (int be : seg) {
                    level.separator_edges.push_back(be);
                    level.separator_weight += g.edges[be].weight;
                }
        }
        level.pieces = subpath_pieces(g, segments, h, beta);
        out.levels.push_back(level);

        if (!have_partition) continue;  // degenerate node: everything contracted

        // children: contract V(C) into the supernode and split sides
        std::vector<char> on_cycle(scratch.n, 0);
        for (int v : part.cycle_vertices) on_cycle[v] = 1;
        auto make_child = [&](Side side) {
            ContractedGraph child;
            std::vector<int> map_v(cg.multi.n, -1);
            child.supernode = 0;
            child.multi.n = 1;
            child.base_of_vertex.push_back(-1);
            for (int v = 0; v < cg.multi.n; ++v) {
                if (v == cg.supernode || on_cycle[v]) {
                    map_v[v] = child.supernode;
                } else if (part.vertex_side[v] == side) {
                    map_v[v] = child.multi.n++;
                    child.base_of_vertex.push_back(cg.base_of_vertex[v]);
                }
            }
            for (int me = 0; me < cg.multi.m(); ++me) {
                const Edge& e = cg.multi.edges[me];
                int mu = map_v[e.u], mv = map_v[e.v];
                if (mu < 0 || mv < 0 || mu == mv) continue;
                child.multi.add_edge(mu, mv, e.length, e.weight);
                child.base_edge.push_back(cg.base_edge[me]);
            }
            return child;
        };
        ContractedGraph child_in = make_child(Side::Inside);
        ContractedGraph child_out = make_child(Side::Outside);
        if (child_in.multi.n > 1) todo.push({std::move(child_in), depth + 1});
        if (child_out.multi.n > 1) todo.push({std::move(child_out), depth + 1});
    }
    return out;
}

std::vector<int> SimpleHierarchy::boundary_edges() const {
    std::set<int> all;
    for (const auto& lvl : levels) all.insert(lvl.separator_edges.begin(), lvl.separator_edges.end());
    return {all.begin(), all.end()};
}

LpRunResult run_lp_variant(const Instance& inst, double epsilon, const BudgetProvider& provider) {
    Graph base = graph_of(inst);
    if (!base.connected()) throw DisconnectedError();
    {
        SpTree spt = length_sp_tree(base, inst.root);
        for (int v = 0; v < base.n; ++v)
            if (spt.dist[v] > inst.h)
                throw InfeasibleInstanceError("vertex beyond length h from root");
    }

    double logn = std::log2(std::max(base.n, 2));
    double beta_val = std::max(1.0, logn / std::max(epsilon, 1e-6));
    Rational beta(static_cast<std::int64_t>(std::lround(beta_val * 4)), 4);

    SimpleHierarchy hier = simple_hierarchy(base, inst.root, inst.h, beta, true);

    LpRunResult out;
    out.depth = hier.depth;

    std::set<int> chosen;
    for (const auto& lvl : hier.levels)
        for (int ei : lvl.separator_edges)
            if (chosen.insert(ei).second) out.boundary_weight += base.edges[ei].weight;

    for (const auto& lvl : hier.levels) {
        for (const auto& piece : lvl.pieces) {
            auto path = budgeted_shortest_path(base, {inst.root}, piece, provider.value);
            if (!path)
                throw InfeasibleInstanceError("no shortcut path within the weight budget");
            ++out.shortcut_paths;
            for (int ei : path->edge_ids)
                if (chosen.insert(ei).second) {
                    out.shortcut_weight += base.edges[ei].weight;
                }
        }
    }

    std::vector<int> union_edges(chosen.begin(), chosen.end());
    SpTree spt = length_sp_tree(base, inst.root, union_edges);
    for (int v = 0; v < base.n; ++v) {
        if (v == inst.root) continue;
        LCMST_CHECK(!is_inf(spt.dist[v]), "lp-variant union does not span the graph");
        out.tree_edges.push_back(spt.parent_edge[v]);
        out.max_root_distance = std::max(out.max_root_distance, spt.dist[v]);
    }
    std::sort(out.tree_edges.begin(), out.tree_edges.end());
    for (int ei : out.tree_edges) out.weight += base.edges[ei].weight;
    out.slack = inst.h > 0 ? static_cast<double>(out.max_root_distance) /
                                 static_cast<double>(inst.h)
                           : 0.0;
    return out;
}

}  // namespace lcmst
