#include "lcmst/reductions.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "json.hpp"
#include "lcmst/lc_metrics.hpp"
#include "lcmst/lcst.hpp"

namespace lcmst {

namespace {

// budget-reachability audit over an undirected edge subset
bool reach_within(const Graph& g, int root, Length h, const std::vector<int>& edge_ids,
                  const std::vector<int>& must_reach) {
    Graph sub;
    sub.n = g.n;
    for (int ei : edge_ids) sub.edges.push_back(g.edges[ei]);
    auto tab = lc_distance_table(sub, root, h);
    for (int v : must_reach)
        if (is_inf(tab.final(v))) return false;
    return true;
}

}  // namespace

bool feasible_solution(const Instance& inst, const std::vector<int>& edge_ids) {
    Graph g = graph_of(inst);
    switch (inst.kind) {
        case ProblemKind::LCMST: {
            std::vector<int> all(g.n);
            for (int v = 0; v < g.n; ++v) all[v] = v;
            return reach_within(g, inst.root, inst.h, edge_ids, all);
        }
        case ProblemKind::LCST:
            return reach_within(g, inst.root, inst.h, edge_ids, inst.terminals);
        case ProblemKind::DST: {
            std::vector<char> in(inst.m(), 0);
            for (int ei : edge_ids) in[ei] = 1;
            std::vector<char> seen(inst.n, 0);
            std::vector<int> stack{inst.root};
            seen[inst.root] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int ai = 0; ai < inst.m(); ++ai)
                    if (in[ai] && inst.edges[ai].u == v && !seen[inst.edges[ai].v]) {
                        seen[inst.edges[ai].v] = 1;
                        stack.push_back(inst.edges[ai].v);
                    }
            }
            for (int t : inst.terminals)
                if (!seen[t]) return false;
            return true;
        }
        case ProblemKind::GST: {
            std::vector<std::vector<std::pair<int, int>>> adj(inst.n);
            for (int ei : edge_ids) {
                adj[inst.edges[ei].u].push_back({ei, inst.edges[ei].v});
                adj[inst.edges[ei].v].push_back({ei, inst.edges[ei].u});
            }
            std::vector<char> seen(inst.n, 0);
            std::vector<int> stack{inst.root};
            seen[inst.root] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (auto [ei, w] : adj[v])
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            for (const auto& grp : inst.groups) {
                bool hit = false;
                for (int v : grp) hit = hit || seen[v];
                if (!hit) return false;
            }
            return true;
        }
    }
    return false;
}

// ════════════════════════════════════════════════════════════════════
//  LCST -> LC-MST (spanning-helper edges)
// ════════════════════════════════════════════════════════════════════

ReductionBundle lcst_to_lcmst(const Instance& inst) {
    LCMST_CHECK(inst.kind == ProblemKind::LCST, "lcst_to_lcmst expects an lcst instance");
    ReductionBundle b;
    b.kind = "lcst-to-lcmst";
    b.source = inst;

    std::set<int> terminal(inst.terminals.begin(), inst.terminals.end());
    std::set<std::pair<int, int>> existing;
    for (const Edge& e : inst.edges)
        existing.insert({std::min(e.u, e.v), std::max(e.u, e.v)});

    Instance t;
    t.kind = ProblemKind::LCMST;
    t.n = inst.n;
    t.h = inst.h;
    t.root = inst.root;
    t.edges = inst.edges;
    b.source_edge_of_target.resize(inst.m());
    for (int i = 0; i < inst.m(); ++i) b.source_edge_of_target[i] = i;
    for (int v = 0; v < inst.n; ++v) b.target_vertex_info.push_back({0, v, -1});

    for (int v = 0; v < inst.n; ++v) {
        if (v == inst.root || terminal.count(v)) continue;
        std::vector<int> helper_ids;
        if (!existing.count({std::min(inst.root, v), std::max(inst.root, v)})) {
            helper_ids.push_back(t.m());
            t.edges.push_back({inst.root, v, inst.h, 0});
            b.source_edge_of_target.push_back(-1);
        } else {
            // an (r, v) edge already exists; split the helper through a fresh
            // midpoint so the instance stays a simple graph
            int mid = t.n++;
            b.target_vertex_info.push_back({2, v, -1});
            helper_ids.push_back(t.m());
            t.edges.push_back({inst.root, mid, inst.h, 0});
            b.source_edge_of_target.push_back(-1);
            helper_ids.push_back(t.m());
            t.edges.push_back({mid, v, 0, 0});
            b.source_edge_of_target.push_back(-1);
        }
        b.spanning_helpers.push_back({v, helper_ids});
    }
    b.target = std::move(t);
    b.target.validate();
    return b;
}

// ════════════════════════════════════════════════════════════════════
//  LC-MST -> layered DST
// ════════════════════════════════════════════════════════════════════

namespace {

// node numbering for the layered digraph: r = 0; copy of v != r in layer
// i (0..h) sits at 1 + i*(n-1) + idx(v)
struct DstLayout {
    int n = 0;
    Length h = 0;
    int root = 0;
    std::vector<int> idx;  // source vertex -> compact index among V \ {r}

    int node(int v, Length layer) const {
        return 1 + static_cast<int>(layer) * (n - 1) + idx[v];
    }
};

DstLayout dst_layout(const Instance& inst) {
    DstLayout lay;
    lay.n = inst.n;
    lay.h = inst.h;
    lay.root = inst.root;
    lay.idx.assign(inst.n, -1);
    int k = 0;
    for (int v = 0; v < inst.n; ++v)
        if (v != inst.root) lay.idx[v] = k++;
    return lay;
}

}  // namespace

ReductionBundle lcmst_to_dst(const Instance& inst) {
    LCMST_CHECK(inst.kind == ProblemKind::LCMST, "lcmst_to_dst expects an lcmst instance");
    std::int64_t layers = static_cast<std::int64_t>(inst.h) + 1;
    if (layers > layer_cap()) throw LayerCapError(layers);

    ReductionBundle b;
    b.kind = "lcmst-to-dst";
    b.source = inst;
    DstLayout lay = dst_layout(inst);

    Instance t;
    t.kind = ProblemKind::DST;
    t.directed = true;
    t.n = 1 + static_cast<int>(layers) * (inst.n - 1);
    t.root = 0;
    t.h = 1;  // unused for dst; kept for the uniform header

    // ordered by (layer, idx) to match the node numbering
    b.target_vertex_info.push_back({0, inst.root, 0});
    for (Length i = 0; i < layers; ++i)
        for (int v = 0; v < inst.n; ++v)
            if (v != inst.root) b.target_vertex_info.push_back({1, v, static_cast<int>(i)});

    // stay arcs
    for (Length i = 0; i + 1 < layers; ++i)
        for (int v = 0; v < inst.n; ++v) {
            if (v == inst.root) continue;
            t.edges.push_back({lay.node(v, i), lay.node(v, i + 1), 0, 0});
            b.source_edge_of_target.push_back(-1);
        }
    // edge copies; arcs advance by the edge's length
    for (int ei = 0; ei < inst.m(); ++ei) {
        const Edge& e = inst.edges[ei];
        if (e.length > inst.h) continue;
        for (int dir = 0; dir < 2; ++dir) {
            int from = dir ? e.v : e.u;
            int to = dir ? e.u : e.v;
            if (to == inst.root) continue;  // tree paths never return to r
            if (from == inst.root) {
                t.edges.push_back({0, lay.node(to, e.length), 0, e.weight});
                b.source_edge_of_target.push_back(ei);
                continue;
            }
            for (Length i = 0; i + e.length < layers; ++i) {
                t.edges.push_back({lay.node(from, i), lay.node(to, i + e.length), 0, e.weight});
                b.source_edge_of_target.push_back(ei);
            }
        }
    }
    for (int v = 0; v < inst.n; ++v)
        if (v != inst.root) t.terminals.push_back(lay.node(v, inst.h));
    b.target = std::move(t);
    b.target.validate();
    return b;
}

// ════════════════════════════════════════════════════════════════════
//  DST -> layered LCST
// ════════════════════════════════════════════════════════════════════

namespace {

struct LcstLayout {
    int n = 0;
    int terminals = 0;
    int node(int v, int layer) const { return layer * n + v; }
    int special(int ti, int layer) const { return n * n + ti * n + layer; }
};

}  // namespace

ReductionBundle dst_to_lcst(const Instance& inst) {
    LCMST_CHECK(inst.kind == ProblemKind::DST, "dst_to_lcst expects a dst instance");
    ReductionBundle b;
    b.kind = "dst-to-lcst";
    b.source = inst;

    LcstLayout lay;
    lay.n = inst.n;
    lay.terminals = static_cast<int>(inst.terminals.size());

    Instance t;
    t.kind = ProblemKind::LCST;
    t.n = inst.n * inst.n + lay.terminals * inst.n;
    t.root = lay.node(inst.root, 0);
    t.h = inst.n;

    b.target_vertex_info.assign(t.n, {});
    for (int i = 0; i < inst.n; ++i)
        for (int v = 0; v < inst.n; ++v) b.target_vertex_info[lay.node(v, i)] = {0, v, i};
    for (int ti = 0; ti < lay.terminals; ++ti)
        for (int i = 0; i < inst.n; ++i)
            b.target_vertex_info[lay.special(ti, i)] = {1, inst.terminals[ti], i};

    // arc copies: length-1 edges between consecutive layers
    for (int ai = 0; ai < inst.m(); ++ai) {
        const Edge& a = inst.edges[ai];
        for (int i = 0; i + 1 < inst.n; ++i) {
            t.edges.push_back({lay.node(a.u, i), lay.node(a.v, i + 1), 1, a.weight});
            b.source_edge_of_target.push_back(ai);
        }
    }
    // special edges and per-terminal cliques of the special copies
    b.special_edge.assign(lay.terminals, std::vector<int>(inst.n, -1));
    for (int ti = 0; ti < lay.terminals; ++ti) {
        int term = inst.terminals[ti];
        for (int i = 0; i < inst.n; ++i) {
            b.special_edge[ti][i] = t.m();
            t.edges.push_back({lay.node(term, i), lay.special(ti, i), inst.n - i, 0});
            b.source_edge_of_target.push_back(-1);
        }
        for (int i = 0; i < inst.n; ++i)
            for (int j = i + 1; j < inst.n; ++j) {
                b.always_free_edges.push_back(t.m());
                t.edges.push_back({lay.special(ti, i), lay.special(ti, j), 0, 0});
                b.source_edge_of_target.push_back(-1);
            }
        for (int i = 0; i < inst.n; ++i) t.terminals.push_back(lay.special(ti, i));
    }
    b.target = std::move(t);
    b.target.validate();
    return b;
}

// ════════════════════════════════════════════════════════════════════
//  GST -> LC-MST (pull-away gadget)
// ════════════════════════════════════════════════════════════════════

ReductionBundle gst_to_lcmst(const Instance& inst) {
    LCMST_CHECK(inst.kind == ProblemKind::GST, "gst_to_lcmst expects a gst instance");
    ReductionBundle b;
    b.kind = "gst-to-lcmst";
    b.source = inst;

    Instance t;
    t.kind = ProblemKind::LCMST;
    t.n = inst.n;
    t.root = inst.root;
    t.h = inst.h;

    for (int v = 0; v < inst.n; ++v) b.target_vertex_info.push_back({0, v, -1});

    // original edges keep weights, lengths become 0
    for (int ei = 0; ei < inst.m(); ++ei) {
        const Edge& e = inst.edges[ei];
        t.edges.push_back({e.u, e.v, 0, e.weight});
        b.source_edge_of_target.push_back(ei);
    }
    // pull each grouped vertex away by a length-h copy edge (set P), and make
    // a zero clique per group among the copies (set C)
    std::vector<std::vector<int>> copies(inst.groups.size());
    for (size_t gi = 0; gi < inst.groups.size(); ++gi) {
        for (int v : inst.groups[gi]) {
            int cp = t.n++;
            b.target_vertex_info.push_back({1, v, static_cast<int>(gi)});
            copies[gi].push_back(cp);
            b.always_free_edges.push_back(t.m());
            t.edges.push_back({cp, v, inst.h, 0});
            b.source_edge_of_target.push_back(-1);
        }
        for (size_t i = 0; i < copies[gi].size(); ++i)
            for (size_t j = i + 1; j < copies[gi].size(); ++j) {
                b.always_free_edges.push_back(t.m());
                t.edges.push_back({copies[gi][i], copies[gi][j], 0, 0});
                b.source_edge_of_target.push_back(-1);
            }
    }
    // spanning edges S from the root to every original vertex
    std::set<std::pair<int, int>> existing;
    for (const Edge& e : inst.edges)
        existing.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    for (int v = 0; v < inst.n; ++v) {
        if (v == inst.root) continue;
        std::vector<int> ids;
        if (!existing.count({std::min(inst.root, v), std::max(inst.root, v)})) {
            ids.push_back(t.m());
            t.edges.push_back({inst.root, v, inst.h, 0});
            b.source_edge_of_target.push_back(-1);
        } else {
            int mid = t.n++;
            b.target_vertex_info.push_back({2, v, -1});
            ids.push_back(t.m());
            t.edges.push_back({inst.root, mid, inst.h, 0});
            b.source_edge_of_target.push_back(-1);
            ids.push_back(t.m());
            t.edges.push_back({mid, v, 0, 0});
            b.source_edge_of_target.push_back(-1);
        }
        b.spanning_helpers.push_back({v, ids});
    }
    b.target = std::move(t);
    b.target.validate();
    return b;
}

Instance normalize_gst_groups(const Instance& inst,
                              const std::vector<std::vector<int>>& groups) {
    Instance out = inst;
    out.kind = ProblemKind::GST;
    out.groups.clear();
    std::vector<int> seen(out.n, 0);
    for (const auto& grp : groups) {
        std::vector<int> fixed;
        for (int v : grp) {
            if (!seen[v]) {
                seen[v] = 1;
                fixed.push_back(v);
            } else {
                // star trick: dummy vertex attached by a zero edge stands in
                int dummy = out.n++;
                out.edges.push_back({v, dummy, 0, 0});
                fixed.push_back(dummy);
                seen.push_back(1);
            }
        }
        out.groups.push_back(std::move(fixed));
    }
    out.validate();
    return out;
}

// ════════════════════════════════════════════════════════════════════
//  Solution mappers
// ════════════════════════════════════════════════════════════════════

std::vector<int> ReductionBundle::backward(const std::vector<int>& target_edges) const {
    std::set<int> out;
    for (int te : target_edges) {
        int se = source_edge_of_target[te];
        if (se >= 0) out.insert(se);
    }
    return {out.begin(), out.end()};
}

std::vector<int> ReductionBundle::forward(const std::vector<int>& source_edges) const {
    std::set<int> out;
    Graph sg = graph_of(source);

    if (kind == "lcst-to-lcmst" || kind == "gst-to-lcmst") {
        // identity on the original edges (same ids by construction)
        for (int se : source_edges) out.insert(se);
        for (int fe : always_free_edges) out.insert(fe);
        // spanning helpers for vertices the solution doesn't already reach
        // within budget at zero extra cost; buying them unconditionally keeps
        // the weight unchanged (all helpers weigh 0) and the audit simple
        for (const auto& [v, ids] : spanning_helpers) out.insert(ids.begin(), ids.end());
        return {out.begin(), out.end()};
    }

    if (kind == "lcmst-to-dst") {
        DstLayout lay = dst_layout(source);
        std::map<std::pair<int, int>, int> arc_id;
        for (int te = 0; te < target.m(); ++te)
            arc_id[{target.edges[te].u, target.edges[te].v}] = te;
        SpTree spt = length_sp_tree(sg, source.root, source_edges);
        for (int v = 0; v < source.n; ++v) {
            if (v == source.root) continue;
            LCMST_CHECK(spt.dist[v] <= source.h, "forward mapping needs a feasible solution");
            // walk the root path, emitting arcs at cumulative lengths
            std::vector<int> path;
            for (int cur = v; cur != source.root; cur = spt.parent[cur]) path.push_back(cur);
            std::reverse(path.begin(), path.end());
            Length at = 0;
            int prev = source.root;
            for (int cur : path) {
                Length nl = at + sg.edges[spt.parent_edge[cur]].length;
                int from = (prev == source.root) ? 0 : lay.node(prev, at);
                auto it = arc_id.find({from, lay.node(cur, nl)});
                LCMST_CHECK(it != arc_id.end(), "missing arc copy in the layered target");
                out.insert(it->second);
                at = nl;
                prev = cur;
            }
            for (Length i = spt.dist[v]; i < source.h; ++i) {
                auto it = arc_id.find({lay.node(v, i), lay.node(v, i + 1)});
                LCMST_CHECK(it != arc_id.end(), "missing stay arc");
                out.insert(it->second);
            }
        }
        return {out.begin(), out.end()};
    }

    if (kind == "dst-to-lcst") {
        LcstLayout lay;
        lay.n = source.n;
        lay.terminals = static_cast<int>(source.terminals.size());
        std::map<std::pair<int, int>, int> edge_id;
        for (int te = 0; te < target.m(); ++te) {
            edge_id[{target.edges[te].u, target.edges[te].v}] = te;
            edge_id[{target.edges[te].v, target.edges[te].u}] = te;
        }
        // hop-BFS tree of the arc set
        std::vector<int> depth(source.n, -1), par(source.n, -1), par_arc(source.n, -1);
        std::queue<int> q;
        depth[source.root] = 0;
        q.push(source.root);
        std::vector<char> in(source.m(), 0);
        for (int se : source_edges) in[se] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int ai = 0; ai < source.m(); ++ai)
                if (in[ai] && source.edges[ai].u == v && depth[source.edges[ai].v] < 0) {
                    depth[source.edges[ai].v] = depth[v] + 1;
                    par[source.edges[ai].v] = v;
                    par_arc[source.edges[ai].v] = ai;
                    q.push(source.edges[ai].v);
                }
        }
        for (int v = 0; v < source.n; ++v) {
            if (depth[v] <= 0) continue;
            auto it = edge_id.find({lay.node(par[v], depth[v] - 1), lay.node(v, depth[v])});
            LCMST_CHECK(it != edge_id.end(), "missing layered copy");
            out.insert(it->second);
        }
        for (int ti = 0; ti < lay.terminals; ++ti) {
            int term = source.terminals[ti];
            LCMST_CHECK(depth[term] >= 0, "forward mapping needs a feasible solution");
            out.insert(special_edge[ti][depth[term]]);
        }
        for (int fe : always_free_edges) out.insert(fe);
        return {out.begin(), out.end()};
    }

    throw InternalError("unknown reduction kind: " + kind);
}

std::string ReductionBundle::sidecar_json() const {
    using nlohmann::ordered_json;
    ordered_json j;
    j["kind"] = kind;
    j["source_kind"] = kind_name(source.kind);
    j["target_kind"] = kind_name(target.kind);
    j["target_vertices"] = ordered_json::array();
    for (size_t v = 0; v < target_vertex_info.size(); ++v) {
        const auto& vi = target_vertex_info[v];
        j["target_vertices"].push_back(
            {{"id", v}, {"tag", vi.tag}, {"base", vi.base}, {"layer", vi.layer}});
    }
    j["source_edge_of_target"] = source_edge_of_target;
    if (source_opt) j["source_opt"] = *source_opt;
    if (target_opt) j["target_opt"] = *target_opt;
    return j.dump(2);
}

}  // namespace lcmst
