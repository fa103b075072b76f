#include "lcmst/division.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

namespace lcmst {

// ════════════════════════════════════════════════════════════════════
//  Region basics
// ════════════════════════════════════════════════════════════════════

std::vector<int> Region::vertices(const Graph& base) const {
    std::set<int> vs;
    for (int ei : edge_ids) {
        vs.insert(base.edges[ei].u);
        vs.insert(base.edges[ei].v);
    }
    return {vs.begin(), vs.end()};
}

std::vector<int> Region::boundary_vertices(const Graph& base) const {
    std::set<int> vs;
    for (int ei : boundary_edge_ids) {
        vs.insert(base.edges[ei].u);
        vs.insert(base.edges[ei].v);
    }
    return {vs.begin(), vs.end()};
}

std::vector<char> Region::boundary_vertex_mask(const Graph& base) const {
    std::vector<char> mask(base.n, 0);
    for (int ei : boundary_edge_ids) {
        mask[base.edges[ei].u] = 1;
        mask[base.edges[ei].v] = 1;
    }
    return mask;
}

Length Region::boundary_length(const Graph& base) const {
    Length total = 0;
    for (int ei : boundary_edge_ids) total += base.edges[ei].length;
    return total;
}

int Region::boundary_component_count(const Graph& base) const {
    if (boundary_edge_ids.empty()) return 0;
    std::map<int, int> id;  // base vertex -> local
    for (int ei : boundary_edge_ids) {
        id.emplace(base.edges[ei].u, static_cast<int>(id.size()));
        id.emplace(base.edges[ei].v, static_cast<int>(id.size()));
    }
    std::vector<int> uf(id.size());
    for (size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    for (int ei : boundary_edge_ids) {
        int a = find(id[base.edges[ei].u]);
        int b = find(id[base.edges[ei].v]);
        if (a != b) uf[a] = b;
    }
    std::set<int> roots;
    for (size_t i = 0; i < uf.size(); ++i) roots.insert(find(static_cast<int>(i)));
    return static_cast<int>(roots.size());
}

Weight Region::nonboundary_weight(const Graph& base, const std::vector<Weight>& w) const {
    auto mask = boundary_vertex_mask(base);
    Weight total = 0;
    for (int v : vertices(base))
        if (!mask[v]) total += w[v];
    return total;
}

RegionContext flatten(const Graph& base, const Region& region) {
    RegionContext ctx;
    ctx.from_base_vertex.assign(base.n, -1);
    std::vector<char> is_boundary(base.m(), 0);
    for (int ei : region.boundary_edge_ids) is_boundary[ei] = 1;
    for (int ei : region.edge_ids) {
        for (int v : {base.edges[ei].u, base.edges[ei].v}) {
            if (ctx.from_base_vertex[v] < 0) {
                ctx.from_base_vertex[v] = static_cast<int>(ctx.to_base_vertex.size());
                ctx.to_base_vertex.push_back(v);
            }
        }
    }
    ctx.graph.n = static_cast<int>(ctx.to_base_vertex.size());
    for (int ei : region.edge_ids) {
        const Edge& e = base.edges[ei];
        Length l = is_boundary[ei] ? 0 : e.length;
        Weight w = is_boundary[ei] ? 0 : e.weight;
        ctx.graph.add_edge(ctx.from_base_vertex[e.u], ctx.from_base_vertex[e.v], l, w);
        ctx.to_base_edge.push_back(ei);
    }
    return ctx;
}

int ceil_log(const Rational& alpha, std::int64_t value) {
    LCMST_CHECK(alpha.num > alpha.den, "ceil_log needs alpha > 1");
    if (value <= 1) return 0;
    // smallest d with alpha^d >= value
    __int128 num = 1, den = 1;
    for (int d = 1; d <= 128; ++d) {
        num *= alpha.num;
        den *= alpha.den;
        if (num >= den * value) return d;
        // keep magnitudes in range
        __int128 g = num > den ? den : num;
        (void)g;
    }
    throw InternalError("ceil_log did not converge");
}

// ════════════════════════════════════════════════════════════════════
//  Division internals
// ════════════════════════════════════════════════════════════════════

namespace {

// Boundary connected components over base vertex ids.
std::vector<std::vector<int>> boundary_components(const Graph& base, const Region& region) {
    std::map<int, std::vector<std::pair<int, int>>> adj;  // v -> (edge, other)
    for (int ei : region.boundary_edge_ids) {
        adj[base.edges[ei].u].push_back({ei, base.edges[ei].v});
        adj[base.edges[ei].v].push_back({ei, base.edges[ei].u});
    }
    std::set<int> unvisited;
    for (auto& [v, _] : adj) unvisited.insert(v);
    std::vector<std::vector<int>> comps;
    while (!unvisited.empty()) {
        int s = *unvisited.begin();
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        unvisited.erase(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (auto [ei, w] : adj[v])
                if (unvisited.count(w)) {
                    unvisited.erase(w);
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

enum class EdgeFate : unsigned char { OnPath, Inside, Outside, Shared };

struct SplitResult {
    std::vector<int> path_base_edges;
    std::vector<EdgeFate> fate;  // indexed by position in region.edge_ids
    Weight path_weight = 0;
    Length path_length = 0;
};

// One separator application on the (flattened, possibly contracted) region.
// regime: 0 = non-boundary vertex weight, 1 = contracted boundary components,
// 2 = boundary length potential.
SplitResult split_region(const Graph& base, const Region& region,
                         const std::vector<Weight>& vertex_weights, int regime, Length budget,
                         bool audit) {
    RegionContext ctx = flatten(base, region);
    auto bmask = region.boundary_vertex_mask(base);
    std::vector<char> is_boundary_edge(base.m(), 0);
    for (int ei : region.boundary_edge_ids) is_boundary_edge[ei] = 1;

    // scratch vertex set: contracted boundary components for regime 1
    std::vector<std::vector<int>> comps;
    std::vector<int> comp_of_base(base.n, -1);
    if (regime == 1) {
        comps = boundary_components(base, region);
        for (size_t c = 0; c < comps.size(); ++c)
            for (int v : comps[c]) comp_of_base[v] = static_cast<int>(c);
    }

    int nc = static_cast<int>(comps.size());
    std::vector<int> scratch_of_ctx(ctx.graph.n, -1);
    std::vector<int> base_of_scratch;  // representative base vertex or -1 for supernodes
    {
        int next = nc;  // supernodes take ids [0, nc)
        base_of_scratch.assign(nc, -1);
        for (int cv = 0; cv < ctx.graph.n; ++cv) {
            int bv = ctx.to_base_vertex[cv];
            if (comp_of_base[bv] >= 0) {
                scratch_of_ctx[cv] = comp_of_base[bv];
            } else {
                scratch_of_ctx[cv] = next++;
                base_of_scratch.push_back(bv);
            }
        }
    }
    int scratch_n = static_cast<int>(base_of_scratch.size());

    // multigraph first (parallels can appear after contraction)
    Graph multi;
    multi.n = scratch_n;
    std::vector<int> multi_base_edge;
    std::vector<int> selfloop_base_edges;  // intra-component boundary edges
    for (int ce = 0; ce < ctx.graph.m(); ++ce) {
        int su = scratch_of_ctx[ctx.graph.edges[ce].u];
        int sv = scratch_of_ctx[ctx.graph.edges[ce].v];
        if (su == sv) {
            selfloop_base_edges.push_back(ctx.to_base_edge[ce]);
            continue;
        }
        multi.add_edge(su, sv, ctx.graph.edges[ce].length, ctx.graph.edges[ce].weight);
        multi_base_edge.push_back(ctx.to_base_edge[ce]);
    }

    // dedupe parallels: keep the representative with the smallest mixture
    // numerator under the multigraph's h-length diameter
    Weight diam_multi = lc_diameter(multi, budget);
    if (is_inf(diam_multi)) throw InfiniteDiameterError();
    Graph scratch;
    scratch.n = scratch_n;
    std::vector<int> scratch_base_edge;
    std::map<std::pair<int, int>, int> kept;                 // pair -> scratch edge id
    std::map<int, std::vector<int>> dropped_base_by_scratch;  // scratch edge -> base edges
    Length hh = std::max<Length>(budget, 1);
    for (int me = 0; me < multi.m(); ++me) {
        const Edge& e = multi.edges[me];
        auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
        Weight mix = diam_multi * e.length + hh * e.weight;
        auto it = kept.find(key);
        if (it == kept.end()) {
            kept[key] = scratch.m();
            scratch.edges.push_back(e);
            scratch_base_edge.push_back(multi_base_edge[me]);
        } else {
            int se = it->second;
            Weight old_mix =
                diam_multi * scratch.edges[se].length + hh * scratch.edges[se].weight;
            if (mix < old_mix) {
                dropped_base_by_scratch[se].push_back(scratch_base_edge[se]);
                scratch.edges[se] = e;
                scratch_base_edge[se] = multi_base_edge[me];
            } else {
                dropped_base_by_scratch[se].push_back(multi_base_edge[me]);
            }
        }
    }

    // regime weights on scratch vertices
    std::vector<Weight> weights(scratch_n, 0);
    if (regime == 0) {
        for (int sv = nc; sv < scratch_n; ++sv) {
            int bv = base_of_scratch[sv];
            if (!bmask[bv]) weights[sv] = vertex_weights[bv];
        }
    } else if (regime == 1) {
        for (int c = 0; c < nc; ++c) weights[c] = 1;
    } else {
        // φ(v) = total original length of boundary edges at v
        std::vector<Weight> phi(base.n, 0);
        for (int ei : region.boundary_edge_ids) {
            phi[base.edges[ei].u] += base.edges[ei].length;
            phi[base.edges[ei].v] += base.edges[ei].length;
        }
        for (int sv = 0; sv < scratch_n; ++sv) {
            if (sv < nc) {
                for (int bv : comps[sv]) weights[sv] += phi[bv];
            } else if (bmask[base_of_scratch[sv]]) {
                weights[sv] = phi[base_of_scratch[sv]];
            }
        }
    }

    PlanarEmbedding emb = embed_planar(scratch);
    Separator sep = lc_separator(scratch, emb, weights, budget);
    if (audit) {
        LCMST_CHECK(sep.path_length <= 4 * budget, "separator length bound violated");
        LCMST_CHECK(sep.path_weight <= 4 * lc_diameter(scratch, budget),
                    "separator weight bound violated");
    }

    // map the classification back to base edges
    SplitResult out;
    std::map<int, int> pos_of_edge;  // base edge -> index in region.edge_ids
    for (size_t i = 0; i < region.edge_ids.size(); ++i)
        pos_of_edge[region.edge_ids[i]] = static_cast<int>(i);
    out.fate.assign(region.edge_ids.size(), EdgeFate::Inside);

    std::vector<char> on_path_scratch(scratch.m(), 0);
    for (int pe : sep.path_edges) on_path_scratch[pe] = 1;

    auto fate_of_side = [](Side s) {
        return s == Side::Inside ? EdgeFate::Inside : EdgeFate::Outside;
    };

    std::vector<EdgeFate> scratch_fate(scratch.m(), EdgeFate::Inside);
    for (int se = 0; se < scratch.m(); ++se) {
        if (on_path_scratch[se]) {
            scratch_fate[se] = EdgeFate::OnPath;
        } else if (sep.cycle.edge_side[se] == Side::OnCycle) {
            // a real closing edge: assign to the inside child
            scratch_fate[se] = EdgeFate::Inside;
        } else {
            scratch_fate[se] = fate_of_side(sep.cycle.edge_side[se]);
        }
        int be = scratch_base_edge[se];
        out.fate[pos_of_edge[be]] = scratch_fate[se];
        if (scratch_fate[se] == EdgeFate::OnPath) {
            out.path_base_edges.push_back(be);
            out.path_length += base.edges[be].length;
            out.path_weight += base.edges[be].weight;
        }
    }
    // dropped parallels follow their kept sibling, path siblings lean inside
    for (auto& [se, base_list] : dropped_base_by_scratch) {
        EdgeFate f = scratch_fate[se];
        if (f == EdgeFate::OnPath) f = EdgeFate::Inside;
        for (int be : base_list) out.fate[pos_of_edge[be]] = f;
    }
    // intra-component boundary edges follow their component's node
    for (int be : selfloop_base_edges) {
        int bv = base.edges[be].u;
        int snode = comp_of_base[bv];
        LCMST_CHECK(snode >= 0, "self-loop outside a contracted component");
        Side s = sep.cycle.vertex_side[snode];
        out.fate[pos_of_edge[be]] =
            s == Side::OnCycle ? EdgeFate::Shared : fate_of_side(s);
    }
    return out;
}

struct DivideState {
    const Graph& base;
    const std::vector<Weight>& vertex_weights;
    DivisionParams params;
    Weight parent_nonbound_weight = 0;
    Weight weight_target = 0;  // floor(parent/alpha) as exact bound numerator check
    int scheduled_levels = 0;
    std::vector<Region> out;
    int separators = 0;
    Weight separator_weight = 0;
};

bool weight_target_met(const DivideState& st, Weight w) {
    // w <= parent/alpha  <=>  w * alpha.num <= parent * alpha.den ... careful:
    // alpha = num/den, condition w <= parent * den / num
    return static_cast<__int128>(w) * st.params.alpha.num <=
           static_cast<__int128>(st.parent_nonbound_weight) * st.params.alpha.den;
}

void divide_rec(DivideState& st, Region region, int consumed, int regime) {
    const Graph& base = st.base;
    Weight nb_weight = region.nonboundary_weight(base, st.vertex_weights);
    Length len_ceiling = st.params.effective_len_ceiling();
    Length early_len = (2 * len_ceiling) / 3;
    int early_comp = (2 * st.params.comp_ceiling) / 3;

    auto verts = region.vertices(base);
    bool weight_ok = weight_target_met(st, nb_weight);
    bool len_ok = region.boundary_length(base) <= early_len;
    bool comp_ok = region.boundary_component_count(base) <= early_comp;

    if (weight_ok && len_ok && comp_ok) {
        st.out.push_back(std::move(region));
        return;
    }
    if (nb_weight == 0 && len_ok && comp_ok) {
        st.out.push_back(std::move(region));
        return;
    }
    if (verts.size() <= 2) {
        // degenerate: no cycle separator exists; cover everything as boundary
        region.boundary_edge_ids = region.edge_ids;
        st.out.push_back(std::move(region));
        return;
    }
    int max_levels = st.scheduled_levels + st.params.extra_levels;
    if (consumed >= max_levels) {
        st.out.push_back(std::move(region));  // audited later; should not trigger
        return;
    }
    if (consumed >= st.scheduled_levels) {
        // repair rounds: target whichever ceiling is still violated
        regime = !len_ok ? 2 : 1;
    }

    // skip zero-weight regimes without consuming a level
    auto regime_weight = [&](int r) -> Weight {
        if (r == 0) return nb_weight;
        if (r == 1) return region.boundary_component_count(base);
        Weight phi = 0;
        for (int ei : region.boundary_edge_ids) phi += 2 * base.edges[ei].length;
        return phi;
    };
    int chosen = -1;
    for (int i = 0; i < 3; ++i) {
        int r = (regime + i) % 3;
        if (regime_weight(r) > 0) {
            chosen = r;
            break;
        }
    }
    if (chosen < 0) {
        st.out.push_back(std::move(region));
        return;
    }

    SplitResult split =
        split_region(base, region, st.vertex_weights, chosen, st.params.budget, st.params.audit);
    st.separators++;
    st.separator_weight += split.path_weight;

    std::set<int> boundary_old(region.boundary_edge_ids.begin(), region.boundary_edge_ids.end());
    Region child_a, child_b;
    for (size_t i = 0; i < region.edge_ids.size(); ++i) {
        int be = region.edge_ids[i];
        bool old_b = boundary_old.count(be) > 0;
        switch (split.fate[i]) {
            case EdgeFate::OnPath:
                child_a.edge_ids.push_back(be);
                child_b.edge_ids.push_back(be);
                child_a.boundary_edge_ids.push_back(be);
                child_b.boundary_edge_ids.push_back(be);
                break;
            case EdgeFate::Shared:
                child_a.edge_ids.push_back(be);
                child_b.edge_ids.push_back(be);
                if (old_b) {
                    child_a.boundary_edge_ids.push_back(be);
                    child_b.boundary_edge_ids.push_back(be);
                }
                break;
            case EdgeFate::Inside:
                child_a.edge_ids.push_back(be);
                if (old_b) child_a.boundary_edge_ids.push_back(be);
                break;
            case EdgeFate::Outside:
                child_b.edge_ids.push_back(be);
                if (old_b) child_b.boundary_edge_ids.push_back(be);
                break;
        }
    }

    if (child_b.edge_ids.empty() || child_a.edge_ids == child_b.edge_ids) {
        divide_rec(st, std::move(child_a), consumed + 1, (chosen + 1) % 3);
        return;
    }
    if (child_a.edge_ids.empty()) {
        divide_rec(st, std::move(child_b), consumed + 1, (chosen + 1) % 3);
        return;
    }
    divide_rec(st, std::move(child_a), consumed + 1, (chosen + 1) % 3);
    divide_rec(st, std::move(child_b), consumed + 1, (chosen + 1) % 3);
}

}  // namespace

// smallest k with (3/2)^k >= alpha
static int levels_for_alpha(const Rational& alpha) {
    if (alpha.num <= alpha.den) return 1;
    __int128 p = 1, q = 1;
    for (int k = 1; k <= 120; ++k) {
        p *= 3;
        q *= 2;
        if (p * alpha.den >= q * alpha.num) return k;
    }
    throw InternalError("levels_for_alpha did not converge");
}

Division lc_division(const Graph& base, const Region& region,
                     const std::vector<Weight>& vertex_weights, const DivisionParams& params) {
    DivideState st{base, vertex_weights, params, 0, 0, 0, {}, 0, 0};
    st.parent_nonbound_weight = region.nonboundary_weight(base, vertex_weights);
    st.scheduled_levels = 3 * levels_for_alpha(params.alpha);
    divide_rec(st, region, 0, 0);
    Division div;
    div.children = std::move(st.out);
    div.separators_used = st.separators;
    div.separator_weight = st.separator_weight;
    return div;
}

std::pair<std::vector<int>, Weight> restriction(const Graph& base,
                                                const std::vector<int>& tree_edges,
                                                const Region& region) {
    std::set<int> in_region(region.edge_ids.begin(), region.edge_ids.end());
    std::set<int> in_boundary(region.boundary_edge_ids.begin(), region.boundary_edge_ids.end());
    std::vector<int> out;
    Weight w = 0;
    for (int te : tree_edges) {
        if (in_region.count(te) && !in_boundary.count(te)) {
            out.push_back(te);
            w += base.edges[te].weight;
        }
    }
    return {out, w};
}

Hierarchy build_hierarchy(const Graph& base, const HierarchyParams& params,
                          std::vector<Weight> vertex_weights) {
    if (vertex_weights.empty()) vertex_weights.assign(base.n, 1);
    LCMST_CHECK(static_cast<int>(vertex_weights.size()) == base.n, "weight vector size mismatch");

    Hierarchy hier;
    hier.base = base;
    hier.budget = 2 * params.h;

    DivisionParams dp = params.division;
    dp.alpha = params.alpha;
    dp.budget = 2 * params.h;
    if (dp.len_ceiling == 0) dp.len_ceiling = 36 * params.h;

    Region root;
    root.edge_ids.resize(base.m());
    for (int i = 0; i < base.m(); ++i) root.edge_ids[i] = i;
    hier.nodes.push_back({root, -1, {}, 0, {}});

    std::queue<int> todo;
    todo.push(0);
    while (!todo.empty()) {
        int id = todo.front();
        todo.pop();
        const Region& reg = hier.nodes[id].region;
        if (reg.nonboundary_weight(base, vertex_weights) == 0) continue;  // leaf
        Division div = lc_division(base, reg, vertex_weights, dp);
        for (Region& child : div.children) {
            Hierarchy::Node node;
            node.region = std::move(child);
            node.parent = id;
            node.depth = hier.nodes[id].depth + 1;
            int cid = static_cast<int>(hier.nodes.size());
            hier.nodes.push_back(std::move(node));
            hier.nodes[id].children.push_back(cid);
            hier.depth = std::max(hier.depth, hier.nodes[cid].depth);
            todo.push(cid);
        }
    }
    return hier;
}

std::vector<int> Hierarchy::all_boundary_edges() const {
    std::set<int> out;
    for (const Node& nd : nodes)
        out.insert(nd.region.boundary_edge_ids.begin(), nd.region.boundary_edge_ids.end());
    return {out.begin(), out.end()};
}

std::string hierarchy_to_json(const Hierarchy& hier) {
    using nlohmann::ordered_json;
    ordered_json root;
    root["budget"] = hier.budget;
    root["depth"] = hier.depth;
    root["nodes"] = ordered_json::array();
    for (size_t i = 0; i < hier.nodes.size(); ++i) {
        const auto& nd = hier.nodes[i];
        ordered_json jn;
        jn["id"] = i;
        jn["parent"] = nd.parent;
        jn["depth"] = nd.depth;
        jn["edges"] = nd.region.edge_ids;
        jn["boundary_edges"] = nd.region.boundary_edge_ids;
        jn["boundary_length"] = nd.region.boundary_length(hier.base);
        jn["boundary_components"] = nd.region.boundary_component_count(hier.base);
        jn["children"] = nd.children;
        if (!nd.pieces.empty()) jn["pieces"] = nd.pieces;
        root["nodes"].push_back(std::move(jn));
    }
    return root.dump(2);
}

}  // namespace lcmst
