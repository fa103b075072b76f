#include "lcmst/assembler.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "lcmst/lc_metrics.hpp"

namespace lcmst {

AssemblerParams params_from_epsilon(double epsilon, int n) {
    AssemblerParams p;
    double xi = epsilon / 2.0;
    double logn = std::log2(std::max(n, 2));
    double loglogn = std::log2(std::max(logn, 2.0));
    double alpha = std::pow(logn, xi);
    double beta = logn / (xi * xi * loglogn);
    // desk-scale clamps; the asymptotic settings degenerate at small n
    alpha = std::min(std::max(alpha, 1.5), static_cast<double>(std::max(n, 2)));
    beta = std::min(std::max(beta, 1.0), 8.0);
    p.alpha = Rational(static_cast<std::int64_t>(std::lround(alpha * 4)), 4);
    p.beta = static_cast<std::int64_t>(std::lround(beta));
    p.delta = std::max(xi, 0.25);
    return p;
}

std::vector<Guess> enumerate_guesses(const std::vector<std::vector<int>>& pieces,
                                     std::int64_t beta, Length h_scaled, bool steiner_bits,
                                     std::uint64_t budget, const std::string& region_name,
                                     const std::vector<Length>& piece_lower_bounds) {
    const size_t p = pieces.size();
    // unpruned count per the contract: beta^p, doubled per piece with bits
    long double count = 1;
    for (size_t i = 0; i < p; ++i) {
        count *= static_cast<long double>(beta);
        if (steiner_bits) count *= 2;
        if (count > static_cast<long double>(budget))
            throw GuessBudgetError(region_name, static_cast<std::uint64_t>(count));
    }

    LCMST_CHECK(h_scaled % beta == 0, "scaled bound must be divisible by beta");
    Length step = h_scaled / beta;  // h/beta in scaled units

    // per-piece admissible grid values (pruned by the SPT lower bound)
    std::vector<std::vector<Length>> options(p);
    for (size_t i = 0; i < p; ++i) {
        Length lb = piece_lower_bounds.empty() ? 0 : piece_lower_bounds[i];
        for (std::int64_t k = 1; k <= beta; ++k) {
            Length val = k * step;
            if (val >= lb) options[i].push_back(val);
        }
        if (options[i].empty()) options[i].push_back(h_scaled);  // beyond reach; DP will fail it
    }

    std::vector<Guess> out;
    Guess cur;
    cur.values.assign(p, 0);
    if (steiner_bits) cur.used.assign(p, 1);
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == p) {
            out.push_back(cur);
            return;
        }
        if (steiner_bits) {
            cur.used[idx] = 1;
            for (Length v : options[idx]) {
                cur.values[idx] = v;
                rec(idx + 1);
            }
            cur.used[idx] = 0;
            cur.values[idx] = h_scaled;
            rec(idx + 1);
            cur.used[idx] = 1;
        } else {
            for (Length v : options[idx]) {
                cur.values[idx] = v;
                rec(idx + 1);
            }
        }
    };
    rec(0);
    return out;
}

FGraph build_F(const Graph& scaled_base, const Hierarchy& hier, int parent_id, int child_id,
               const Guess& g_parent, const Guess& g_child, Length h_scaled, std::int64_t beta) {
    const auto& parent = hier.nodes[parent_id];
    const auto& child = hier.nodes[child_id];
    LCMST_CHECK(child.parent == parent_id, "build_F: not a hierarchy child");
    LCMST_CHECK(g_parent.values.size() == parent.pieces.size() &&
                    g_child.values.size() == child.pieces.size(),
                "piece/guess arity mismatch");

    FGraph fg;
    std::vector<int> local_of(scaled_base.n, -1);
    auto local = [&](int bv) {
        if (local_of[bv] < 0) {
            local_of[bv] = fg.instance.graph.n++;
            fg.to_base_vertex.push_back(bv);
        }
        return local_of[bv];
    };

    std::set<int> bl(parent.region.boundary_edge_ids.begin(),
                     parent.region.boundary_edge_ids.end());
    std::set<int> blc(child.region.boundary_edge_ids.begin(),
                      child.region.boundary_edge_ids.end());

    for (int ei : parent.region.edge_ids) {
        const Edge& e = scaled_base.edges[ei];
        bool zero_weight = bl.count(ei) || blc.count(ei);
        int lu = local(e.u), lv = local(e.v);
        fg.instance.graph.add_edge(lu, lv, e.length, zero_weight ? 0 : e.weight);
        fg.to_base_edge.push_back(ei);
        if (!zero_weight) fg.projectable.push_back(fg.instance.graph.m() - 1);
    }

    bool is_top = parent_id == 0;
    int rt;
    if (is_top) {
        // the root is the real root; the only parent piece is {r}; X = ∅
        LCMST_CHECK(parent.pieces.size() == 1 && parent.pieces[0].size() == 1,
                    "top region must carry the single piece {r}");
        rt = local(parent.pieces[0][0]);
    } else {
        rt = fg.instance.graph.n++;
        fg.to_base_vertex.push_back(-1);
        for (size_t i = 0; i < parent.pieces.size(); ++i) {
            if (!g_parent.used.empty() && !g_parent.used[i]) continue;
            for (int bv : parent.pieces[i]) {
                fg.instance.graph.add_edge(rt, local(bv), g_parent.values[i], 0);
                fg.to_base_edge.push_back(-1);
            }
        }
    }
    fg.instance.root = rt;

    for (size_t i = 0; i < child.pieces.size(); ++i) {
        if (!g_child.used.empty() && !g_child.used[i]) continue;
        int t = fg.instance.graph.n++;
        fg.to_base_vertex.push_back(-1);
        fg.instance.terminals.push_back(t);
        for (int bv : child.pieces[i]) {
            fg.instance.graph.add_edge(t, local(bv), h_scaled - g_child.values[i], 0);
            fg.to_base_edge.push_back(-1);
        }
    }

    LCMST_CHECK(h_scaled % beta == 0, "scaled bound must be divisible by beta");
    fg.instance.h = h_scaled + h_scaled / beta;
    return fg;
}

namespace {

struct DpContext {
    const Graph& base;
    const Hierarchy& hier;
    Length h_scaled;
    const AssemblerParams& params;
    int levels;
    DpTable table;
    // (child id, parent guess idx, child guess idx) -> projected result
    std::map<std::tuple<int, int, int>, std::optional<LcstResult>> lcst_cache;

    std::optional<LcstResult> lcst_for(int child_id, int pg, int cg) {
        auto key = std::make_tuple(child_id, pg, cg);
        auto it = lcst_cache.find(key);
        if (it != lcst_cache.end()) return it->second;

        int parent_id = hier.nodes[child_id].parent;
        FGraph fg = build_F(base, hier, parent_id, child_id, table.guesses[parent_id][pg],
                            table.guesses[child_id][cg], h_scaled, params.beta);
        ++table.lcst_calls;
        auto sol = lcst_approx_levels(fg.instance, levels);
        std::optional<LcstResult> projected;
        if (sol) {
            // LCST*: restrict to E(H) \ (E(L) ∪ E(L')), in base edge ids
            std::set<int> proj(fg.projectable.begin(), fg.projectable.end());
            LcstResult pr;
            std::set<int> sol_edges(sol->edge_ids.begin(), sol->edge_ids.end());
            for (int le : fg.projectable)
                if (sol_edges.count(le)) {
                    pr.edge_ids.push_back(fg.to_base_edge[le]);
                    pr.weight += base.edges[fg.to_base_edge[le]].weight;
                }
            if (params.audit) {
                // only projectable edges carry weight in F
                Weight wsol = 0;
                for (int le : sol->edge_ids) wsol += fg.instance.graph.edges[le].weight;
                LCMST_CHECK(wsol == pr.weight, "weight outside the projection");
            }
            projected = std::move(pr);
        }
        lcst_cache[key] = projected;
        return projected;
    }
};

}  // namespace

DpTable solve_dp(const Graph& scaled_base, const Hierarchy& hier, Length h_scaled,
                 const AssemblerParams& params) {
    int levels = params.delta >= 1.0 ? 1 : static_cast<int>(std::ceil(1.0 / params.delta));
    DpContext ctx{scaled_base, hier, h_scaled, params, levels, {}, {}};
    const size_t N = hier.nodes.size();
    ctx.table.guesses.resize(N);
    ctx.table.cells.resize(N);

    // guess lists; SPT lower bounds prune values that cannot be correct
    LCMST_CHECK(!hier.nodes[0].pieces.empty() && hier.nodes[0].pieces[0].size() == 1,
                "solve_dp needs the root piece {r} filled in");
    int root_vertex = hier.nodes[0].pieces[0][0];
    SpTree spt = length_sp_tree(scaled_base, root_vertex);
    for (size_t i = 0; i < N; ++i) {
        const auto& nd = hier.nodes[i];
        if (i == 0) {
            Guess g0;
            g0.values = {0};
            if (params.steiner) g0.used = {1};
            ctx.table.guesses[0] = {g0};
            continue;
        }
        std::vector<Length> lbs;
        for (const auto& piece : nd.pieces) {
            Length lb = kInfLength;
            for (int v : piece) lb = std::min(lb, spt.dist[v]);
            lbs.push_back(lb);
        }
        ctx.table.guesses[i] =
            enumerate_guesses(nd.pieces, params.beta, h_scaled, params.steiner,
                              params.guess_budget, "node" + std::to_string(i), lbs);
        ctx.table.guesses_evaluated += static_cast<std::int64_t>(ctx.table.guesses[i].size());
    }

    // bottom-up: children have larger ids than parents by construction
    for (size_t i = N; i-- > 0;) {
        const auto& nd = hier.nodes[i];
        auto& cells = ctx.table.cells[i];
        cells.assign(ctx.table.guesses[i].size(), {});
        if (nd.children.empty()) {
            for (auto& c : cells) {
                c.weight = 0;
                c.edge_ids.clear();
            }
            continue;
        }
        for (size_t gi = 0; gi < ctx.table.guesses[i].size(); ++gi) {
            DpCell cell;
            cell.weight = 0;
            std::set<int> edges;
            for (int child : nd.children) {
                Weight best = kInfWeight;
                int best_cg = -1;
                LcstResult best_lcst;
                for (size_t cg = 0; cg < ctx.table.guesses[child].size(); ++cg) {
                    const DpCell& ccell = ctx.table.cells[child][cg];
                    if (is_inf(ccell.weight)) continue;
                    auto lc = ctx.lcst_for(child, static_cast<int>(gi), static_cast<int>(cg));
                    if (!lc) continue;
                    Weight total = sat_add(ccell.weight, lc->weight);
                    if (total < best) {
                        best = total;
                        best_cg = static_cast<int>(cg);
                        best_lcst = *lc;
                    }
                }
                if (best_cg < 0) {
                    cell.weight = kInfWeight;
                    cell.edge_ids.clear();
                    break;
                }
                cell.weight = sat_add(cell.weight, best);
                const DpCell& chosen = ctx.table.cells[child][best_cg];
                edges.insert(chosen.edge_ids.begin(), chosen.edge_ids.end());
                edges.insert(best_lcst.edge_ids.begin(), best_lcst.edge_ids.end());
            }
            if (!is_inf(cell.weight)) cell.edge_ids.assign(edges.begin(), edges.end());
            cells[gi] = std::move(cell);
        }
    }
    return ctx.table;
}

RunResult run_main(const Instance& inst, const AssemblerParams& params) {
    LCMST_CHECK(params.beta >= 1, "beta must be >= 1");
    bool steiner = params.steiner || inst.kind == ProblemKind::LCST;
    AssemblerParams p = params;
    p.steiner = steiner;

    Graph base = graph_of(inst);
    if (!base.connected()) throw DisconnectedError();

    // feasibility: every (terminal) vertex within h by length
    {
        SpTree spt = length_sp_tree(base, inst.root);
        if (steiner) {
            for (int t : inst.terminals)
                if (spt.dist[t] > inst.h)
                    throw InfeasibleInstanceError("terminal beyond length h from root");
        } else {
            for (int v = 0; v < base.n; ++v)
                if (spt.dist[v] > inst.h)
                    throw InfeasibleInstanceError("vertex beyond length h from root");
        }
    }

    // pre-scale lengths by beta so guesses and budgets stay integral
    Graph scaled = base;
    for (Edge& e : scaled.edges) e.length *= p.beta;
    Length h_scaled = inst.h * p.beta;

    std::vector<Weight> weights;
    if (steiner) {
        weights.assign(base.n, 0);
        for (int t : inst.terminals) weights[t] = 1;
    }

    HierarchyParams hp;
    hp.alpha = p.alpha;
    hp.h = h_scaled;
    hp.division = p.division;
    Hierarchy hier = build_hierarchy(scaled, hp, weights);

    // boundary pieces: root carries the single piece {r}; other nodes get the
    // low-diameter partition with per-component beta lifted so every piece
    // has induced diameter <= h (scaled), i.e. h/beta in original units
    hier.nodes[0].pieces = {{inst.root}};
    for (size_t i = 1; i < hier.nodes.size(); ++i) {
        hier.nodes[i].pieces = partition_edge_set_pieces(
            scaled, hier.nodes[i].region.boundary_edge_ids, Rational(p.beta),
            h_scaled, p.beta);
    }

    DpTable dp = solve_dp(scaled, hier, h_scaled, p);
    if (dp.cells[0].empty() || is_inf(dp.cells[0][0].weight))
        throw InfeasibleInstanceError("dynamic program found no feasible assembly");

    // union: all hierarchy boundaries plus the DP's edges at the root cell
    std::set<int> chosen(dp.cells[0][0].edge_ids.begin(), dp.cells[0][0].edge_ids.end());
    Weight dp_weight = dp.cells[0][0].weight;
    Weight boundary_weight = 0;
    for (int ei : hier.all_boundary_edges()) {
        if (!chosen.count(ei)) boundary_weight += base.edges[ei].weight;
        chosen.insert(ei);
    }
    std::vector<int> union_edges(chosen.begin(), chosen.end());

    // length-SPT of the union, rooted at r (scaled lengths)
    SpTree spt = length_sp_tree(scaled, inst.root, union_edges);
    RunResult out;
    out.depth = hier.depth;
    out.guesses_evaluated = dp.guesses_evaluated;
    out.lcst_calls = dp.lcst_calls;
    out.boundary_weight = boundary_weight;
    out.dp_weight = dp_weight;

    if (steiner) {
        // keep only the root paths of terminals
        std::set<int> keep;
        for (int t : inst.terminals) {
            LCMST_CHECK(!is_inf(spt.dist[t]), "terminal disconnected in the assembled union");
            for (int v = t; spt.parent[v] >= 0; v = spt.parent[v]) keep.insert(spt.parent_edge[v]);
        }
        out.tree_edges.assign(keep.begin(), keep.end());
    } else {
        for (int v = 0; v < base.n; ++v) {
            if (v == inst.root) continue;
            LCMST_CHECK(!is_inf(spt.dist[v]), "assembled union does not span the graph");
            out.tree_edges.push_back(spt.parent_edge[v]);
        }
        std::sort(out.tree_edges.begin(), out.tree_edges.end());
    }

    for (int ei : out.tree_edges) out.weight += base.edges[ei].weight;
    Length max_scaled = 0;
    if (steiner) {
        for (int t : inst.terminals) max_scaled = std::max(max_scaled, spt.dist[t]);
    } else {
        for (int v = 0; v < base.n; ++v) max_scaled = std::max(max_scaled, spt.dist[v]);
    }
    out.max_root_distance = max_scaled / p.beta;
    out.slack = inst.h > 0 ? static_cast<double>(max_scaled) /
                                 (static_cast<double>(inst.h) * static_cast<double>(p.beta))
                           : 0.0;
    // hard guarantee, exact in scaled integers: d' <= h*beta + 2*h*depth
    out.slack_bound_num = inst.h * p.beta + 2 * inst.h * out.depth;
    LCMST_CHECK(max_scaled <= out.slack_bound_num,
                "output tree violates the length-slack guarantee");
    return out;
}

}  // namespace lcmst
