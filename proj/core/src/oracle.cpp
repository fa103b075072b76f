#include "lcmst/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "lcmst/lc_metrics.hpp"

namespace lcmst {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

// connectivity of the graph using chosen edges plus every edge from `from`
bool can_still_span(const Graph& g, const std::vector<int>& chosen, size_t from) {
    Dsu dsu(g.n);
    int merges = 0;
    for (int ei : chosen) merges += dsu.unite(g.edges[ei].u, g.edges[ei].v) ? 1 : 0;
    for (size_t i = from; i < static_cast<size_t>(g.m()); ++i)
        merges += dsu.unite(g.edges[i].u, g.edges[i].v) ? 1 : 0;
    return merges == g.n - 1;
}

}  // namespace

ExactResult exact_lcmst(const Instance& inst, std::int64_t work_cap) {
    const Graph g = graph_of(inst);
    const int n = g.n;
    if (n > 16 && g.m() > 24) throw TooLargeError("exact_lcmst: instance too large");

    ExactResult res;
    res.weight = kInfWeight;
    res.feasible = false;

    // quick infeasibility: some vertex beyond h along shortest lengths
    {
        SpTree spt = length_sp_tree(g, inst.root);
        for (int v = 0; v < n; ++v)
            if (spt.dist[v] > inst.h) {
                res.candidates = 0;
                return res;  // infeasible marker
            }
    }

    std::vector<int> chosen;
    std::int64_t work = 0;
    // distances from root within the partial forest; valid for the root's
    // component only, which never changes as later edges join components
    std::function<void(size_t, Weight)> rec = [&](size_t idx, Weight acc) {
        if (++work > work_cap) throw TooLargeError("exact_lcmst: work cap exceeded");
        if (acc >= res.weight) return;
        if (static_cast<int>(chosen.size()) == n - 1) {
            // a spanning tree; check root distances
            SpTree spt = length_sp_tree(g, inst.root, chosen);
            for (int v = 0; v < n; ++v)
                if (spt.dist[v] > inst.h) return;
            res.weight = acc;
            res.edge_ids = chosen;
            res.feasible = true;
            ++res.candidates;
            return;
        }
        if (idx == static_cast<size_t>(g.m())) return;
        // prune: not enough edges left
        if (static_cast<int>(chosen.size()) + static_cast<int>(g.m() - idx) < n - 1) return;

        // include edge idx if it keeps the forest acyclic
        {
            Dsu dsu(n);
            bool acyclic = true;
            for (int ei : chosen) dsu.unite(g.edges[ei].u, g.edges[ei].v);
            if (dsu.find(g.edges[idx].u) == dsu.find(g.edges[idx].v)) acyclic = false;
            if (acyclic) {
                chosen.push_back(static_cast<int>(idx));
                // partial distance pruning: the root component's distances
                // are final once connected
                SpTree spt = length_sp_tree(g, inst.root, chosen);
                bool ok = true;
                {
                    Dsu dsu2(n);
                    for (int ei : chosen) dsu2.unite(g.edges[ei].u, g.edges[ei].v);
                    int rc = dsu2.find(inst.root);
                    for (int v = 0; v < n && ok; ++v)
                        if (dsu2.find(v) == rc && spt.dist[v] > inst.h) ok = false;
                }
                if (ok) rec(idx + 1, acc + g.edges[idx].weight);
                chosen.pop_back();
            }
        }
        // exclude edge idx if spanning is still possible
        if (can_still_span(g, chosen, idx + 1)) rec(idx + 1, acc);
    };
    rec(0, 0);
    res.candidates = work;
    if (is_inf(res.weight)) res.feasible = false;
    return res;
}

ExactResult exact_dst(const Instance& inst, std::int64_t work_cap) {
    LCMST_CHECK(inst.directed, "exact_dst expects a directed instance");
    const int n = inst.n;

    auto reachable_ok = [&](const std::vector<char>& allowed) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{inst.root};
        seen[inst.root] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int ai = 0; ai < inst.m(); ++ai)
                if (allowed[ai] && inst.edges[ai].u == v && !seen[inst.edges[ai].v]) {
                    seen[inst.edges[ai].v] = 1;
                    stack.push_back(inst.edges[ai].v);
                }
        }
        for (int t : inst.terminals)
            if (!seen[t]) return false;
        return true;
    };

    ExactResult res;
    res.weight = kInfWeight;
    res.feasible = false;

    std::vector<int> free_arcs, paid_arcs;
    for (int ai = 0; ai < inst.m(); ++ai)
        (inst.edges[ai].weight == 0 ? free_arcs : paid_arcs).push_back(ai);
    if (paid_arcs.size() > 26) throw TooLargeError("exact_dst: too many positive-weight arcs");

    std::vector<char> allowed(inst.m(), 1);
    if (!reachable_ok(allowed)) return res;  // infeasible

    std::sort(paid_arcs.begin(), paid_arcs.end(),
              [&](int a, int b) { return inst.edges[a].weight > inst.edges[b].weight; });

    std::vector<char> chosen_mask(inst.m(), 0);
    for (int ai : free_arcs) chosen_mask[ai] = 1;
    std::vector<int> chosen_paid;
    std::int64_t work = 0;

    std::function<void(size_t, Weight)> rec = [&](size_t idx, Weight acc) {
        if (++work > work_cap) throw TooLargeError("exact_dst: work cap exceeded");
        if (acc >= res.weight) return;
        if (idx == paid_arcs.size()) {
            if (reachable_ok(chosen_mask)) {
                res.weight = acc;
                res.feasible = true;
                res.edge_ids.clear();
                for (int ai = 0; ai < inst.m(); ++ai)
                    if (chosen_mask[ai]) res.edge_ids.push_back(ai);
            }
            return;
        }
        int arc = paid_arcs[idx];
        chosen_mask[arc] = 1;
        rec(idx + 1, acc + inst.edges[arc].weight);
        chosen_mask[arc] = 0;
        // exclude: feasible with remaining undecided arcs?
        for (size_t j = idx + 1; j < paid_arcs.size(); ++j) chosen_mask[paid_arcs[j]] = 1;
        bool still = reachable_ok(chosen_mask);
        for (size_t j = idx + 1; j < paid_arcs.size(); ++j) chosen_mask[paid_arcs[j]] = 0;
        if (still) rec(idx + 1, acc);
    };
    rec(0, 0);
    res.candidates = work;

    if (res.feasible) {
        // drop free arcs that are not needed
        std::vector<char> mask(inst.m(), 0);
        for (int ai : res.edge_ids) mask[ai] = 1;
        for (int ai : free_arcs) {
            if (!mask[ai]) continue;
            mask[ai] = 0;
            if (!reachable_ok(mask)) mask[ai] = 1;
        }
        res.edge_ids.clear();
        for (int ai = 0; ai < inst.m(); ++ai)
            if (mask[ai]) res.edge_ids.push_back(ai);
    }
    return res;
}

}  // namespace lcmst
