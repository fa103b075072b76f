#include "lcmst/generator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "lcmst/embedding.hpp"
#include "lcmst/lc_metrics.hpp"

namespace lcmst {

GeneratorKind generator_kind_of(const std::string& name) {
    if (name == "grid") return GeneratorKind::Grid;
    if (name == "triangulated-random") return GeneratorKind::TriangulatedRandom;
    if (name == "stacked-triangulation") return GeneratorKind::StackedTriangulation;
    if (name == "gadget-fig1-analog") return GeneratorKind::GadgetFig1Analog;
    if (name == "gst-gadget") return GeneratorKind::GstGadget;
    throw ValidationError("unknown generator kind: " + name);
}

std::string generator_kind_name(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::Grid: return "grid";
        case GeneratorKind::TriangulatedRandom: return "triangulated-random";
        case GeneratorKind::StackedTriangulation: return "stacked-triangulation";
        case GeneratorKind::GadgetFig1Analog: return "gadget-fig1-analog";
        case GeneratorKind::GstGadget: return "gst-gadget";
    }
    return "?";
}

std::string GeneratorConfig::describe() const {
    std::ostringstream os;
    os << generator_kind_name(kind) << "-n" << n << "-seed" << seed;
    if (adversarial) os << "-adv";
    if (infeasible) os << "-inf";
    return os.str();
}

namespace {

void draw_costs(Instance& inst, const GeneratorConfig& cfg, Rng& rng) {
    for (Edge& e : inst.edges) {
        e.length = rng.uniform(cfg.min_length, cfg.max_length);
        if (cfg.adversarial) {
            // low weight goes with high length: the regime where a pure
            // length- or weight-shortest tree is a bad answer
            double frac = cfg.max_length > cfg.min_length
                              ? static_cast<double>(e.length - cfg.min_length) /
                                    static_cast<double>(cfg.max_length - cfg.min_length)
                              : 0.0;
            Weight span = cfg.max_weight - cfg.min_weight;
            e.weight = cfg.min_weight + static_cast<Weight>(std::llround((1.0 - frac) * span));
            e.weight += rng.uniform(0, std::max<Weight>(1, span / 4));
            e.weight = std::min(e.weight, cfg.max_weight);
        } else {
            e.weight = rng.uniform(cfg.min_weight, cfg.max_weight);
        }
    }
}

void set_h(Instance& inst, const GeneratorConfig& cfg) {
    Graph g = graph_of(inst);
    SpTree spt = length_sp_tree(g, inst.root);
    Length ecc = 0;
    for (int v = 0; v < g.n; ++v) {
        LCMST_CHECK(!is_inf(spt.dist[v]), "generator produced a disconnected graph");
        ecc = std::max(ecc, spt.dist[v]);
    }
    if (cfg.infeasible) {
        inst.h = std::max<Length>(1, ecc - 1);
        if (inst.h >= ecc) inst.h = 1;  // all-zero eccentricity: cannot force
    } else {
        inst.h = std::max<Length>(1, static_cast<Length>(std::ceil(
                                         cfg.h_factor * static_cast<double>(std::max<Length>(
                                                            ecc, 1)))));
    }
}

Instance make_grid(const GeneratorConfig& cfg, Rng& rng) {
    // nearly-square R x C grid with n = R*C >= cfg.n
    int rows = std::max(1, static_cast<int>(std::floor(std::sqrt(static_cast<double>(cfg.n)))));
    int cols = (cfg.n + rows - 1) / rows;
    Instance inst;
    inst.kind = ProblemKind::LCMST;
    inst.n = rows * cols;
    auto id = [&](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) inst.edges.push_back({id(r, c), id(r, c + 1), 1, 1});
            if (r + 1 < rows) inst.edges.push_back({id(r, c), id(r + 1, c), 1, 1});
        }
    inst.root = 0;
    draw_costs(inst, cfg, rng);
    return inst;
}

// Apollonian growth: repeatedly split a random face of a triangle into three
Instance make_stacked(const GeneratorConfig& cfg, Rng& rng, bool flips, double keep_prob) {
    int n = std::max(3, cfg.n);
    Instance inst;
    inst.kind = ProblemKind::LCMST;
    inst.n = n;
    std::set<std::pair<int, int>> eset;
    auto add = [&](int a, int b) {
        auto key = std::make_pair(std::min(a, b), std::max(a, b));
        if (eset.insert(key).second) inst.edges.push_back({key.first, key.second, 1, 1});
    };
    std::vector<std::array<int, 3>> faces{{0, 1, 2}};
    add(0, 1);
    add(1, 2);
    add(0, 2);
    for (int v = 3; v < n; ++v) {
        size_t fi = static_cast<size_t>(rng.uniform(0, static_cast<std::int64_t>(faces.size()) - 1));
        auto [a, b, c] = faces[fi];
        faces.erase(faces.begin() + static_cast<long>(fi));
        add(v, a);
        add(v, b);
        add(v, c);
        faces.push_back({v, a, b});
        faces.push_back({v, b, c});
        faces.push_back({v, a, c});
    }
    if (flips) {
        // random diagonal flips for variety, keeping a planar triangulation
        std::map<std::pair<int, int>, std::vector<int>> tri_of_edge;  // edge -> third corners
        auto rebuild = [&]() {
            tri_of_edge.clear();
            for (auto [a, b, c] : faces) {
                auto put = [&](int x, int y, int z) {
                    tri_of_edge[{std::min(x, y), std::max(x, y)}].push_back(z);
                };
                put(a, b, c);
                put(b, c, a);
                put(a, c, b);
            }
        };
        rebuild();
        int attempts = n;
        while (attempts-- > 0) {
            if (inst.edges.empty()) break;
            size_t ei = static_cast<size_t>(
                rng.uniform(0, static_cast<std::int64_t>(inst.edges.size()) - 1));
            int a = inst.edges[ei].u, b = inst.edges[ei].v;
            auto it = tri_of_edge.find({a, b});
            if (it == tri_of_edge.end() || it->second.size() != 2) continue;
            int c = it->second[0], d = it->second[1];
            if (c == d || eset.count({std::min(c, d), std::max(c, d)})) continue;
            // flip (a,b) -> (c,d)
            eset.erase({a, b});
            inst.edges.erase(inst.edges.begin() + static_cast<long>(ei));
            add(c, d);
            std::vector<std::array<int, 3>> nf;
            for (auto f : faces) {
                std::set<int> fs(f.begin(), f.end());
                if (fs.count(a) && fs.count(b) && (fs.count(c) || fs.count(d))) continue;
                nf.push_back(f);
            }
            nf.push_back({a, c, d});
            nf.push_back({b, c, d});
            faces = std::move(nf);
            rebuild();
        }
    }
    if (keep_prob < 1.0) {
        // sparsify while keeping the graph connected
        std::vector<Edge> kept;
        for (size_t i = 0; i < inst.edges.size(); ++i) {
            if (rng.coin(keep_prob)) {
                kept.push_back(inst.edges[i]);
                continue;
            }
            Graph g;
            g.n = inst.n;
            g.edges = kept;
            for (size_t j = i + 1; j < inst.edges.size(); ++j) g.edges.push_back(inst.edges[j]);
            if (!g.connected()) kept.push_back(inst.edges[i]);
        }
        inst.edges = std::move(kept);
    }
    inst.root = 0;
    draw_costs(inst, cfg, rng);
    return inst;
}

// Five-vertex gadget on which no spanning tree is simultaneously h-length
// and h-length-shortest from the root: the cheap routes to a and b traverse
// the shared s-t corridor in opposite directions.
Instance make_fig1_analog(const GeneratorConfig& cfg, Rng& rng) {
    Weight big = std::max<Weight>(2, rng.uniform(2, std::max<Weight>(2, cfg.max_weight)));
    Length h = 4;
    Instance inst;
    inst.kind = ProblemKind::LCMST;
    inst.n = 5;  // r=0, s=1, t=2, a=3, b=4
    inst.root = 0;
    inst.h = h;
    inst.edges = {
        {0, 1, 3, 0},    // r-s
        {0, 2, 0, big},  // r-t
        {1, 2, 0, 0},    // s-t corridor
        {2, 3, 1, 0},    // t-a
        {1, 4, 2, 0},    // s-b
    };
    return inst;
}

Instance make_gst_gadget(const GeneratorConfig& cfg, Rng& rng) {
    // small planar base with k disjoint groups away from the root
    GeneratorConfig base_cfg = cfg;
    base_cfg.kind = GeneratorKind::StackedTriangulation;
    base_cfg.n = std::max(cfg.n, 4);
    Instance inst = make_stacked(base_cfg, rng, false, 1.0);
    inst.kind = ProblemKind::GST;
    int k = std::max(1, std::min(cfg.groups, inst.n / 2 - 1));
    std::vector<int> candidates;
    for (int v = 0; v < inst.n; ++v)
        if (v != inst.root) candidates.push_back(v);
    // deterministic shuffle
    for (size_t i = candidates.size(); i > 1; --i)
        std::swap(candidates[i - 1],
                  candidates[static_cast<size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
    inst.groups.assign(k, {});
    size_t ci = 0;
    for (int gi = 0; gi < k; ++gi) {
        int sz = static_cast<int>(rng.uniform(1, 2));
        for (int j = 0; j < sz && ci < candidates.size(); ++j)
            inst.groups[gi].push_back(candidates[ci++]);
        if (inst.groups[gi].empty()) inst.groups[gi].push_back(candidates[ci++]);
    }
    std::sort(inst.groups.begin(), inst.groups.end());
    inst.h = std::max<Length>(1, inst.h);
    return inst;
}

}  // namespace

Instance generate_instance(const GeneratorConfig& config) {
    Rng rng(config.seed * 0x100000001b3ULL + static_cast<std::uint64_t>(config.kind));
    Instance inst;
    switch (config.kind) {
        case GeneratorKind::Grid:
            inst = make_grid(config, rng);
            set_h(inst, config);
            break;
        case GeneratorKind::TriangulatedRandom:
            inst = make_stacked(config, rng, true, config.keep_edge_prob);
            set_h(inst, config);
            break;
        case GeneratorKind::StackedTriangulation:
            inst = make_stacked(config, rng, false, 1.0);
            set_h(inst, config);
            break;
        case GeneratorKind::GadgetFig1Analog:
            inst = make_fig1_analog(config, rng);
            break;
        case GeneratorKind::GstGadget:
            inst = make_gst_gadget(config, rng);
            break;
    }
    inst.validate();
    return inst;
}

}  // namespace lcmst
