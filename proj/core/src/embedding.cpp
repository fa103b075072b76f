#include "lcmst/embedding.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace lcmst {

// ════════════════════════════════════════════════════════════════════
//  Rotation-system plumbing
// ════════════════════════════════════════════════════════════════════

void PlanarEmbedding::rebuild_positions() {
    rot_pos_.assign(dart_count(), -1);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i)
            rot_pos_[rotation[v][i]] = i;
}

int PlanarEmbedding::face_next(int d) const {
    int t = twin(d);
    int v = head(d);  // == tail(t)
    int i = rot_pos_[t];
    const auto& rot = rotation[v];
    return rot[(i + 1) % rot.size()];
}

std::vector<std::vector<int>> PlanarEmbedding::faces() const {
    std::vector<char> seen(dart_count(), 0);
    std::vector<std::vector<int>> out;
    for (int d = 0; d < dart_count(); ++d) {
        if (seen[d]) continue;
        std::vector<int> walk;
        int cur = d;
        while (!seen[cur]) {
            seen[cur] = 1;
            walk.push_back(cur);
            cur = face_next(cur);
        }
        out.push_back(std::move(walk));
    }
    return out;
}

int PlanarEmbedding::face_count() const { return static_cast<int>(faces().size()); }

void PlanarEmbedding::insert_dart_before(int new_dart, int before_dart) {
    if (static_cast<int>(rot_pos_.size()) < dart_count()) rot_pos_.resize(dart_count(), -1);
    int v = tail(before_dart);
    auto& rot = rotation[v];
    int idx = rot_pos_[before_dart];
    rot.insert(rot.begin() + idx, new_dart);
    for (int i = idx; i < static_cast<int>(rot.size()); ++i) rot_pos_[rot[i]] = i;
}

void PlanarEmbedding::append_dart(int v, int new_dart) {
    if (static_cast<int>(rot_pos_.size()) < dart_count()) rot_pos_.resize(dart_count(), -1);
    rotation[v].push_back(new_dart);
    rot_pos_[new_dart] = static_cast<int>(rotation[v].size()) - 1;
}

void PlanarEmbedding::check_consistency(bool expect_triangulated) const {
    std::vector<int> slot_count(dart_count(), 0);
    long long total_slots = 0;
    for (int v = 0; v < n; ++v) {
        for (int d : rotation[v]) {
            LCMST_CHECK(d >= 0 && d < dart_count(), "dart id out of range");
            LCMST_CHECK(tail(d) == v, "dart in wrong rotation");
            slot_count[d]++;
            ++total_slots;
        }
    }
    for (int d = 0; d < dart_count(); ++d)
        LCMST_CHECK(slot_count[d] == 1, "edge-end must appear in exactly one rotation slot");
    LCMST_CHECK(total_slots == dart_count(), "rotation slot total mismatch");

    auto fs = faces();
    long long side_sum = 0;
    for (const auto& f : fs) {
        side_sum += static_cast<long long>(f.size());
        if (expect_triangulated) LCMST_CHECK(f.size() == 3, "non-triangular face");
    }
    LCMST_CHECK(side_sum == dart_count(), "sum of face sides must be 2|E|");

    Graph g;
    g.n = n;
    g.edges = edges;
    int comps = 0;
    g.component_ids(&comps);
    long long fcount = edges.empty() ? 1 : static_cast<long long>(fs.size());
    long long euler = static_cast<long long>(n) - static_cast<long long>(edges.size()) + fcount;
    LCMST_CHECK(euler == 1 + comps, "Euler's formula violated");
}

// ════════════════════════════════════════════════════════════════════
//  Planarity testing / embedding
// ════════════════════════════════════════════════════════════════════

namespace {

struct Block {
    std::vector<int> vertices;  // global ids
    std::vector<int> edge_ids;  // global edge ids
};

std::vector<Block> biconnected_blocks(const Graph& g) {
    int n = g.n;
    auto adj = g.adjacency();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> estack;
    std::vector<Block> blocks;
    int timer = 0;

    struct Frame {
        int v;
        int parent_edge;
        size_t idx;
    };
    auto pop_block = [&](int until_edge) {
        Block b;
        std::set<int> vs;
        while (!estack.empty()) {
            int ei = estack.back();
            estack.pop_back();
            b.edge_ids.push_back(ei);
            vs.insert(g.edges[ei].u);
            vs.insert(g.edges[ei].v);
            if (ei == until_edge) break;
        }
        std::sort(b.edge_ids.begin(), b.edge_ids.end());
        b.vertices.assign(vs.begin(), vs.end());
        blocks.push_back(std::move(b));
    };

    for (int s = 0; s < n; ++s) {
        if (disc[s] >= 0) continue;
        std::vector<Frame> st{{s, -1, 0}};
        disc[s] = low[s] = timer++;
        while (!st.empty()) {
            Frame& fr = st.back();
            if (fr.idx < adj[fr.v].size()) {
                auto [ei, w] = adj[fr.v][fr.idx++];
                if (ei == fr.parent_edge) continue;
                if (disc[w] < 0) {
                    estack.push_back(ei);
                    disc[w] = low[w] = timer++;
                    st.push_back({w, ei, 0});
                } else if (disc[w] < disc[fr.v]) {
                    estack.push_back(ei);
                    low[fr.v] = std::min(low[fr.v], disc[w]);
                }
            } else {
                Frame done = st.back();
                st.pop_back();
                if (!st.empty()) {
                    Frame& par = st.back();
                    low[par.v] = std::min(low[par.v], low[done.v]);
                    if (low[done.v] >= disc[par.v]) pop_block(done.parent_edge);
                }
            }
        }
    }
    return blocks;
}

// Incremental planar embedding of one biconnected block. Writes rotations
// (global dart ids) into `emb`; returns false if the block is non-planar.
bool embed_block(const Graph& g, const Block& blk, PlanarEmbedding& emb) {
    if (blk.edge_ids.size() == 1) {
        int ei = blk.edge_ids.front();
        emb.append_dart(g.edges[ei].u, 2 * ei);
        emb.append_dart(g.edges[ei].v, 2 * ei + 1);
        return true;
    }

    std::map<int, std::vector<std::pair<int, int>>> adj;  // v -> (edge, other)
    for (int ei : blk.edge_ids) {
        adj[g.edges[ei].u].push_back({ei, g.edges[ei].v});
        adj[g.edges[ei].v].push_back({ei, g.edges[ei].u});
    }
    for (auto& [v, lst] : adj) std::sort(lst.begin(), lst.end());

    std::map<int, std::vector<int>> rot;  // partial rotations, global dart ids
    std::set<int> embedded_v;
    std::set<int> embedded_e;

    auto dart_from = [&](int ei, int from) { return g.edges[ei].u == from ? 2 * ei : 2 * ei + 1; };
    auto dart_tail = [&](int d) { return (d & 1) ? g.edges[d >> 1].v : g.edges[d >> 1].u; };
    auto dart_head = [&](int d) { return (d & 1) ? g.edges[d >> 1].u : g.edges[d >> 1].v; };

    auto local_face_next = [&](int d) {
        int t = d ^ 1;
        int v = dart_head(d);
        const auto& r = rot[v];
        auto it = std::find(r.begin(), r.end(), t);
        LCMST_CHECK(it != r.end(), "twin dart missing from rotation");
        size_t i = static_cast<size_t>(it - r.begin());
        return r[(i + 1) % r.size()];
    };
    auto compute_faces = [&]() {
        std::vector<std::vector<int>> out;
        std::set<int> seen;
        for (auto& [v, r] : rot)
            for (int d : r) {
                if (seen.count(d)) continue;
                std::vector<int> walk;
                int cur = d;
                while (!seen.count(cur)) {
                    seen.insert(cur);
                    walk.push_back(cur);
                    cur = local_face_next(cur);
                }
                out.push_back(std::move(walk));
            }
        return out;
    };

    // Initial cycle found by DFS from the smallest block vertex.
    {
        int start = blk.vertices.front();
        std::map<int, std::pair<int, int>> par;  // v -> (parent, via edge)
        par[start] = {-1, -1};
        std::set<int> visited{start};
        std::vector<std::pair<int, size_t>> st{{start, 0}};
        std::vector<int> cyc_verts;
        bool found = false;
        while (!st.empty() && !found) {
            auto& [v, idx] = st.back();
            if (idx >= adj[v].size()) {
                st.pop_back();
                continue;
            }
            auto [ei, w] = adj[v][idx++];
            if (ei == par[v].second) continue;
            if (!visited.count(w)) {
                visited.insert(w);
                par[w] = {v, ei};
                st.push_back({w, 0});
            } else {
                cyc_verts.clear();
                int cur = v;
                while (cur != w) {
                    cyc_verts.push_back(cur);
                    cur = par[cur].first;
                }
                cyc_verts.push_back(w);
                found = true;
            }
        }
        LCMST_CHECK(found, "biconnected block without a cycle");
        int k = static_cast<int>(cyc_verts.size());
        auto edge_between = [&](int a, int b) {
            for (auto [ei, w] : adj[a])
                if (w == b) return ei;
            throw InternalError("cycle edge lookup failed");
        };
        for (int i = 0; i < k; ++i) {
            int a = cyc_verts[i];
            int nxt = cyc_verts[(i + 1) % k];
            int prv = cyc_verts[(i - 1 + k) % k];
            int e_fwd = edge_between(a, nxt);
            int e_bwd = edge_between(a, prv);
            rot[a] = {dart_from(e_fwd, a), dart_from(e_bwd, a)};
            embedded_e.insert(e_fwd);
            embedded_v.insert(a);
        }
    }

    struct Fragment {
        std::vector<int> attachments;     // embedded vertices, sorted
        std::vector<int> inner_vertices;  // unembedded vertices, sorted
        int key_edge = -1;
    };

    while (true) {
        std::vector<Fragment> frags;
        for (int ei : blk.edge_ids) {
            if (embedded_e.count(ei)) continue;
            int u = g.edges[ei].u, v = g.edges[ei].v;
            if (embedded_v.count(u) && embedded_v.count(v)) {
                Fragment f;
                f.attachments = {std::min(u, v), std::max(u, v)};
                f.key_edge = ei;
                frags.push_back(std::move(f));
            }
        }
        {
            std::set<int> unvisited;
            for (int v : blk.vertices)
                if (!embedded_v.count(v)) unvisited.insert(v);
            while (!unvisited.empty()) {
                int s = *unvisited.begin();
                Fragment f;
                std::set<int> attach, comp{s};
                std::queue<int> q;
                q.push(s);
                unvisited.erase(s);
                int key = INT32_MAX;
                while (!q.empty()) {
                    int v = q.front();
                    q.pop();
                    for (auto [ei, w] : adj[v]) {
                        key = std::min(key, ei);
                        if (embedded_v.count(w)) {
                            attach.insert(w);
                        } else if (!comp.count(w)) {
                            comp.insert(w);
                            unvisited.erase(w);
                            q.push(w);
                        }
                    }
                }
                f.attachments.assign(attach.begin(), attach.end());
                f.inner_vertices.assign(comp.begin(), comp.end());
                f.key_edge = key;
                frags.push_back(std::move(f));
            }
        }
        if (frags.empty()) break;
        std::sort(frags.begin(), frags.end(),
                  [](const Fragment& a, const Fragment& b) { return a.key_edge < b.key_edge; });

        auto fs = compute_faces();
        std::vector<std::set<int>> face_verts(fs.size());
        for (size_t i = 0; i < fs.size(); ++i)
            for (int d : fs[i]) face_verts[i].insert(dart_tail(d));

        int best_frag = -1, best_count = INT32_MAX, best_face = -1;
        for (size_t fi = 0; fi < frags.size(); ++fi) {
            int count = 0, first = -1;
            for (size_t i = 0; i < fs.size(); ++i) {
                bool ok = true;
                for (int a : frags[fi].attachments)
                    if (!face_verts[i].count(a)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    ++count;
                    if (first < 0) first = static_cast<int>(i);
                }
            }
            if (count == 0) return false;  // fragment cannot be placed: non-planar
            if (count < best_count) {
                best_count = count;
                best_frag = static_cast<int>(fi);
                best_face = first;
            }
        }
        const Fragment& f = frags[best_frag];
        const auto& face = fs[best_face];

        // α-path between two attachments through the fragment interior
        std::vector<int> path_v;
        std::vector<int> path_e;
        if (f.inner_vertices.empty()) {
            path_v = {g.edges[f.key_edge].u, g.edges[f.key_edge].v};
            path_e = {f.key_edge};
        } else {
            LCMST_CHECK(f.attachments.size() >= 2, "fragment with < 2 attachments in a block");
            int a = f.attachments.front();
            std::set<int> inner(f.inner_vertices.begin(), f.inner_vertices.end());
            std::map<int, std::pair<int, int>> par;
            std::queue<int> q;
            int reached = -1;
            par[a] = {-1, -1};
            q.push(a);
            while (!q.empty() && reached < 0) {
                int v = q.front();
                q.pop();
                bool v_inner = inner.count(v) > 0;
                for (auto [ei, w] : adj[v]) {
                    if (embedded_e.count(ei) || par.count(w)) continue;
                    if (embedded_v.count(w)) {
                        // only inner vertices may close the path at another attachment
                        if (v_inner && w != a &&
                            std::binary_search(f.attachments.begin(), f.attachments.end(), w)) {
                            par[w] = {v, ei};
                            reached = w;
                            break;
                        }
                        continue;
                    }
                    if (!v_inner && !inner.count(w)) continue;  // other fragment's territory
                    par[w] = {v, ei};
                    q.push(w);
                }
            }
            LCMST_CHECK(reached >= 0, "alpha-path not found in fragment");
            for (int cur = reached; cur != -1; cur = par[cur].first) {
                path_v.push_back(cur);
                if (par[cur].second >= 0) path_e.push_back(par[cur].second);
            }
            std::reverse(path_v.begin(), path_v.end());
            std::reverse(path_e.begin(), path_e.end());
        }

        int a = path_v.front(), b = path_v.back();
        int da = -1, db = -1;  // face darts leaving a and b (faces are simple cycles)
        for (int d : face) {
            if (dart_tail(d) == a) da = d;
            if (dart_tail(d) == b) db = d;
        }
        LCMST_CHECK(da >= 0 && db >= 0, "attachments not on chosen face");

        auto& ra = rot[a];
        ra.insert(std::find(ra.begin(), ra.end(), da), dart_from(path_e.front(), a));
        auto& rb = rot[b];
        rb.insert(std::find(rb.begin(), rb.end(), db), dart_from(path_e.back(), b));
        for (size_t i = 1; i + 1 < path_v.size(); ++i) {
            int v = path_v[i];
            rot[v] = {dart_from(path_e[i], v), dart_from(path_e[i - 1], v)};
            embedded_v.insert(v);
        }
        for (int e : path_e) embedded_e.insert(e);
    }

    for (auto& [v, r] : rot)
        for (int d : r) emb.append_dart(v, d);
    return true;
}

Graph subgraph_without(const Graph& g, int drop_edge) {
    Graph h;
    h.n = g.n;
    for (int i = 0; i < g.m(); ++i)
        if (i != drop_edge) h.edges.push_back(g.edges[i]);
    return h;
}

}  // namespace

bool is_planar(const Graph& g) {
    if (g.n >= 3 && g.m() > 3 * g.n - 6) return false;
    PlanarEmbedding emb;
    emb.n = g.n;
    emb.edges = g.edges;
    emb.real_edge_count = g.m();
    emb.rotation.assign(g.n, {});
    emb.rebuild_positions();
    for (const Block& b : biconnected_blocks(g))
        if (!embed_block(g, b, emb)) return false;
    return true;
}

PlanarEmbedding embed_planar(const Graph& g) {
    if (!g.connected()) throw DisconnectedError();
    PlanarEmbedding emb;
    emb.n = g.n;
    emb.edges = g.edges;
    emb.real_edge_count = g.m();
    emb.rotation.assign(g.n, {});
    emb.rebuild_positions();

    bool planar = !(g.n >= 3 && g.m() > 3 * g.n - 6);
    if (planar)
        for (const Block& b : biconnected_blocks(g))
            if (!embed_block(g, b, emb)) {
                planar = false;
                break;
            }
    if (!planar) {
        // Edge-minimal non-planar subgraph: a Kuratowski subdivision.
        Graph core = g;
        std::vector<int> ids(g.m());
        for (int i = 0; i < g.m(); ++i) ids[i] = i;
        bool shrunk = true;
        while (shrunk) {
            shrunk = false;
            for (int i = 0; i < core.m(); ++i) {
                Graph cand = subgraph_without(core, i);
                if (!is_planar(cand)) {
                    core = std::move(cand);
                    ids.erase(ids.begin() + i);
                    shrunk = true;
                    break;
                }
            }
        }
        throw NonPlanarError(ids);
    }

    emb.rebuild_positions();
    auto fs = emb.faces();
    size_t best = 0;
    for (size_t i = 1; i < fs.size(); ++i)
        if (fs[i].size() > fs[best].size()) best = i;
    emb.outer_face_dart = fs.empty() ? -1 : fs[best].front();
    emb.check_consistency();
    return emb;
}

// ════════════════════════════════════════════════════════════════════
//  Triangulation
// ════════════════════════════════════════════════════════════════════

PlanarEmbedding triangulate(const PlanarEmbedding& input) {
    PlanarEmbedding emb = input;
    emb.rebuild_positions();
    if (emb.n <= 2) return emb;

    std::set<std::pair<int, int>> adjacent;
    for (const Edge& e : emb.edges)
        adjacent.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    auto has_edge = [&](int a, int b) {
        return adjacent.count({std::min(a, b), std::max(a, b)}) > 0;
    };

    // Chord between walk positions i and j (cyclic distance >= 2 both ways):
    // synthetic edge, darts inserted before walk[i] / walk[j]; the face walk
    // splits into [p, d_j .. d_{i-1}] and [q, d_i .. d_{j-1}].
    auto add_chord = [&](const std::vector<int>& walk, int i, int j, std::vector<int>& w1,
                         std::vector<int>& w2) {
        int k = static_cast<int>(walk.size());
        int vi = emb.tail(walk[i]);
        int vj = emb.tail(walk[j]);
        int eid = static_cast<int>(emb.edges.size());
        emb.edges.push_back({vi, vj, 0, 0});
        adjacent.insert({std::min(vi, vj), std::max(vi, vj)});
        int p = 2 * eid;
        int q = 2 * eid + 1;
        emb.insert_dart_before(p, walk[i]);
        emb.insert_dart_before(q, walk[j]);
        w1.clear();
        w2.clear();
        w1.push_back(p);
        for (int t = j; t != i; t = (t + 1) % k) w1.push_back(walk[t]);
        w2.push_back(q);
        for (int t = i; t != j; t = (t + 1) % k) w2.push_back(walk[t]);
    };

    std::vector<std::vector<int>> pending = emb.faces();
    while (!pending.empty()) {
        std::vector<int> walk = std::move(pending.back());
        pending.pop_back();
        int k = static_cast<int>(walk.size());
        if (k <= 3) continue;

        bool progressed = false;
        // corner chord: cuts a triangle [q, d_i, d_{i+1}] off the walk
        for (int i = 0; i < k && !progressed; ++i) {
            int j = (i + 2) % k;
            int vi = emb.tail(walk[i]);
            int vj = emb.tail(walk[j]);
            if (vi == vj || has_edge(vi, vj)) continue;
            std::vector<int> w1, w2;
            add_chord(walk, i, j, w1, w2);
            pending.push_back(std::move(w1));  // the k-1 remainder
            progressed = true;
        }
        // general chord: split anywhere
        for (int i = 0; i < k && !progressed; ++i) {
            for (int j = 0; j < k && !progressed; ++j) {
                int d1 = (j - i + k) % k, d2 = (i - j + k) % k;
                if (d1 < 2 || d2 < 2) continue;
                int vi = emb.tail(walk[i]);
                int vj = emb.tail(walk[j]);
                if (vi == vj || has_edge(vi, vj)) continue;
                std::vector<int> w1, w2;
                add_chord(walk, i, j, w1, w2);
                pending.push_back(std::move(w1));
                pending.push_back(std::move(w2));
                progressed = true;
            }
        }
        LCMST_CHECK(progressed, "triangulation stuck on a face");
    }

    emb.check_consistency(true);
    return emb;
}

// ════════════════════════════════════════════════════════════════════
//  Fundamental cycles
// ════════════════════════════════════════════════════════════════════

FundamentalCycle fundamental_cycle(const Graph& g, const std::vector<int>& tree_edges,
                                   int non_tree_edge, int root) {
    for (int te : tree_edges)
        if (te == non_tree_edge) throw ValidationError("edge already in the tree");

    std::vector<std::vector<std::pair<int, int>>> tadj(g.n);
    for (int te : tree_edges) {
        tadj[g.edges[te].u].push_back({te, g.edges[te].v});
        tadj[g.edges[te].v].push_back({te, g.edges[te].u});
    }
    int su = g.edges[non_tree_edge].u;
    int sv = g.edges[non_tree_edge].v;
    if (root < 0) root = su;

    std::vector<int> par(g.n, -1), par_edge(g.n, -1), depth(g.n, -1);
    std::queue<int> q;
    q.push(root);
    depth[root] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (auto [ei, w] : tadj[v])
            if (depth[w] < 0) {
                depth[w] = depth[v] + 1;
                par[w] = v;
                par_edge[w] = ei;
                q.push(w);
            }
    }
    LCMST_CHECK(depth[su] >= 0 && depth[sv] >= 0, "tree does not span the edge endpoints");

    // lowest common ancestor of su, sv in the tree rooted at `root`
    int x = su, y = sv;
    std::vector<int> up_x, up_y;  // edges climbed
    while (x != y) {
        if (depth[x] >= depth[y]) {
            up_x.push_back(par_edge[x]);
            x = par[x];
        } else {
            up_y.push_back(par_edge[y]);
            y = par[y];
        }
    }

    FundamentalCycle fc;
    fc.p1_edges = up_x;  // su -> lca
    fc.p2_edges = up_y;  // sv -> lca
    // cycle order: su, ..., lca, ..., sv
    {
        std::vector<int> left{su};
        for (int cur = su; cur != x;) {
            cur = par[cur];
            left.push_back(cur);
        }
        std::vector<int> right;
        for (int cur = sv; cur != x;) {
            right.push_back(cur);
            cur = par[cur];
        }
        std::reverse(right.begin(), right.end());
        fc.cycle_vertices = left;
        fc.cycle_vertices.insert(fc.cycle_vertices.end(), right.begin(), right.end());
    }
    return fc;
}

// ════════════════════════════════════════════════════════════════════
//  Inside/outside classification
// ════════════════════════════════════════════════════════════════════

CyclePartition classify_inside_outside(const PlanarEmbedding& emb,
                                       const std::vector<int>& cycle_edges) {
    const int m = static_cast<int>(emb.edges.size());
    std::vector<char> on_cycle(m, 0);
    for (int e : cycle_edges) on_cycle[e] = 1;

    std::vector<int> deg(emb.n, 0);
    for (int e : cycle_edges) {
        deg[emb.edges[e].u]++;
        deg[emb.edges[e].v]++;
    }
    for (int v = 0; v < emb.n; ++v)
        if (deg[v] != 0 && deg[v] != 2) throw ValidationError("cycle is not simple");

    auto fs = emb.faces();
    std::vector<int> face_of(2 * m, -1);
    for (size_t i = 0; i < fs.size(); ++i)
        for (int d : fs[i]) face_of[d] = static_cast<int>(i);

    LCMST_CHECK(emb.outer_face_dart >= 0, "embedding has no designated outer face");
    int outer = face_of[emb.outer_face_dart];
    std::vector<char> face_outside(fs.size(), 0);
    std::vector<char> seen(fs.size(), 0);
    std::queue<int> q;
    q.push(outer);
    seen[outer] = 1;
    face_outside[outer] = 1;
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        for (int d : fs[f]) {
            int e = PlanarEmbedding::edge_of(d);
            if (on_cycle[e]) continue;
            int nf = face_of[PlanarEmbedding::twin(d)];
            if (!seen[nf]) {
                seen[nf] = 1;
                face_outside[nf] = 1;
                q.push(nf);
            }
        }
    }

    CyclePartition part;
    part.vertex_side.assign(emb.n, Side::Outside);
    part.edge_side.assign(m, Side::Outside);
    for (int e = 0; e < m; ++e) {
        if (on_cycle[e]) {
            part.edge_side[e] = Side::OnCycle;
            continue;
        }
        part.edge_side[e] = face_outside[face_of[2 * e]] ? Side::Outside : Side::Inside;
    }
    for (int v = 0; v < emb.n; ++v) {
        if (deg[v] == 2) {
            part.vertex_side[v] = Side::OnCycle;
            part.cycle_vertices.push_back(v);
            continue;
        }
        if (emb.rotation[v].empty()) continue;
        int d = emb.rotation[v].front();
        part.vertex_side[v] = face_outside[face_of[d]] ? Side::Outside : Side::Inside;
        if (part.vertex_side[v] == Side::Inside)
            part.inside_vertices.push_back(v);
        else
            part.outside_vertices.push_back(v);
    }
    return part;
}

}  // namespace lcmst
