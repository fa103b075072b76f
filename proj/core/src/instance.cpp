#include "lcmst/instance.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace lcmst {

std::string kind_name(ProblemKind k) {
    switch (k) {
        case ProblemKind::LCMST: return "lcmst";
        case ProblemKind::LCST: return "lcst";
        case ProblemKind::DST: return "dst";
        case ProblemKind::GST: return "gst";
    }
    return "?";
}

static std::optional<ProblemKind> kind_of(const std::string& s) {
    if (s == "lcmst") return ProblemKind::LCMST;
    if (s == "lcst") return ProblemKind::LCST;
    if (s == "dst") return ProblemKind::DST;
    if (s == "gst") return ProblemKind::GST;
    return std::nullopt;
}

void Instance::validate() const {
    if (n <= 0) throw ValidationError("vertex count must be positive");
    if (root < 0 || root >= n) throw ValidationError("root out of range");
    if (h < 1) throw ValidationError("h must be a positive integer");
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw ValidationError("vertex id out of range");
        if (e.u == e.v) throw ValidationError("self-loop rejected");
        if (e.length < 0 || e.weight < 0)
            throw ValidationError("lengths and weights must be nonnegative");
        auto key = directed ? std::make_pair(e.u, e.v)
                            : std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
        if (!seen.insert(key).second) throw ValidationError("duplicate edge rejected");
    }
    for (int t : terminals)
        if (t < 0 || t >= n) throw ValidationError("terminal out of range");
    if (kind != ProblemKind::GST && !groups.empty())
        throw ValidationError("groups only valid for gst");
    if (kind == ProblemKind::GST) {
        std::vector<char> in_group(n, 0);
        for (const auto& g : groups) {
            if (g.empty()) throw ValidationError("empty group");
            for (int v : g) {
                if (v < 0 || v >= n) throw ValidationError("group vertex out of range");
                if (in_group[v]) throw ValidationError("overlapping GST groups rejected");
                in_group[v] = 1;
            }
        }
    }
    if (directed && kind != ProblemKind::DST)
        throw ValidationError("only dst instances are directed");
}

Instance parse_instance(const std::string& text) {
    Instance inst;
    bool have_header = false;
    int declared_m = 0;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // strip comments
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "p") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            std::string kind;
            long long n, m, h, root;
            if (!(ls >> kind >> n >> m >> h >> root))
                throw ParseError(lineno, "malformed header, want: p <kind> <n> <m> <h> <root>");
            auto k = kind_of(kind);
            if (!k) throw ParseError(lineno, "unknown problem kind '" + kind + "'");
            inst.kind = *k;
            inst.directed = (inst.kind == ProblemKind::DST);
            inst.n = static_cast<int>(n);
            declared_m = static_cast<int>(m);
            inst.h = h;
            inst.root = static_cast<int>(root);
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) throw ParseError(lineno, "edge before header");
            long long u, v, l, w;
            if (!(ls >> u >> v >> l >> w))
                throw ParseError(lineno, "malformed edge, want: e <u> <v> <length> <weight>");
            inst.edges.push_back({static_cast<int>(u), static_cast<int>(v), l, w});
        } else if (tag == "t") {
            if (!have_header) throw ParseError(lineno, "terminal before header");
            if (inst.kind != ProblemKind::LCST && inst.kind != ProblemKind::DST)
                throw ParseError(lineno, "terminal lines only valid for lcst/dst");
            long long v;
            if (!(ls >> v)) throw ParseError(lineno, "malformed terminal line");
            inst.terminals.push_back(static_cast<int>(v));
        } else if (tag == "g") {
            if (!have_header) throw ParseError(lineno, "group before header");
            if (inst.kind != ProblemKind::GST)
                throw ParseError(lineno, "group lines only valid for gst");
            std::vector<int> grp;
            long long v;
            while (ls >> v) grp.push_back(static_cast<int>(v));
            if (grp.empty()) throw ParseError(lineno, "empty group line");
            inst.groups.push_back(std::move(grp));
        } else {
            throw ParseError(lineno, "unknown line tag '" + tag + "'");
        }
    }
    if (!have_header) throw ParseError(lineno, "missing header");
    if (declared_m != inst.m())
        throw ParseError(lineno, "edge count mismatch: header says " + std::to_string(declared_m) +
                                     ", found " + std::to_string(inst.m()));
    try {
        inst.validate();
    } catch (const ValidationError& e) {
        throw ParseError(lineno, e.what());
    }
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    // Canonical form: edges sorted by (u, v); undirected edges stored u < v.
    std::vector<Edge> edges = inst.edges;
    if (!inst.directed)
        for (Edge& e : edges)
            if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v, a.length, a.weight) < std::tie(b.u, b.v, b.length, b.weight);
    });
    std::ostringstream out;
    out << "p " << kind_name(inst.kind) << ' ' << inst.n << ' ' << edges.size() << ' ' << inst.h
        << ' ' << inst.root << '\n';
    for (const Edge& e : edges)
        out << "e " << e.u << ' ' << e.v << ' ' << e.length << ' ' << e.weight << '\n';
    std::vector<int> terms = inst.terminals;
    std::sort(terms.begin(), terms.end());
    for (int t : terms) out << "t " << t << '\n';
    for (auto grp : inst.groups) {
        std::sort(grp.begin(), grp.end());
        out << "g";
        for (int v : grp) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

std::vector<std::vector<std::pair<int, int>>> Graph::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int i = 0; i < m(); ++i) {
        adj[edges[i].u].push_back({i, edges[i].v});
        adj[edges[i].v].push_back({i, edges[i].u});
    }
    return adj;
}

std::vector<int> Graph::component_ids(int* count) const {
    std::vector<int> comp(n, -1);
    auto adj = adjacency();
    int c = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        comp[s] = c;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [ei, w] : adj[v])
                if (comp[w] < 0) {
                    comp[w] = c;
                    q.push(w);
                }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

bool Graph::connected() const {
    if (n == 0) return true;
    int c = 0;
    component_ids(&c);
    return c == 1;
}

Graph graph_of(const Instance& inst) {
    Graph g;
    g.n = inst.n;
    g.edges = inst.edges;
    return g;
}

}  // namespace lcmst
