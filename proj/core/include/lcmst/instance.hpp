#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcmst/common.hpp"

namespace lcmst {

enum class ProblemKind { LCMST, LCST, DST, GST };

std::string kind_name(ProblemKind k);

struct Edge {
    int u = -1;
    int v = -1;
    Length length = 0;
    Weight weight = 0;
    int other(int x) const { return x == u ? v : u; }
};

// A rooted, edge-weighted, edge-lengthed graph with a length bound h.
// Immutable after construction; the unit of all I/O.
struct Instance {
    ProblemKind kind = ProblemKind::LCMST;
    int n = 0;
    std::vector<Edge> edges;
    int root = 0;
    Length h = 1;
    std::vector<int> terminals;               // lcst/dst
    std::vector<std::vector<int>> groups;     // gst
    bool directed = false;                    // dst

    int m() const { return static_cast<int>(edges.size()); }
    void validate() const;
};

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

// ── Plain graph view used by the algorithm layers ───────────────────
// Undirected multigraph; parallel edges are allowed here (they arise from
// contractions) even though parsed instances are always simple.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;

    int m() const { return static_cast<int>(edges.size()); }
    void add_edge(int u, int v, Length l, Weight w) { edges.push_back({u, v, l, w}); }

    // adjacency as (edge id, neighbor) pairs, built on demand
    std::vector<std::vector<std::pair<int, int>>> adjacency() const;
    bool connected() const;
    std::vector<int> component_ids(int* count = nullptr) const;
};

Graph graph_of(const Instance& inst);

}  // namespace lcmst
