#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcmst/instance.hpp"

namespace lcmst {

// Instance transformer plus solution mappers in both directions. Vertex and
// edge correspondence tables double as the CLI's sidecar dump.
struct ReductionBundle {
    std::string kind;
    Instance source;
    Instance target;

    // target vertex provenance: {tag, base vertex, layer}; tag 0 = original,
    // 1 = copy/special, 2 = helper midpoint, 3 = fake/aux
    struct VertexInfo {
        int tag = 0;
        int base = -1;
        int layer = -1;
    };
    std::vector<VertexInfo> target_vertex_info;
    std::vector<int> source_edge_of_target;  // -1 for gadget edges

    // kind-specific wiring used by the forward mapper
    std::vector<std::pair<int, std::vector<int>>> spanning_helpers;  // (vertex, helper ids)
    std::vector<int> always_free_edges;             // zero-weight gadget edges
    std::vector<std::vector<int>> special_edge;     // dst-to-lcst: [terminal][layer]

    std::optional<Weight> source_opt;  // certificate fields, filled by callers
    std::optional<Weight> target_opt;

    // map a feasible source solution to a feasible target solution of equal
    // weight, and back (backward intersects with the source edge set)
    std::vector<int> forward(const std::vector<int>& source_edges) const;
    std::vector<int> backward(const std::vector<int>& target_edges) const;

    std::string sidecar_json() const;
};

ReductionBundle lcst_to_lcmst(const Instance& inst);
ReductionBundle lcmst_to_dst(const Instance& inst);
ReductionBundle dst_to_lcst(const Instance& inst);
ReductionBundle gst_to_lcmst(const Instance& inst);

// zero-weight star trick making overlapping groups disjoint; provided as an
// explicit preprocessing step, the parser rejects overlap
Instance normalize_gst_groups(const Instance& inst, const std::vector<std::vector<int>>& groups);

// feasibility audits used by the mappers' tests
bool feasible_solution(const Instance& inst, const std::vector<int>& edge_ids);

}  // namespace lcmst
