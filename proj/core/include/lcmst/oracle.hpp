#pragma once

#include <optional>
#include <vector>

#include "lcmst/instance.hpp"

namespace lcmst {

struct ExactResult {
    Weight weight = 0;
    std::vector<int> edge_ids;        // one optimal edge set
    std::int64_t candidates = 0;      // enumeration stats
    bool feasible = true;
};

// Spanning-tree enumeration with partial root-distance pruning; returns the
// minimum-weight h-length spanning tree or an infeasible marker.
ExactResult exact_lcmst(const Instance& inst, std::int64_t work_cap = 50000000);

// Minimum-weight subgraph of a directed instance from which every terminal is
// reachable from the root (branch and bound; zero-weight arcs are free).
ExactResult exact_dst(const Instance& inst, std::int64_t work_cap = 20000000);

}  // namespace lcmst
