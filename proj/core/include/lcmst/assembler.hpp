#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcmst/division.hpp"
#include "lcmst/lcst.hpp"
#include "lcmst/pieces.hpp"

namespace lcmst {

// A guess assigns each piece of a region's boundary partition a distance
// value from the grid {i*h/beta : i in [beta]} (scaled to integers), plus a
// usage bit per piece in the Steiner variant.
struct Guess {
    std::vector<Length> values;
    std::vector<char> used;  // empty unless steiner
};

// Auxiliary Steiner instance wiring a child region's pieces (as terminals)
// to the parent's pieces through a fake root under guessed length offsets.
struct FGraph {
    LcstInstance instance;            // graph over local ids, root, terminals, budget
    std::vector<int> to_base_edge;    // local edge id -> base edge id (-1 for X/X')
    std::vector<int> to_base_vertex;  // local vertex id -> base vertex (-1 for r~/terminals)
    std::vector<int> projectable;     // local edge ids in E(H) \ (E(L) ∪ E(L'))
};

struct AssemblerParams {
    Rational alpha{2, 1};
    std::int64_t beta = 2;  // integer; lengths are pre-scaled by it
    double delta = 0.5;
    std::uint64_t guess_budget = 250000;  // per region
    bool steiner = false;
    bool audit = false;
    DivisionParams division;  // extra knobs forwarded to the hierarchy build
};

// epsilon preset: xi = eps/2, alpha = log^xi n, beta = log n/(xi^2 loglog n),
// delta = xi, clamped to desk-scale ranges.
AssemblerParams params_from_epsilon(double epsilon, int n);

std::vector<Guess> enumerate_guesses(const std::vector<std::vector<int>>& pieces,
                                     std::int64_t beta, Length h_scaled, bool steiner_bits,
                                     std::uint64_t budget, const std::string& region_name,
                                     const std::vector<Length>& piece_lower_bounds = {});

FGraph build_F(const Graph& scaled_base, const Hierarchy& hier, int parent_id, int child_id,
               const Guess& g_parent, const Guess& g_child, Length h_scaled, std::int64_t beta);

struct DpCell {
    Weight weight = kInfWeight;
    std::vector<int> edge_ids;  // base edge ids realizing the weight
};

struct DpTable {
    std::vector<std::vector<Guess>> guesses;  // per hierarchy node
    std::vector<std::vector<DpCell>> cells;   // per node, per guess index
    std::int64_t guesses_evaluated = 0;
    std::int64_t lcst_calls = 0;
};

DpTable solve_dp(const Graph& scaled_base, const Hierarchy& hier, Length h_scaled,
                 const AssemblerParams& params);

struct RunResult {
    std::vector<int> tree_edges;   // instance edge ids of the output tree
    Weight weight = 0;
    Length max_root_distance = 0;  // original length units
    double slack = 0;              // max_root_distance / h
    int depth = 0;
    std::int64_t guesses_evaluated = 0;
    std::int64_t lcst_calls = 0;
    Length slack_bound_num = 0;    // h*(beta + 2*depth), scaled-units bound
    Weight boundary_weight = 0;
    Weight dp_weight = 0;
};

// Algorithm main pipeline: 2h-hierarchy, boundary pieces, guess-indexed DP,
// union with hierarchy boundaries, length-SPT extraction.
RunResult run_main(const Instance& inst, const AssemblerParams& params);

}  // namespace lcmst
