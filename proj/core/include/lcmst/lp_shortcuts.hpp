#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lcmst/division.hpp"
#include "lcmst/instance.hpp"

namespace lcmst {

// Weight budget standing in for the flow LP value w(x): solving the LP itself
// is out of scope, so the variant is parameterized by a pluggable provider.
struct BudgetProvider {
    enum class Kind { ExactOpt, DiameterLowerBound, UserValue };
    Kind kind = Kind::DiameterLowerBound;
    Weight value = 0;  // resolved budget (global; per-region hooks can refine)

    static BudgetProvider exact_opt(Weight opt) { return {Kind::ExactOpt, opt}; }
    static BudgetProvider diameter_2h(Weight d2h) { return {Kind::DiameterLowerBound, d2h}; }
    static BudgetProvider user(Weight v) { return {Kind::UserValue, v}; }
};

// Minimum-length path among paths of weight <= budget, via Pareto label
// setting. Returns edge ids, or nullopt when no such path exists.
struct BudgetedPath {
    std::vector<int> edge_ids;
    Length length = 0;
    Weight weight = 0;
    int source = -1;
    int target = -1;
};
std::optional<BudgetedPath> budgeted_shortest_path(const Graph& g,
                                                   const std::vector<int>& sources,
                                                   const std::vector<int>& targets,
                                                   Weight weight_budget);

// Simple 3/2-division hierarchy: one separator per level, with the separator
// path contracted into the root before recursing.
struct SimpleHierarchy {
    struct Level {
        std::vector<int> separator_edges;  // base edge ids bought at this node
        std::vector<std::vector<int>> pieces;  // subpath pieces (base vertex ids)
        int depth = 0;
        Weight separator_weight = 0;
        Weight diameter_bound = 0;  // D^(2h) of the contracted graph at this node
    };
    std::vector<Level> levels;  // one entry per hierarchy node, preorder
    int depth = 0;
    std::vector<int> boundary_edges() const;
};

SimpleHierarchy simple_hierarchy(const Graph& g, int root, Length h, const Rational& beta,
                                 bool audit = false);

struct LpRunResult {
    std::vector<int> tree_edges;
    Weight weight = 0;
    Length max_root_distance = 0;
    double slack = 0;
    int depth = 0;
    Weight shortcut_weight = 0;
    Weight boundary_weight = 0;
    int shortcut_paths = 0;
};

// Algorithm: simple hierarchy + per-piece weight-budgeted shortcut paths +
// length-SPT of the union.
LpRunResult run_lp_variant(const Instance& inst, double epsilon, const BudgetProvider& provider);

}  // namespace lcmst
