#pragma once

#include <vector>

#include "lcmst/instance.hpp"

namespace lcmst {

// Partition of one connected boundary component into pieces of bounded
// induced diameter: at most 8*beta pieces, each with diameter (inside the
// component's induced subgraph) at most l(E)/beta.
struct PiecePartition {
    std::vector<std::vector<int>> pieces;  // vertex sets, each sorted
    std::vector<Length> piece_diameters;   // measured, induced subgraph
    Rational beta{1, 1};
    Length component_budget = 0;  // l(E) of the component
};

// Length-threshold split of a length-SPT (phase 1) followed by minimally-far
// subtree splits (phase 2). The component must be connected; the threshold is
// budget/(4*beta) in exact rational arithmetic.
PiecePartition partition_boundary(const Graph& component, const Rational& beta);

// Pieces of every boundary component of a region-like edge set, over base
// vertex ids. Components whose total length is already <= target get a single
// piece; otherwise beta is raised per component so every piece has induced
// diameter <= target (used by the assembler with target = h/beta_user).
std::vector<std::vector<int>> partition_edge_set_pieces(const Graph& base,
                                                        const std::vector<int>& edge_ids,
                                                        const Rational& beta_user,
                                                        Length diameter_target_num,
                                                        Length diameter_target_den);

}  // namespace lcmst
