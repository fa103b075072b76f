#pragma once

#include <string>

#include "lcmst/instance.hpp"

namespace lcmst {

enum class GeneratorKind {
    Grid,
    TriangulatedRandom,
    StackedTriangulation,
    GadgetFig1Analog,
    GstGadget,
};

GeneratorKind generator_kind_of(const std::string& name);
std::string generator_kind_name(GeneratorKind k);

struct GeneratorConfig {
    GeneratorKind kind = GeneratorKind::Grid;
    int n = 9;
    std::uint64_t seed = 1;
    double h_factor = 1.2;     // h = ceil(h_factor * length-SPT eccentricity)
    Length max_length = 6;     // lengths drawn uniformly in [min_length, max_length]
    Length min_length = 1;
    Weight max_weight = 9;     // weights uniform in [min_weight, max_weight]
    Weight min_weight = 0;
    bool adversarial = false;  // correlate low weight with high length
    bool infeasible = false;   // force h below the eccentricity
    double keep_edge_prob = 1.0;  // triangulated-random: sparsification
    int groups = 2;               // gst-gadget

    std::string describe() const;
};

// Seeds fully determine instances; planar by construction.
Instance generate_instance(const GeneratorConfig& config);

}  // namespace lcmst
