#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nbcolor/graph.hpp"
#include "nbcolor/vector_coloring.hpp"

namespace nbcolor {

struct CutResult {
    std::vector<int> partition; // +-1 per vertex, from the best trial
    std::int64_t cut_edges = 0; // of the best trial
    int trials = 0;
    double mean_cut = 0.0;
    std::int64_t best_cut = 0;
    std::uint64_t seed = 0;
    std::int64_t resamples = 0; // zero-projection ties resolved by resampling
};

// Goemans-Williamson rounding: per trial a standard Gaussian in the ambient
// dimension, vertices split by sign of the projection onto v_i. Trials use
// deterministically split sub-seeds.
CutResult gw_round(const Graph& g, const VectorColoring& vc, int trials, std::uint64_t seed);

struct CutLowerBound {
    double bound = 0.0;         // |E| (1/2 + 2(1-1/m) sqrt(rho) / (pi (rho+1)))
    double er_form = 0.0;       // |E| (1/2 + (2/pi) sqrt(d) / (sqrt(d)+1)^2) at d = d_avg
    double dms_reference = 0.0; // |E| (1/2 + 0.7632 / sqrt(d_avg)), comparison constant only
};
CutLowerBound expected_cut_lb(const Graph& g, int m, double rho);

// Exact count of crossing edges for a +-1 partition.
std::int64_t cut_value(const Graph& g, const std::vector<int>& partition);

std::string cut_result_to_json(const CutResult& r);

} // namespace nbcolor
