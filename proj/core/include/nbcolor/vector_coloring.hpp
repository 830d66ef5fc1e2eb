#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "nbcolor/graph.hpp"
#include "nbcolor/nb_operator.hpp"

namespace nbcolor {

// Unit vectors per vertex with their Gram matrix and the achieved
// vector-chromatic value kappa = 1 + 1/|max edge Gram entry|. Vectors are
// stored sparsely; the support of row i is the radius-m ball around i.
struct VectorColoring {
    Eigen::SparseMatrix<double, Eigen::RowMajor> vectors; // n x ambient dim
    Eigen::MatrixXd gram;                                 // n x n
    double kappa = 0.0;
    int m = 0;
};

// Perron-weighted non-backtracking walk: first step phi_{i->j}/phi_i, later
// steps phi_{k->l}/(rho phi_{j->k}).
struct WalkModel {
    DirectedEdgeIndex idx;
    PerronData perron;
};
WalkModel make_walk_model(const Graph& g);

// P_i[X_{dist(i,j)} = j] along the unique shortest path, by the telescoped
// closed form phi_{u->j} / (rho^{s-1} phi_i). Requires dist(i,j) >= 1; the
// uniqueness premise (girth >= 2m+1) is the caller's.
double walk_prob(const Graph& g, const WalkModel& wm, int i, int j);

// (v_i)_j = (1/sqrt m)(-1)^{dist(i,j)} sqrt(P_i[X_dist = j]) for
// 1 <= dist(i,j) <= m, zero otherwise. Requires an eligible graph equal to
// its 2-core, girth >= 2m+1 and m >= 2.
VectorColoring build_vectors(const Graph& g, int m);

struct VerifyColoringResult {
    bool ok = false;
    std::pair<int, int> worst_edge{-1, -1};
    double worst_entry = 0.0;    // max Gram entry over edges
    double max_norm_dev = 0.0;   // max | ||v_i|| - 1 |
    double gram_lambda_min = 0.0;
};
VerifyColoringResult verify_coloring(const Graph& g, const VectorColoring& vc,
                                     double kappa_claim);

// Combines a kappa-vector coloring on lambda_set with a proper 3-coloring on
// upsilon, separated by an independent boundary, into a coloring of all of g
// at value max(kappa+1, 4). sigma holds colors 1..3 aligned with the sorted
// upsilon; lambda_vc rows align with the sorted lambda_set.
VectorColoring patch_colorings(const Graph& g,
                               const std::vector<int>& lambda_set,
                               const VectorColoring& lambda_vc,
                               const std::vector<int>& upsilon,
                               const std::vector<int>& sigma,
                               const std::vector<int>& boundary);

// Grows upsilon0 by absorbing adjacent pairs {i,j} (an edge with both
// endpoints outside the set, each adjacent to it) until none remain; the
// boundary of the result is then an independent set.
std::vector<int> expand_uncolorable(const Graph& g, const std::vector<int>& upsilon0);

struct AlonBoppanaWitness {
    Eigen::MatrixXd X; // PSD, unit trace
    double value = 0.0; // <X, L(z)> = z^2 + 2(1-1/m) sqrt(rho) z + rho
};

// Witness X_ij = sqrt(phi_i phi_j) <v_i, v_j> certifying
// lambda_min(L(z)) <= value for z < 0.
AlonBoppanaWitness alon_boppana_witness(const Graph& g, int m, double z);

// --- export / import --------------------------------------------------------

// Gram matrix in MatrixMarket coordinate format (symmetric, upper triangle).
std::string gram_matrix_market(const VectorColoring& vc);
// Dense per-vertex vector file: "n dim" header then one row per vertex.
std::string vectors_text(const VectorColoring& vc);
// Rebuilds a VectorColoring (gram and kappa recomputed) from vectors_text.
VectorColoring load_vectors_text(std::istream& in, const Graph& g);

} // namespace nbcolor
