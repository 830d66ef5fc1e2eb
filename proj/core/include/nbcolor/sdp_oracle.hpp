#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "nbcolor/graph.hpp"

namespace nbcolor {

// Exact vector chromatic number on small instances; the ground-truth oracle
// for sandwich tests. Never used inside certificates.

struct OracleOptions {
    double tol = 1e-4;        // feasibility margin tolerance
    int restarts = 6;
    int iters_per_stage = 400;
    std::uint64_t seed = 1;
};

enum class FeasibilityStatus { feasible, infeasible, inconclusive };

struct FeasibilityResult {
    FeasibilityStatus status = FeasibilityStatus::inconclusive;
    double margin = 0.0;     // best achieved max edge violation at the target
    Eigen::MatrixXd gram;    // best embedding found (unit diagonal)
    int iterations = 0;
};

// Feasibility of Eq-style constraints <v_i,v_j> <= -1/(kappa-1) by full-rank
// factorized minimization of a log-sum-exp smoothed max violation, smoothing
// halved per restart. n <= 64, kappa > 2.
FeasibilityResult feasibility(const Graph& g, double kappa, const OracleOptions& opts = {});

struct OracleResult {
    double chi_v = 0.0;
    Eigen::MatrixXd gram;        // feasible at chi_v + tol
    double dual_evidence = 0.0;  // infeasibility margin at chi_v - tol
    int iterations = 0;
    bool conclusive = true;      // acceptance treats inconclusive as failure
    double bracket = 0.0;        // final bisection bracket width
};

// Bisection on kappa over [2 + 1e-6, n] with feasibility at each pivot.
// Edgeless graphs return 1 by convention.
OracleResult chi_v_exact(const Graph& g, double tol = 1e-4, const OracleOptions& opts = {});

} // namespace nbcolor
