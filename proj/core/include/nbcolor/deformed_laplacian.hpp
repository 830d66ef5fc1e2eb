#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "nbcolor/graph.hpp"

namespace nbcolor {

// L(z) = z^2 I - z A + D - I.

Eigen::SparseMatrix<double> adjacency_matrix(const Graph& g);
Eigen::MatrixXd dense_deformed_laplacian(const Graph& g, double z);

enum class EigMode { automatic, dense, lanczos };

// Minimum eigenvalue of L(z). Dense symmetric solver for n <= 512, Lanczos
// with full reorthogonalization above; Lanczos stagnation falls back to the
// dense path when n <= 512 and throws convergence_error otherwise.
double lambda_min(const Graph& g, double z, EigMode mode = EigMode::automatic);

// Scale-aware default PSD shift: 1e-9 * (1 + z^2 + max degree).
double psd_tolerance(const Graph& g, double z);

bool is_psd(const Graph& g, double z, std::optional<double> tol = std::nullopt);

enum class RealEigMethod { baseline_minus_one, bisection_crossing, extended_scan };

struct RealEigLocation {
    double r_star = 0.0;
    RealEigMethod method = RealEigMethod::baseline_minus_one;
    double bracket = 0.0;   // final bisection interval width (0 for baseline)
    double grid_used = 0.0; // scan resolution
};

// Smallest real eigenvalue of B located through L: scan lambda_min(L(z)) on
// [-(1 + max degree), -1] for the first sign change and bisect; with no
// crossing the -1 eigenvalue of multiplicity |E|-|V| is injected analytically.
// Expects the 2-core (min degree 2, nonempty); throws eligibility_error
// otherwise.
RealEigLocation smallest_real_eig_B(const Graph& core, double tol = 1e-8,
                                    std::optional<double> grid_step = std::nullopt);

struct RealRootScan {
    std::vector<double> roots;
    // grid points with lambda_min near zero but no sign change; completeness
    // for tangential (even multiplicity) roots is not claimed
    std::vector<std::pair<double, double>> suspected; // (z, lambda_min)
};

// Real roots of det L(z) on [a, b] from sign changes of lambda_min, refined
// by bisection. The known roots at z = +1 (Laplacian kernel) and z = -1
// (bipartite, signless Laplacian kernel) are included analytically when
// inside [a, b]. The +-1 eigenvalues of B carried by the (z^2-1)^{|E|-|V|}
// prefactor do not show up in L and are not reported here.
RealRootScan real_root_scan(const Graph& g, double a, double b,
                            std::optional<double> grid_step = std::nullopt);

} // namespace nbcolor
