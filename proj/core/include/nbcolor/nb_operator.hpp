#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "nbcolor/graph.hpp"

namespace nbcolor {

// Bijection between ordered pairs i->j of adjacent vertices and indices
// 0..2|E|-1, lexicographic by (i, j). rev is a fixed-point-free involution.
struct DirectedEdgeIndex {
    std::vector<int> offsets; // size n+1, arc block per tail vertex
    std::vector<int> tail;    // size 2|E|
    std::vector<int> head;    // size 2|E|
    std::vector<int> rev;     // index of j->i for arc i->j

    int arc_count() const { return static_cast<int>(head.size()); }
    // Index of arc i->j; j must be adjacent to i.
    int arc(const Graph& g, int i, int j) const;
};

DirectedEdgeIndex edge_index(const Graph& g);

// y = Bx with (Bx)_{i->j} = sum_{l in d(j) \ i} x_{j->l}. O(|E|) via the
// out-sum minus backtracking term.
void nb_matvec(const DirectedEdgeIndex& idx, const std::vector<double>& x,
               std::vector<double>& y);
std::vector<double> nb_matvec(const DirectedEdgeIndex& idx, const std::vector<double>& x);

// Spectral radius rho of B and the positive right Perron eigenvector phi,
// scaled so that sum_i phi_i = 1 with phi_i = sum_{j in d(i)} phi_{i->j}.
struct PerronData {
    double rho = 0.0;
    std::vector<double> phi;        // per directed edge
    std::vector<double> phi_vertex; // per vertex
    double residual = 0.0;          // achieved ||B phi - rho phi||_inf / ||phi||_inf
};

// Plain power iteration from the all-ones vector. Requires an eligible graph
// that equals its own 2-core (min degree 2, connected, non-bipartite,
// not a cycle, period 1); throws eligibility_error naming the violated
// condition, or convergence_error carrying the best residual.
PerronData perron(const Graph& g, const DirectedEdgeIndex& idx,
                  double tol = 1e-10, std::int64_t max_iters = 1'000'000);

// Period of B via gcd of BFS level differences on the directed-edge graph.
// Requires min degree 2 and a connected graph. A cycle of length k returns k
// (reducibility is flagged separately by classify()).
int nb_period(const Graph& g, const DirectedEdgeIndex& idx);

// Max over samples of |det(zI - B) - (z^2-1)^{|E|-|V|} det L(z)| relative to
// max(|lhs|, |rhs|, 1). Dense determinants; throws size_error for n > 300.
double ihara_bass_check(const Graph& g, const std::vector<std::complex<double>>& z_samples);

// Dense materialization of B, for verification paths only.
Eigen::MatrixXd dense_nb_matrix(const Graph& g, const DirectedEdgeIndex& idx);

// Real eigenvalues of the dense B (|Im| below tol), for small-graph
// cross-checks against the deformed-Laplacian scan.
std::vector<double> dense_real_eigenvalues(const Graph& g, double imag_tol = 1e-8);

} // namespace nbcolor
