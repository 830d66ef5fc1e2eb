#include "nbcolor/nb_operator.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <queue>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "nbcolor/deformed_laplacian.hpp"
#include "nbcolor/errors.hpp"
#include "nbcolor/graph.hpp"

namespace nbcolor {

int DirectedEdgeIndex::arc(const Graph& g, int i, int j) const {
    const auto& nbrs = g.neighbors(i);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), j);
    if (it == nbrs.end() || *it != j)
        throw std::out_of_range("arc: vertices not adjacent");
    return offsets[i] + static_cast<int>(it - nbrs.begin());
}

DirectedEdgeIndex edge_index(const Graph& g) {
    const int n = g.vertex_count();
    DirectedEdgeIndex idx;
    idx.offsets.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) idx.offsets[v + 1] = idx.offsets[v] + g.degree(v);
    const int arcs = idx.offsets[n];
    idx.tail.resize(arcs);
    idx.head.resize(arcs);
    idx.rev.resize(arcs);
    for (int v = 0; v < n; ++v) {
        int base = idx.offsets[v];
        const auto& nbrs = g.neighbors(v);
        for (size_t k = 0; k < nbrs.size(); ++k) {
            idx.tail[base + static_cast<int>(k)] = v;
            idx.head[base + static_cast<int>(k)] = nbrs[k];
        }
    }
    for (int e = 0; e < arcs; ++e) idx.rev[e] = idx.arc(g, idx.head[e], idx.tail[e]);
    return idx;
}

void nb_matvec(const DirectedEdgeIndex& idx, const std::vector<double>& x,
               std::vector<double>& y) {
    const int arcs = idx.arc_count();
    if (static_cast<int>(x.size()) != arcs)
        throw std::invalid_argument("nb_matvec: dimension mismatch");
    y.assign(arcs, 0.0);
    const int n = static_cast<int>(idx.offsets.size()) - 1;
    // out-sum per vertex, then subtract the backtracking term
    std::vector<double> out_sum(n, 0.0);
    for (int e = 0; e < arcs; ++e) out_sum[idx.tail[e]] += x[e];
    for (int e = 0; e < arcs; ++e) y[e] = out_sum[idx.head[e]] - x[idx.rev[e]];
}

std::vector<double> nb_matvec(const DirectedEdgeIndex& idx, const std::vector<double>& x) {
    std::vector<double> y;
    nb_matvec(idx, x, y);
    return y;
}

namespace {

// Cheap eligibility gate (no girth): connected, min degree 2, non-bipartite,
// not a cycle, period 1.
void require_perron_eligible(const Graph& g, const DirectedEdgeIndex& idx) {
    if (g.vertex_count() == 0) throw eligibility_error("empty graph");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < 2)
            throw eligibility_error("minimum degree below 2 (apply two_core first)");
    if (!is_connected(g)) throw eligibility_error("graph not connected");
    bool cycle = g.edge_count() == g.vertex_count() &&
                 g.max_degree() == 2;
    if (cycle) throw eligibility_error("graph is a cycle (B reducible)");
    if (bipartition(g)) throw eligibility_error("graph is bipartite (B has even period)");
    int p = nb_period(g, idx);
    if (p != 1)
        throw eligibility_error("B has period " + std::to_string(p) +
                                " (graph is a subdivision)");
}

} // namespace

PerronData perron(const Graph& g, const DirectedEdgeIndex& idx, double tol,
                  std::int64_t max_iters) {
    require_perron_eligible(g, idx);
    const int arcs = idx.arc_count();
    std::vector<double> x(arcs, 1.0), y;
    double rho = 0.0, best_residual = std::numeric_limits<double>::infinity();
    std::int64_t it = 0;
    for (; it < max_iters; ++it) {
        nb_matvec(idx, x, y);
        double norm = *std::max_element(y.begin(), y.end());
        if (norm <= 0.0) throw convergence_error("perron: iterate vanished", 1.0);
        // Collatz-Wielandt bracket on the Rayleigh-style estimate
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (int e = 0; e < arcs; ++e) {
            double ratio = y[e] / x[e];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        rho = 0.5 * (lo + hi);
        double resid = 0.0, xmax = 0.0;
        for (int e = 0; e < arcs; ++e) {
            resid = std::max(resid, std::abs(y[e] - rho * x[e]));
            xmax = std::max(xmax, x[e]);
        }
        resid /= xmax;
        best_residual = std::min(best_residual, resid);
        for (int e = 0; e < arcs; ++e) x[e] = y[e] / norm;
        if (resid <= tol) break;
    }
    if (it == max_iters)
        throw convergence_error("perron: no convergence within iteration cap", best_residual);

    PerronData pd;
    pd.rho = rho;
    pd.phi = std::move(x);
    const int n = g.vertex_count();
    pd.phi_vertex.assign(n, 0.0);
    for (int e = 0; e < arcs; ++e) pd.phi_vertex[idx.tail[e]] += pd.phi[e];
    double total = std::accumulate(pd.phi_vertex.begin(), pd.phi_vertex.end(), 0.0);
    for (auto& p : pd.phi) p /= total;
    for (auto& p : pd.phi_vertex) p /= total;
    // recorded residual at the normalized phi
    nb_matvec(idx, pd.phi, y);
    double resid = 0.0, pmax = 0.0;
    for (int e = 0; e < arcs; ++e) {
        resid = std::max(resid, std::abs(y[e] - pd.rho * pd.phi[e]));
        pmax = std::max(pmax, pd.phi[e]);
    }
    pd.residual = resid / pmax;
    return pd;
}

int nb_period(const Graph& g, const DirectedEdgeIndex& idx) {
    if (g.vertex_count() == 0) throw eligibility_error("empty 2-core");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < 2) throw eligibility_error("nb_period requires minimum degree 2");
    if (!is_connected(g)) throw eligibility_error("nb_period requires a connected graph");
    const int arcs = idx.arc_count();
    std::vector<int> level(arcs, -1);
    std::queue<int> q;
    level[0] = 0;
    q.push(0);
    std::int64_t gcd_acc = 0;
    while (!q.empty()) {
        int e = q.front();
        q.pop();
        int j = idx.head[e];
        for (int f = idx.offsets[j]; f < idx.offsets[j + 1]; ++f) {
            if (f == idx.rev[e]) continue; // backtracking
            if (level[f] == -1) {
                level[f] = level[e] + 1;
                q.push(f);
            } else {
                gcd_acc = std::gcd(gcd_acc, static_cast<std::int64_t>(level[e] + 1 - level[f]));
            }
        }
    }
    // second pass: non-tree arcs discovered after both endpoints were leveled
    for (int e = 0; e < arcs; ++e) {
        if (level[e] == -1) continue;
        int j = idx.head[e];
        for (int f = idx.offsets[j]; f < idx.offsets[j + 1]; ++f) {
            if (f == idx.rev[e] || level[f] == -1) continue;
            gcd_acc = std::gcd(gcd_acc, static_cast<std::int64_t>(level[e] + 1 - level[f]));
        }
    }
    return static_cast<int>(gcd_acc == 0 ? arcs : std::abs(gcd_acc));
}

Eigen::MatrixXd dense_nb_matrix(const Graph& g, const DirectedEdgeIndex& idx) {
    const int arcs = idx.arc_count();
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(arcs, arcs);
    for (int e = 0; e < arcs; ++e) {
        int j = idx.head[e];
        for (int f = idx.offsets[j]; f < idx.offsets[j + 1]; ++f)
            if (f != idx.rev[e]) B(e, f) = 1.0;
    }
    return B;
}

double ihara_bass_check(const Graph& g, const std::vector<std::complex<double>>& z_samples) {
    if (g.vertex_count() > 300)
        throw size_error("ihara_bass_check: dense determinant limited to n <= 300");
    const auto idx = edge_index(g);
    const int n = g.vertex_count();
    const std::int64_t m = g.edge_count();
    Eigen::MatrixXcd B = dense_nb_matrix(g, idx).cast<std::complex<double>>();
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
    Eigen::VectorXcd degm1(n);
    for (int u = 0; u < n; ++u) {
        degm1(u) = std::complex<double>(g.degree(u) - 1.0, 0.0);
        for (int v : g.neighbors(u)) A(u, v) = 1.0;
    }
    const Eigen::MatrixXcd I2m = Eigen::MatrixXcd::Identity(2 * static_cast<int>(m),
                                                            2 * static_cast<int>(m));
    double worst = 0.0;
    for (auto z : z_samples) {
        std::complex<double> lhs = (z * I2m - B).partialPivLu().determinant();
        Eigen::MatrixXcd L = -z * A;
        for (int u = 0; u < n; ++u) L(u, u) += z * z + degm1(u);
        std::complex<double> detL = L.partialPivLu().determinant();
        std::complex<double> factor = std::pow(z * z - 1.0, static_cast<double>(m - n));
        std::complex<double> rhs = factor * detL;
        double denom = std::max({std::abs(lhs), std::abs(rhs), 1.0});
        worst = std::max(worst, std::abs(lhs - rhs) / denom);
    }
    return worst;
}

std::vector<double> dense_real_eigenvalues(const Graph& g, double imag_tol) {
    const auto idx = edge_index(g);
    Eigen::MatrixXd B = dense_nb_matrix(g, idx);
    Eigen::EigenSolver<Eigen::MatrixXd> es(B, /*computeEigenvectors=*/false);
    std::vector<double> out;
    for (int k = 0; k < es.eigenvalues().size(); ++k) {
        auto ev = es.eigenvalues()(k);
        if (std::abs(ev.imag()) <= imag_tol * std::max(1.0, std::abs(ev)))
            out.push_back(ev.real());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace nbcolor
