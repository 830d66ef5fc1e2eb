#include "nbcolor/sdp_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nbcolor/errors.hpp"
#include "nbcolor/rng.hpp"

namespace nbcolor {

namespace {

struct MinimaxResult {
    double t_best = std::numeric_limits<double>::infinity(); // min over runs of max edge gram
    Eigen::MatrixXd gram;
    int iterations = 0;
};

double max_edge_gram(const Graph& g, const Eigen::MatrixXd& V) {
    double worst = -std::numeric_limits<double>::infinity();
    for (auto [u, v] : g.edges()) worst = std::max(worst, V.row(u).dot(V.row(v)));
    return worst;
}

// log-sum-exp of edge inner products, stabilized around the max
double smoothed_max(const Graph& g, const Eigen::MatrixXd& V, double beta) {
    double m = max_edge_gram(g, V);
    double s = 0.0;
    for (auto [u, v] : g.edges()) s += std::exp(beta * (V.row(u).dot(V.row(v)) - m));
    return m + std::log(s) / beta;
}

// Minimize the max edge inner product over unit vectors (full-rank
// factorization, projected gradient on the smoothed objective, beta annealed
// stage by stage, several random restarts).
MinimaxResult minimize_max_edge(const Graph& g, const OracleOptions& opts) {
    const int n = g.vertex_count();
    MinimaxResult res;
    res.gram = Eigen::MatrixXd::Identity(n, n);

    for (int restart = 0; restart < opts.restarts; ++restart) {
        auto rng = make_rng(split_seed(opts.seed, static_cast<std::uint64_t>(restart)));
        std::normal_distribution<double> gauss;
        Eigen::MatrixXd V(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) V(i, j) = gauss(rng);
            V.row(i).normalize();
        }

        double eta = 0.5;
        for (double beta = 8.0; beta <= 2.5e5; beta *= 4.0) {
            double f = smoothed_max(g, V, beta);
            for (int it = 0; it < opts.iters_per_stage; ++it) {
                ++res.iterations;
                // gradient of the smoothed max: softmax-weighted neighbor sums
                double m = max_edge_gram(g, V);
                double z_sum = 0.0;
                Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(n, n);
                for (auto [u, v] : g.edges()) {
                    double w = std::exp(beta * (V.row(u).dot(V.row(v)) - m));
                    z_sum += w;
                    grad.row(u) += w * V.row(v);
                    grad.row(v) += w * V.row(u);
                }
                grad /= z_sum;
                // tangential component only
                for (int i = 0; i < n; ++i) grad.row(i) -= grad.row(i).dot(V.row(i)) * V.row(i);
                double gnorm = grad.norm();
                if (gnorm < 1e-14) break;

                bool accepted = false;
                while (eta > 1e-12) {
                    Eigen::MatrixXd W = V - eta * grad;
                    for (int i = 0; i < n; ++i) W.row(i).normalize();
                    double fw = smoothed_max(g, W, beta);
                    if (fw < f) {
                        V = std::move(W);
                        f = fw;
                        accepted = true;
                        break;
                    }
                    eta *= 0.5;
                }
                if (!accepted) break;
                eta = std::min(eta * 1.5, 1.0);
            }
            double exact = max_edge_gram(g, V);
            if (exact < res.t_best) {
                res.t_best = exact;
                res.gram = V * V.transpose();
            }
        }
    }
    return res;
}

} // namespace

FeasibilityResult feasibility(const Graph& g, double kappa, const OracleOptions& opts) {
    const int n = g.vertex_count();
    if (n > 64) throw size_error("feasibility: oracle limited to n <= 64");
    if (!(kappa > 2.0)) throw std::invalid_argument("feasibility: kappa must exceed 2");

    FeasibilityResult res;
    res.gram = Eigen::MatrixXd::Identity(n, n);
    const double threshold = -1.0 / (kappa - 1.0);
    if (g.edge_count() == 0) {
        res.status = FeasibilityStatus::feasible;
        res.margin = -std::numeric_limits<double>::infinity();
        return res;
    }
    MinimaxResult mm = minimize_max_edge(g, opts);
    res.gram = mm.gram;
    res.iterations = mm.iterations;
    res.margin = mm.t_best - threshold;
    if (res.margin <= 1e-12)
        res.status = FeasibilityStatus::feasible;
    else if (res.margin > opts.tol)
        res.status = FeasibilityStatus::infeasible;
    else
        res.status = FeasibilityStatus::inconclusive;
    return res;
}

OracleResult chi_v_exact(const Graph& g, double tol, const OracleOptions& opts) {
    const int n = g.vertex_count();
    if (n > 64) throw size_error("chi_v_exact: oracle limited to n <= 64");

    OracleResult res;
    if (g.edge_count() == 0) {
        res.chi_v = 1.0;
        res.gram = Eigen::MatrixXd::Identity(std::max(n, 1), std::max(n, 1));
        res.bracket = 0.0;
        return res;
    }

    OracleOptions inner = opts;
    inner.tol = tol;
    MinimaxResult mm = minimize_max_edge(g, inner);
    res.gram = mm.gram;
    res.iterations = mm.iterations;

    double t_best = std::max(mm.t_best, -1.0);
    if (!(t_best < -1e-6)) {
        // could not even separate adjacent vectors: no conclusion
        res.conclusive = false;
        res.chi_v = static_cast<double>(n);
        return res;
    }

    // bisection on kappa: feasible iff the achieved optimum clears -1/(kappa-1)
    double lo = 2.0 - 1e-9; // infeasible side (chi_v >= 2 when edges exist)
    double hi = static_cast<double>(std::max(n, 2)) + 1.0; // feasible side
    auto feasible_at = [&](double kappa) { return t_best <= -1.0 / (kappa - 1.0) + 1e-15; };
    if (feasible_at(lo)) {
        res.chi_v = 2.0;
        res.bracket = 0.0;
        res.dual_evidence = 0.0;
        return res;
    }
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (feasible_at(mid))
            hi = mid;
        else
            lo = mid;
    }
    res.chi_v = 0.5 * (lo + hi);
    res.bracket = hi - lo;
    res.dual_evidence = t_best - (-1.0 / (res.chi_v - tol - 1.0));
    return res;
}

} // namespace nbcolor
