#include "nbcolor/deformed_laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "nbcolor/errors.hpp"
#include "nbcolor/rng.hpp"

namespace nbcolor {

Eigen::SparseMatrix<double> adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(2 * static_cast<size_t>(g.edge_count()));
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) trips.emplace_back(u, v, 1.0);
    Eigen::SparseMatrix<double> A(n, n);
    A.setFromTriplets(trips.begin(), trips.end());
    return A;
}

Eigen::MatrixXd dense_deformed_laplacian(const Graph& g, double z) {
    const int n = g.vertex_count();
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u) {
        L(u, u) = z * z + g.degree(u) - 1.0;
        for (int v : g.neighbors(u)) L(u, v) = -z;
    }
    return L;
}

namespace {

constexpr int kDenseThreshold = 512;

double lambda_min_dense(const Graph& g, double z) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_deformed_laplacian(g, z),
                                                      Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

// L(z) v without materializing the matrix.
void apply_L(const Graph& g, double z, const Eigen::VectorXd& v, Eigen::VectorXd& out) {
    const int n = g.vertex_count();
    out.resize(n);
    const double z2 = z * z;
    for (int u = 0; u < n; ++u) {
        double acc = (z2 + g.degree(u) - 1.0) * v(u);
        double nb = 0.0;
        for (int w : g.neighbors(u)) nb += v(w);
        out(u) = acc - z * nb;
    }
}

double operator_scale(const Graph& g, double z) {
    return z * z + 2.0 * std::abs(z) * g.max_degree() + g.max_degree() + 1.0;
}

// Lanczos with full reorthogonalization for the smallest eigenvalue of L(z).
// Returns nullopt on stagnation.
std::optional<double> lambda_min_lanczos(const Graph& g, double z, double rel_tol) {
    const int n = g.vertex_count();
    const int max_steps = std::min(n, 400);
    const double scale = operator_scale(g, z);

    auto rng = make_rng(split_seed(0x1A2C05u, static_cast<std::uint64_t>(n)));
    std::normal_distribution<double> gauss;
    Eigen::VectorXd q(n);
    for (int i = 0; i < n; ++i) q(i) = gauss(rng);
    q.normalize();

    Eigen::MatrixXd Q(n, max_steps + 1);
    Eigen::VectorXd alpha(max_steps), beta(max_steps);
    Q.col(0) = q;
    Eigen::VectorXd w(n);
    double prev_ritz = std::numeric_limits<double>::infinity();
    int k = 0;
    for (; k < max_steps; ++k) {
        apply_L(g, z, Q.col(k), w);
        alpha(k) = Q.col(k).dot(w);
        w -= alpha(k) * Q.col(k);
        if (k > 0) w -= beta(k - 1) * Q.col(k - 1);
        // full reorthogonalization
        w -= Q.leftCols(k + 1) * (Q.leftCols(k + 1).transpose() * w);
        beta(k) = w.norm();

        if ((k + 1) % 10 == 0 || beta(k) <= 1e-14 * scale || k == max_steps - 1) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
            Eigen::MatrixXd T = Eigen::MatrixXd::Zero(k + 1, k + 1);
            for (int i = 0; i <= k; ++i) {
                T(i, i) = alpha(i);
                if (i < k) T(i, i + 1) = T(i + 1, i) = beta(i);
            }
            tri.compute(T);
            double ritz = tri.eigenvalues()(0);
            double bottom_resid = beta(k) * std::abs(tri.eigenvectors().col(0)(k));
            if (bottom_resid <= rel_tol * scale || beta(k) <= 1e-14 * scale) return ritz;
            if (std::abs(ritz - prev_ritz) <= 1e-3 * rel_tol * scale && k > 50)
                return ritz; // stagnated but stable
            prev_ritz = ritz;
        }
        if (beta(k) <= 1e-14 * scale) break;
        Q.col(k + 1) = w / beta(k);
    }
    return std::nullopt;
}

} // namespace

double lambda_min(const Graph& g, double z, EigMode mode) {
    const int n = g.vertex_count();
    if (n == 0) throw eligibility_error("lambda_min: empty graph");
    if (mode == EigMode::dense || (mode == EigMode::automatic && n <= kDenseThreshold))
        return lambda_min_dense(g, z);
    auto res = lambda_min_lanczos(g, z, 1e-8);
    if (res) return *res;
    if (n <= kDenseThreshold) return lambda_min_dense(g, z);
    throw convergence_error("lambda_min: Lanczos stagnation at n=" + std::to_string(n),
                            std::numeric_limits<double>::quiet_NaN());
}

double psd_tolerance(const Graph& g, double z) {
    return 1e-9 * (1.0 + z * z + g.max_degree());
}

bool is_psd(const Graph& g, double z, std::optional<double> tol) {
    const double shift = tol.value_or(psd_tolerance(g, z));
    return lambda_min(g, z) >= -shift;
}

namespace {

double bisect_crossing(const Graph& g, double lo, double hi, double f_lo, double tol) {
    // f(lo) > 0 > f(hi) convention not assumed: track the sign at lo
    double s_lo = f_lo;
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        double f_mid = lambda_min(g, mid);
        if ((f_mid > 0) == (s_lo > 0)) {
            lo = mid;
            s_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

RealEigLocation smallest_real_eig_B(const Graph& core, double tol,
                                    std::optional<double> grid_step) {
    if (core.vertex_count() == 0) throw eligibility_error("smallest_real_eig_B: empty 2-core");
    for (int v = 0; v < core.vertex_count(); ++v)
        if (core.degree(v) < 2)
            throw eligibility_error("smallest_real_eig_B: minimum degree below 2 "
                                    "(apply two_core first)");
    const double z_lo = -(1.0 + core.max_degree()); // diagonally dominant: L(z_lo) PD
    const double step = grid_step.value_or(0.01 * (1.0 + core.max_degree()));

    RealEigLocation loc;
    loc.grid_used = step;

    double prev_z = z_lo;
    double prev_f = lambda_min(core, z_lo);
    for (double zv = z_lo + step; zv < -1.0 + 0.5 * step; zv += step) {
        double zc = std::min(zv, -1.0);
        double f = lambda_min(core, zc);
        if ((prev_f > 0) != (f > 0)) {
            loc.r_star = bisect_crossing(core, prev_z, zc, prev_f, tol);
            loc.method = RealEigMethod::bisection_crossing;
            loc.bracket = tol;
            return loc;
        }
        prev_z = zc;
        prev_f = f;
    }

    if (core.edge_count() > core.vertex_count()) {
        // -1 eigenvalue of multiplicity |E|-|V|, invisible to L
        loc.r_star = -1.0;
        loc.method = RealEigMethod::baseline_minus_one;
        return loc;
    }

    // |E| = |V|: extend the scan toward +1 and take the smallest root found
    auto scan = real_root_scan(core, z_lo, 1.0, step);
    if (!scan.roots.empty()) {
        loc.r_star = scan.roots.front();
        loc.method = RealEigMethod::extended_scan;
        loc.bracket = tol;
        return loc;
    }
    throw eligibility_error("smallest_real_eig_B: no real eigenvalue below rho found");
}

RealRootScan real_root_scan(const Graph& g, double a, double b,
                            std::optional<double> grid_step) {
    if (!(a < b)) throw std::invalid_argument("real_root_scan: empty interval");
    const double step = grid_step.value_or(0.01 * (1.0 + g.max_degree()));
    const double grid_tol = 1e-7 * operator_scale(g, std::max(std::abs(a), std::abs(b)));
    const double refine_tol = 1e-10 * (1.0 + g.max_degree());

    RealRootScan out;
    double prev_z = a;
    double prev_f = lambda_min(g, a);
    for (double zv = a + step; zv <= b + 0.5 * step; zv += step) {
        double zc = std::min(zv, b);
        double f = lambda_min(g, zc);
        if ((prev_f > 0) != (f > 0)) {
            out.roots.push_back(bisect_crossing(g, prev_z, zc, prev_f, refine_tol));
        } else if (std::abs(f) < grid_tol) {
            out.suspected.emplace_back(zc, f);
        }
        prev_z = zc;
        prev_f = f;
        if (zc >= b) break;
    }

    // analytically known roots that L touches tangentially
    auto inject = [&](double z0) {
        for (double r : out.roots)
            if (std::abs(r - z0) < 1e-6) return;
        out.roots.push_back(z0);
    };
    if (a <= 1.0 && 1.0 <= b) inject(1.0); // L(1) = D - A, the Laplacian kernel
    if (a <= -1.0 && -1.0 <= b && bipartition(g).has_value())
        inject(-1.0); // L(-1) = D + A, singular exactly when bipartite
    std::sort(out.roots.begin(), out.roots.end());

    // drop suspected points explained by a detected root nearby
    std::erase_if(out.suspected, [&](const std::pair<double, double>& s) {
        for (double r : out.roots)
            if (std::abs(s.first - r) <= 2.0 * step) return true;
        return false;
    });
    return out;
}

} // namespace nbcolor
