#include "nbcolor/vector_coloring.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "nbcolor/eligibility.hpp"
#include "nbcolor/errors.hpp"

namespace nbcolor {

WalkModel make_walk_model(const Graph& g) {
    WalkModel wm;
    wm.idx = edge_index(g);
    wm.perron = perron(g, wm.idx);
    return wm;
}

double walk_prob(const Graph& g, const WalkModel& wm, int i, int j) {
    if (i == j) throw std::domain_error("walk_prob: distance must be >= 1");
    auto ball = bfs_ball(g, i, g.vertex_count());
    int s = ball.dist[j];
    if (s < 1) throw std::domain_error("walk_prob: target unreachable");
    int u = ball.parent[j]; // last vertex before j on the unique shortest path
    double phi_arc = wm.perron.phi[wm.idx.arc(g, u, j)];
    return phi_arc / (std::pow(wm.perron.rho, s - 1) * wm.perron.phi_vertex[i]);
}

VectorColoring build_vectors(const Graph& g, int m) {
    if (m < 2)
        throw eligibility_error("build_vectors: m must be >= 2 (bound vacuous at m = 1)");
    auto rep = classify(g);
    if (!rep.eligible)
        throw eligibility_error("build_vectors: ineligible graph: " + rep.reason);
    if (rep.two_core_size != g.vertex_count())
        throw eligibility_error("build_vectors: graph must equal its 2-core "
                                "(apply two_core first)");
    if (!rep.girth_value || *rep.girth_value < 2 * m + 1)
        throw eligibility_error("build_vectors: girth too small for m = " + std::to_string(m) +
                                " (m_max = " + std::to_string(rep.m_max) + ")");

    const int n = g.vertex_count();
    WalkModel wm = make_walk_model(g);
    const double rho = wm.perron.rho;
    const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));

    // One coordinate per directed arc of arrival. Vertices equidistant from
    // both endpoints of an edge (possible when the girth is exactly 2m + 1)
    // are reached through distinct arcs, so their contributions land in
    // orthogonal coordinates and the edge inner products keep the exact
    // closed form; indexing by endpoint vertex would instead pick up spurious
    // positive same-layer terms.
    VectorColoring vc;
    vc.m = m;
    std::vector<Eigen::Triplet<double>> trips;
    for (int i = 0; i < n; ++i) {
        auto ball = bfs_ball(g, i, m);
        for (int j = 0; j < n; ++j) {
            int s = ball.dist[j];
            if (s < 1 || s > m) continue;
            int arc = wm.idx.arc(g, ball.parent[j], j);
            double p = wm.perron.phi[arc] / (std::pow(rho, s - 1) * wm.perron.phi_vertex[i]);
            double coord = inv_sqrt_m * (s % 2 == 0 ? 1.0 : -1.0) * std::sqrt(p);
            trips.emplace_back(i, arc, coord);
        }
    }
    vc.vectors.resize(n, wm.idx.arc_count());
    vc.vectors.setFromTriplets(trips.begin(), trips.end());
    vc.gram = Eigen::MatrixXd(vc.vectors * Eigen::SparseMatrix<double>(vc.vectors.transpose()));

    double worst = 0.0; // max edge Gram entry (least negative)
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (first || vc.gram(u, v) > worst) worst = vc.gram(u, v);
        first = false;
    }
    vc.kappa = 1.0 + 1.0 / std::abs(worst);
    return vc;
}

VerifyColoringResult verify_coloring(const Graph& g, const VectorColoring& vc,
                                     double kappa_claim) {
    VerifyColoringResult res;
    const int n = g.vertex_count();
    if (vc.gram.rows() != n || vc.gram.cols() != n) return res;

    for (int i = 0; i < n; ++i)
        res.max_norm_dev = std::max(res.max_norm_dev, std::abs(std::sqrt(vc.gram(i, i)) - 1.0));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(vc.gram, Eigen::EigenvaluesOnly);
    res.gram_lambda_min = es.eigenvalues()(0);

    const double threshold = -1.0 / (kappa_claim - 1.0);
    bool edges_ok = true;
    bool first = true;
    for (auto [u, v] : g.edges()) {
        double entry = vc.gram(u, v);
        if (first || entry > res.worst_entry) {
            res.worst_entry = entry;
            res.worst_edge = {u, v};
        }
        first = false;
        if (entry > threshold + 1e-9) edges_ok = false;
    }
    res.ok = edges_ok && res.max_norm_dev <= 1e-9 && res.gram_lambda_min >= -1e-8 * n;
    return res;
}

VectorColoring patch_colorings(const Graph& g,
                               const std::vector<int>& lambda_set,
                               const VectorColoring& lambda_vc,
                               const std::vector<int>& upsilon,
                               const std::vector<int>& sigma,
                               const std::vector<int>& boundary) {
    const int n = g.vertex_count();
    std::vector<int> role(n, -1); // 0 = lambda, 1 = boundary, 2 = upsilon
    std::vector<int> local(n, -1);
    std::vector<int> lam = lambda_set, ups = upsilon, bnd = boundary;
    std::sort(lam.begin(), lam.end());
    std::sort(ups.begin(), ups.end());
    std::sort(bnd.begin(), bnd.end());
    auto assign = [&](const std::vector<int>& set, int r) {
        for (size_t k = 0; k < set.size(); ++k) {
            int v = set[k];
            if (v < 0 || v >= n || role[v] != -1)
                throw eligibility_error("patch_colorings: sets do not partition V");
            role[v] = r;
            local[v] = static_cast<int>(k);
        }
    };
    assign(lam, 0);
    assign(bnd, 1);
    assign(ups, 2);
    for (int v = 0; v < n; ++v)
        if (role[v] == -1)
            throw eligibility_error("patch_colorings: vertex " + std::to_string(v) +
                                    " not covered by the partition");
    if (static_cast<int>(lam.size()) != lambda_vc.gram.rows())
        throw eligibility_error("patch_colorings: lambda coloring size mismatch");
    if (sigma.size() != ups.size())
        throw eligibility_error("patch_colorings: sigma size mismatch");
    for (int c : sigma)
        if (c < 1 || c > 3) throw eligibility_error("patch_colorings: sigma colors must be 1..3");

    for (auto [u, v] : g.edges()) {
        if (role[u] == 1 && role[v] == 1)
            throw eligibility_error("patch_colorings: boundary not independent (edge " +
                                    std::to_string(u) + "-" + std::to_string(v) + ")");
        if ((role[u] == 0 && role[v] == 2) || (role[u] == 2 && role[v] == 0))
            throw eligibility_error("patch_colorings: edge between lambda part and upsilon");
        if (role[u] == 2 && role[v] == 2 && sigma[local[u]] == sigma[local[v]])
            throw eligibility_error("patch_colorings: sigma not proper on upsilon");
    }

    const double kappa = lambda_vc.kappa;
    const int base_dim = static_cast<int>(lambda_vc.vectors.cols());
    const int dim = base_dim + 3; // two coordinates for the w triangle, one for zeta
    // unit vectors at pairwise inner product -1/2
    const double w_coords[3][2] = {{1.0, 0.0},
                                   {-0.5, std::sqrt(3.0) / 2.0},
                                   {-0.5, -std::sqrt(3.0) / 2.0}};
    const double lam_scale = std::sqrt(kappa * kappa - 1.0) / kappa;
    const double ups_scale = std::sqrt(8.0) / 3.0;

    std::vector<Eigen::Triplet<double>> trips;
    for (int v = 0; v < n; ++v) {
        switch (role[v]) {
        case 0: { // lambda: shrink toward -zeta
            for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(
                     lambda_vc.vectors, local[v]);
                 it; ++it)
                trips.emplace_back(v, static_cast<int>(it.col()), lam_scale * it.value());
            trips.emplace_back(v, dim - 1, -1.0 / kappa);
            break;
        }
        case 1: // boundary: zeta itself
            trips.emplace_back(v, dim - 1, 1.0);
            break;
        case 2: { // upsilon: triangle corner minus zeta component
            int c = sigma[local[v]] - 1;
            trips.emplace_back(v, base_dim, ups_scale * w_coords[c][0]);
            trips.emplace_back(v, base_dim + 1, ups_scale * w_coords[c][1]);
            trips.emplace_back(v, dim - 1, -1.0 / 3.0);
            break;
        }
        }
    }

    VectorColoring out;
    out.m = lambda_vc.m;
    out.vectors.resize(n, dim);
    out.vectors.setFromTriplets(trips.begin(), trips.end());
    out.gram = Eigen::MatrixXd(out.vectors * Eigen::SparseMatrix<double>(out.vectors.transpose()));
    double worst = 0.0;
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (first || out.gram(u, v) > worst) worst = out.gram(u, v);
        first = false;
    }
    out.kappa = first ? 1.0 : 1.0 + 1.0 / std::abs(worst);
    return out;
}

std::vector<int> expand_uncolorable(const Graph& g, const std::vector<int>& upsilon0) {
    const int n = g.vertex_count();
    std::vector<bool> in_set(n, false);
    for (int v : upsilon0) in_set[v] = true;
    auto touches_set = [&](int v) {
        for (int w : g.neighbors(v))
            if (in_set[w]) return true;
        return false;
    };
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto [u, v] : g.edges()) {
            if (in_set[u] || in_set[v]) continue;
            if (touches_set(u) && touches_set(v)) {
                in_set[u] = in_set[v] = true;
                grew = true;
            }
        }
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (in_set[v]) out.push_back(v);
    return out;
}

AlonBoppanaWitness alon_boppana_witness(const Graph& g, int m, double z) {
    if (!(z < 0.0)) throw std::domain_error("alon_boppana_witness: z must be negative");
    VectorColoring vc = build_vectors(g, m);
    WalkModel wm = make_walk_model(g);
    const int n = g.vertex_count();
    Eigen::VectorXd sqrt_phi(n);
    for (int i = 0; i < n; ++i) sqrt_phi(i) = std::sqrt(wm.perron.phi_vertex[i]);
    AlonBoppanaWitness wit;
    wit.X = sqrt_phi.asDiagonal() * vc.gram * sqrt_phi.asDiagonal();
    double val = 0.0;
    for (int u = 0; u < n; ++u) {
        val += wit.X(u, u) * (z * z + g.degree(u) - 1.0);
        for (int v : g.neighbors(u)) val -= z * wit.X(u, v);
    }
    wit.value = val;
    return wit;
}

// --- export / import --------------------------------------------------------

std::string gram_matrix_market(const VectorColoring& vc) {
    const int n = static_cast<int>(vc.gram.rows());
    std::ostringstream out;
    out.precision(17);
    std::int64_t nnz = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (vc.gram(i, j) != 0.0) ++nnz;
    out << "%%MatrixMarket matrix coordinate real symmetric\n";
    out << n << " " << n << " " << nnz << "\n";
    for (int j = 0; j < n; ++j)
        for (int i = j; i < n; ++i)
            if (vc.gram(i, j) != 0.0) out << i + 1 << " " << j + 1 << " " << vc.gram(i, j) << "\n";
    return out.str();
}

std::string vectors_text(const VectorColoring& vc) {
    const int n = static_cast<int>(vc.vectors.rows());
    const int dim = static_cast<int>(vc.vectors.cols());
    Eigen::MatrixXd dense(vc.vectors);
    std::ostringstream out;
    out.precision(17);
    out << n << " " << dim << "\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < dim; ++j) out << (j ? " " : "") << dense(i, j);
        out << "\n";
    }
    return out.str();
}

VectorColoring load_vectors_text(std::istream& in, const Graph& g) {
    int n = 0, dim = 0;
    if (!(in >> n >> dim)) throw parse_error("vectors file: malformed header");
    if (n != g.vertex_count())
        throw parse_error("vectors file: vertex count does not match graph");
    Eigen::MatrixXd dense(n, dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < dim; ++j)
            if (!(in >> dense(i, j))) throw parse_error("vectors file: truncated row");
    VectorColoring vc;
    vc.vectors = dense.sparseView();
    vc.gram = dense * dense.transpose();
    double worst = 0.0;
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (first || vc.gram(u, v) > worst) worst = vc.gram(u, v);
        first = false;
    }
    vc.kappa = first ? 1.0 : 1.0 + 1.0 / std::abs(worst);
    return vc;
}

} // namespace nbcolor
